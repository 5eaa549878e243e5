#pragma once

#include "meropole/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace meropole {

using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

/// Graded lexicographic order, highest term first. Variables compare in
/// declaration order.
struct GrlexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial over the rationals in an ordered list of named variables.
///
/// Terms live in a map keyed by exponent vector, so two equal polynomials
/// over the same variable list have identical representations. Zero
/// coefficients are never stored. Binary arithmetic requires identical
/// variable lists; use `embed` to move a polynomial into a larger list.
class MultiPoly {
public:
    using TermMap = std::map<Exponent, Rational, GrlexDescending>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> variables);

    static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
    static MultiPoly variable(std::vector<std::string> variables, std::string_view name);
    static MultiPoly monomial(std::vector<std::string> variables, Exponent e, const Rational& c);

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t arity() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Index of `name` in the variable list; throws InputError when absent.
    std::size_t index_of(std::string_view name) const;
    bool has_variable(std::string_view name) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Exponent& e) const;

    /// Leading term under grlex; undefined on zero.
    const Exponent& leading_exponent() const { return terms_.begin()->first; }
    const Rational& leading_coefficient() const { return terms_.begin()->second; }

    int total_degree() const;  // -1 for zero
    int degree_in(std::size_t var) const;  // -1 for zero
    /// Lowest total degree of any term (order at the origin); -1 for zero.
    int order() const;

    /// Coefficients c_i with P = sum c_i * v^i; each c_i keeps the full
    /// variable list with exponent 0 in v.
    std::vector<MultiPoly> coefficients_in(std::size_t var) const;
    static MultiPoly from_coefficients(std::span<const MultiPoly> coeffs, std::size_t var);

    /// Homogeneous component of total degree d.
    MultiPoly homogeneous_part(unsigned d) const;
    /// Terms of total degree < k.
    MultiPoly truncated_below(unsigned k) const;

    void add_term(const Exponent& e, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    /// Multiplies by the monomial with exponent e.
    MultiPoly shifted(const Exponent& e) const;

    Rational evaluate(std::span<const Rational> point) const;
    MultiPoly derivative(std::string_view var) const;
    MultiPoly derivative(std::size_t var) const;

    /// Substitutes bound variables. The result's variables are the unbound
    /// variables of P followed by any new variables introduced by the bound
    /// expressions, in order of first appearance.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const;
    MultiPoly substitute(const std::map<std::string, Rational>& values) const;

    /// Re-expresses P over `variables`, which must contain every variable
    /// of P that actually occurs.
    MultiPoly embed(const std::vector<std::string>& variables) const;

    /// Scales to integer coefficients with content 1 and positive leading
    /// coefficient. Zero stays zero.
    MultiPoly normalized() const;
    /// lcm of denominators and gcd of numerators of the coefficients.
    Rational content() const;

    /// Exact quotient if `divisor` divides P, otherwise nullopt.
    std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

    std::string to_string() const;

private:
    void require_same_vars(const MultiPoly& o) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace meropole
