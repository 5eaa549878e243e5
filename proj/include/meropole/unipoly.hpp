#pragma once

#include "meropole/multipoly.hpp"
#include "meropole/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace meropole {

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upwards. The zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::string variable, std::vector<Rational> coeffs = {});

    static UniPoly from_multi(const MultiPoly& p);  // p must involve at most one variable
    MultiPoly to_multi(const std::vector<std::string>& variables) const;

    const std::string& variable() const { return var_; }
    const std::vector<Rational>& coefficients() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rational& leading() const { return c_.back(); }
    Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Rational evaluate(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division over the rationals: a = q*b + r, deg r < deg b.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

    std::string to_string() const;

private:
    void trim();

    std::string var_;
    std::vector<Rational> c_;
};

/// Monic gcd (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
    UniPoly g, s, t;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

UniPoly squarefree_part(const UniPoly& u);

/// Rational roots of U together with the square-free part of what is left
/// once every rational linear factor has been divided out.
struct RationalRoots {
    std::vector<Rational> roots;  // ascending, distinct
    UniPoly remainder;            // monic, square-free, no rational roots
};

/// Throws InputError on the zero polynomial.
RationalRoots rational_roots(const UniPoly& u);

}  // namespace meropole
