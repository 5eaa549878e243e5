#pragma once

#include "meropole/multipoly.hpp"
#include "meropole/unipoly.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace meropole {

/// Resultant with respect to `var` via the subresultant remainder sequence.
/// The result keeps the variable list of the inputs (with `var` absent from
/// every term). Throws InputError when both inputs are constant in `var`.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var);

/// Pseudo-remainder of a by b in `var`: lc(b)^(da-db+1) * a mod b.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var);

/// gcd over Q[vars], normalized (integer coefficients, content 1,
/// positive grlex-leading coefficient). gcd(0, 0) = 0.
MultiPoly multivariate_gcd(const MultiPoly& p, const MultiPoly& q);

/// Product of the distinct irreducible factors of P, normalized.
MultiPoly squarefree_part(const MultiPoly& p);

/// Divides `p` by `factor` as often as possible; returns the quotient and
/// the exponent that was removed.
std::pair<MultiPoly, unsigned> strip_factor(const MultiPoly& p, const MultiPoly& factor);

/// Restriction of a polynomial that only involves variable `var` to UniPoly.
UniPoly to_unipoly(const MultiPoly& p, std::size_t var);

/// Decides whether the plane system A = B = 0 has a solution whose
/// `base_var` coordinate is a root of the square-free polynomial `h`, and at
/// which `exclude` (if given) does not vanish. Works over Q[base]/(h) and
/// splits h whenever a zero divisor shows up, so h need not be irreducible.
bool has_solution_over(const UniPoly& h, const MultiPoly& a, const MultiPoly& b, const MultiPoly* exclude,
                       std::size_t base_var);

/// Common zeros of two polynomials in exactly two variables.
struct PlaneSolutions {
    std::vector<std::vector<Rational>> points;  // rational solutions, sorted
    /// Eliminant factors whose roots carry non-rational solutions; each is a
    /// polynomial in one of the two variables.
    std::vector<UniPoly> unresolved;
    bool complete() const { return unresolved.empty(); }
};

/// Requires gcd(a, b) constant; throws NonIsolated otherwise. Solutions where
/// `exclude` vanishes are dropped (and do not count against completeness).
PlaneSolutions solve_plane_system(const MultiPoly& a, const MultiPoly& b, const MultiPoly* exclude = nullptr);

}  // namespace meropole
