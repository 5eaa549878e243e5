#pragma once

#include "meropole/multipoly.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace meropole {

inline constexpr int kDefaultJetCap = 64;

/// A polynomial germ at the origin of its variables.
class Germ {
public:
    explicit Germ(MultiPoly poly) : poly_(std::move(poly)) {}
    const MultiPoly& poly() const { return poly_; }
    bool vanishes() const { return poly_.constant_term().is_zero(); }

private:
    MultiPoly poly_;
};

/// dim_Q of O/(I + m^k) for the smallest k with that dimension equal at k
/// and k+1, which forces m^k into I and makes it the local quotient
/// dimension.
struct LocalQuotient {
    std::size_t dimension = 0;
    int stabilization_degree = 1;
    std::vector<Exponent> basis;  // standard monomials, lowest degree first
};

/// Local quotient of the polynomial ring at the origin by the ideal spanned
/// by `generators`. Throws NonIsolated when the dimensions do not stabilize
/// below `cap`.
LocalQuotient local_quotient(std::span<const MultiPoly> generators, int cap = kDefaultJetCap);

struct MilnorResult {
    std::size_t mu = 0;
    int stabilization_degree = 1;
    std::vector<Exponent> basis_monomials;
};

/// Milnor number of a germ vanishing at the origin (NotVanishing otherwise).
MilnorResult milnor_number(const Germ& g, int cap = kDefaultJetCap);

/// Local intersection multiplicity at the origin; nullopt means infinite
/// (a common curve component through the origin).
std::optional<std::size_t> local_intersection_multiplicity(const Germ& u, const Germ& v, int cap = kDefaultJetCap);

/// n minus the rank of the Hessian at the origin. Requires a vanishing
/// linear part (NonzeroLinearPart otherwise).
int hessian_corank(const Germ& g);

enum class GermType { Smooth, A, D, E, Unclassified };

struct GermClass {
    GermType type = GermType::Unclassified;
    int index = 0;  // k in A_k, D_k, E_k
    int mu = 0;
    int corank = 0;

    std::string label() const;  // "Smooth", "A_2", "D_5", "E_6", "Unclassified"
    friend bool operator==(const GermClass&, const GermClass&) = default;
};

/// ADE recognition for plane curve germs (exactly two variables).
GermClass classify_plane_germ(const Germ& g, int cap = kDefaultJetCap);

}  // namespace meropole
