#include "meropole/local_algebra.hpp"

#include "meropole/elimination.hpp"
#include "meropole/errors.hpp"

#include <algorithm>
#include <map>

namespace meropole {
namespace {

void monomials_of_degree(std::size_t n, unsigned d, Exponent& cur, std::size_t i, std::vector<Exponent>& out) {
    if (i + 1 == n) {
        cur[i] = d;
        out.push_back(cur);
        return;
    }
    for (unsigned k = d + 1; k-- > 0;) {
        cur[i] = k;
        monomials_of_degree(n, d - k, cur, i + 1, out);
    }
}

// All monomials of degree < k, highest degree first (so pivots land on high
// degree terms and the surviving columns are the low-degree standard
// monomials).
std::vector<Exponent> monomials_below(std::size_t n, unsigned k) {
    std::vector<Exponent> out;
    if (n == 0) {
        if (k > 0) out.emplace_back();
        return out;
    }
    Exponent cur(n, 0);
    for (unsigned d = k; d-- > 0;) monomials_of_degree(n, d, cur, 0, out);
    return out;
}

using SparseRow = std::vector<std::pair<std::size_t, BigInt>>;

void make_primitive(SparseRow& row) {
    BigInt g = 0;
    for (const auto& [c, v] : row) g = gcd(g, v);
    if (g > 1)
        for (auto& [c, v] : row) v /= g;
}

// r <- p_c * r - r_c * p, where c is the leading column of p.
SparseRow eliminate(const SparseRow& r, const SparseRow& p, const BigInt& rc) {
    const BigInt& pc = p.front().second;
    SparseRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, pc * r[i].second);
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, BigInt(-rc * p[j].second));
            ++j;
        } else {
            BigInt v = pc * r[i].second - rc * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    make_primitive(out);
    return out;
}

struct JetDimension {
    std::size_t dimension = 0;
    std::vector<Exponent> basis;
};

// dim of Q[x]_{<k} modulo truncations of monomial multiples of the
// generators, by fraction-free elimination with deterministic pivoting.
JetDimension jet_dimension(std::span<const MultiPoly> gens, std::size_t n, unsigned k) {
    const std::vector<Exponent> cols = monomials_below(n, k);
    std::map<Exponent, std::size_t> col_of;
    for (std::size_t i = 0; i < cols.size(); ++i) col_of.emplace(cols[i], i);

    std::map<std::size_t, SparseRow> pivots;
    for (const auto& g : gens) {
        const MultiPoly gt = g.truncated_below(k);
        if (gt.is_zero()) continue;
        const unsigned ord = static_cast<unsigned>(gt.order());
        for (const auto& m : cols) {
            if (total_degree(m) + ord >= k) continue;
            std::map<std::size_t, Rational> dense;
            for (const auto& [e, c] : gt.terms()) {
                Exponent f = e;
                for (std::size_t i = 0; i < n; ++i) f[i] += m[i];
                if (total_degree(f) >= k) continue;
                dense.emplace(col_of.at(f), c);
            }
            if (dense.empty()) continue;
            BigInt den = 1;
            for (const auto& [c, v] : dense) den = lcm(den, v.denominator());
            SparseRow row;
            for (const auto& [c, v] : dense) row.emplace_back(c, v.numerator() * (den / v.denominator()));
            make_primitive(row);
            while (!row.empty()) {
                auto it = pivots.find(row.front().first);
                if (it == pivots.end()) {
                    const std::size_t lead = row.front().first;
                    pivots.emplace(lead, std::move(row));
                    break;
                }
                const BigInt rc = row.front().second;
                row = eliminate(row, it->second, rc);
            }
        }
    }
    JetDimension out;
    out.dimension = cols.size() - pivots.size();
    for (std::size_t i = cols.size(); i-- > 0;)
        if (pivots.find(i) == pivots.end()) out.basis.push_back(cols[i]);
    return out;
}

}  // namespace

LocalQuotient local_quotient(std::span<const MultiPoly> generators, int cap) {
    if (generators.empty()) throw InputError("local quotient needs at least one generator");
    const std::size_t n = generators.front().arity();
    for (const auto& g : generators)
        if (g.variables() != generators.front().variables()) throw InputError("variable-list mismatch");
    JetDimension prev = jet_dimension(generators, n, 1);
    for (int k = 1; k <= cap; ++k) {
        JetDimension next = jet_dimension(generators, n, static_cast<unsigned>(k + 1));
        if (next.dimension == prev.dimension) {
            LocalQuotient out;
            out.dimension = prev.dimension;
            out.stabilization_degree = k;
            out.basis = std::move(prev.basis);
            return out;
        }
        prev = std::move(next);
    }
    throw NonIsolated("local quotient did not stabilize below jet order " + std::to_string(cap) +
                      ": not isolated or cap too low");
}

MilnorResult milnor_number(const Germ& g, int cap) {
    if (!g.vanishes()) throw NotVanishing("germ does not vanish at the origin: " + g.poly().to_string());
    std::vector<MultiPoly> partials;
    for (std::size_t i = 0; i < g.poly().arity(); ++i) partials.push_back(g.poly().derivative(i));
    if (std::all_of(partials.begin(), partials.end(), [](const MultiPoly& p) { return p.is_zero(); }))
        throw NonIsolated("germ has identically vanishing gradient");
    const LocalQuotient lq = local_quotient(partials, cap);
    return MilnorResult{lq.dimension, lq.stabilization_degree, lq.basis};
}

std::optional<std::size_t> local_intersection_multiplicity(const Germ& u, const Germ& v, int cap) {
    if (!u.vanishes() || !v.vanishes()) throw NotVanishing("intersection multiplicity needs germs through the origin");
    const MultiPoly g = multivariate_gcd(u.poly(), v.poly());
    if (!g.is_constant() && g.constant_term().is_zero()) return std::nullopt;
    const MultiPoly gens[] = {u.poly(), v.poly()};
    return local_quotient(gens, cap).dimension;
}

int hessian_corank(const Germ& g) {
    const MultiPoly& p = g.poly();
    const std::size_t n = p.arity();
    if (!p.homogeneous_part(1).is_zero()) throw NonzeroLinearPart("germ has a nonzero linear part");
    std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Exponent e(n, 0);
            e[i] += 1;
            e[j] += 1;
            h[i][j] = p.coefficient(e) * Rational(i == j ? 2 : 1);
        }
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && h[piv][col].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(h[piv], h[rank]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || h[r][col].is_zero()) continue;
            const Rational f = h[r][col] / h[rank][col];
            for (std::size_t c = col; c < n; ++c) h[r][c] -= f * h[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(n - rank);
}

std::string GermClass::label() const {
    switch (type) {
        case GermType::Smooth: return "Smooth";
        case GermType::A: return "A_" + std::to_string(index);
        case GermType::D: return "D_" + std::to_string(index);
        case GermType::E: return "E_" + std::to_string(index);
        case GermType::Unclassified: break;
    }
    return "Unclassified";
}

GermClass classify_plane_germ(const Germ& g, int cap) {
    if (g.poly().arity() != 2) throw InputError("classification is implemented for plane curve germs only");
    const MilnorResult m = milnor_number(g, cap);
    GermClass out;
    out.mu = static_cast<int>(m.mu);
    if (m.mu == 0) {
        out.type = GermType::Smooth;
        return out;
    }
    out.corank = hessian_corank(g);
    if (out.corank <= 1) {
        out.type = GermType::A;
        out.index = out.mu;
        return out;
    }
    const MultiPoly& p = g.poly();
    const Rational a = p.coefficient({3, 0});
    const Rational b = p.coefficient({2, 1});
    const Rational c = p.coefficient({1, 2});
    const Rational d = p.coefficient({0, 3});
    const bool cubic_zero = a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero();
    const Rational disc = b * b * c * c - Rational(4) * a * c * c * c - Rational(4) * b * b * b * d -
                          Rational(27) * a * a * d * d + Rational(18) * a * b * c * d;
    const bool perfect_cube = b * b == Rational(3) * a * c && b * c == Rational(9) * a * d && c * c == Rational(3) * b * d;
    if (!cubic_zero && !disc.is_zero()) {
        if (out.mu == 4) {
            out.type = GermType::D;
            out.index = 4;
        }
        return out;
    }
    if (!cubic_zero && !perfect_cube) {
        if (out.mu >= 5) {
            out.type = GermType::D;
            out.index = out.mu;
        }
        return out;
    }
    if (out.mu >= 6 && out.mu <= 8) {
        out.type = GermType::E;
        out.index = out.mu;
    }
    return out;
}

}  // namespace meropole
