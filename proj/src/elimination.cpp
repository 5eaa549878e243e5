#include "meropole/elimination.hpp"

#include "meropole/errors.hpp"

#include <algorithm>

namespace meropole {
namespace {

using Coeffs = std::vector<MultiPoly>;

int deg(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

void trim(Coeffs& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
    auto q = a.divide_exact(b);
    if (!q) throw Error("internal: inexact division in remainder sequence");
    return *std::move(q);
}

Coeffs divide_all(const Coeffs& c, const MultiPoly& d) {
    Coeffs out;
    out.reserve(c.size());
    for (const auto& x : c) out.push_back(exact(x, d));
    return out;
}

Coeffs prem(Coeffs a, const Coeffs& b) {
    const int db = deg(b);
    int e = deg(a) - db + 1;
    const MultiPoly& lb = b.back();
    while (!a.empty() && deg(a) >= db) {
        const MultiPoly la = a.back();
        const int shift = deg(a) - db;
        for (auto& x : a) x *= lb;
        for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(j + shift)] -= la * b[static_cast<std::size_t>(j)];
        trim(a);
        --e;
    }
    if (e > 0) {
        const MultiPoly f = lb.pow(static_cast<unsigned>(e));
        for (auto& x : a) x = x * f;
    }
    return a;
}

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
    MultiPoly g(p.variables());
    for (const auto& c : p.coefficients_in(var)) {
        g = multivariate_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

// gcd of two polynomials primitive in `var`, both of positive degree there.
MultiPoly primitive_gcd(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
    Coeffs a = p.coefficients_in(var);
    Coeffs b = q.coefficients_in(var);
    if (deg(a) < deg(b)) std::swap(a, b);
    const auto& vars = p.variables();
    MultiPoly g = MultiPoly::constant(vars, Rational(1));
    MultiPoly h = MultiPoly::constant(vars, Rational(1));
    for (;;) {
        const int delta = deg(a) - deg(b);
        Coeffs r = prem(a, b);
        if (r.empty()) {
            const MultiPoly bb = MultiPoly::from_coefficients(b, var);
            return exact(bb, content_in(bb, var));
        }
        if (deg(r) == 0) return MultiPoly::constant(vars, Rational(1));
        a = std::move(b);
        b = divide_all(r, g * h.pow(static_cast<unsigned>(delta)));
        g = a.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        }
    }
}

}  // namespace

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
    if (b.is_zero()) throw InputError("pseudo-remainder by zero");
    const Coeffs ca = a.coefficients_in(var);
    const Coeffs cb = b.coefficients_in(var);
    if (deg(ca) < deg(cb)) return a;
    Coeffs r = prem(ca, cb);
    if (r.empty()) return MultiPoly(a.variables());
    return MultiPoly::from_coefficients(r, var);
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var_name) {
    if (p.variables() != q.variables()) throw InputError("variable-list mismatch");
    const std::size_t var = p.index_of(var_name);
    const auto& vars = p.variables();
    if (p.is_zero() || q.is_zero()) return MultiPoly(vars);
    Coeffs a = p.coefficients_in(var);
    Coeffs b = q.coefficients_in(var);
    if (deg(a) == 0 && deg(b) == 0) throw InputError("resultant: both polynomials are constant in " + std::string(var_name));
    int sign = 1;
    if (deg(a) < deg(b)) {
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1) sign = -1;
        std::swap(a, b);
    }
    if (deg(b) == 0) {
        MultiPoly r = b.back().pow(static_cast<unsigned>(deg(a)));
        return sign < 0 ? -r : r;
    }
    MultiPoly g = MultiPoly::constant(vars, Rational(1));
    MultiPoly h = MultiPoly::constant(vars, Rational(1));
    for (;;) {
        const int delta = deg(a) - deg(b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1) sign = -sign;
        Coeffs r = prem(a, b);
        a = std::move(b);
        if (r.empty()) return MultiPoly(vars);
        b = divide_all(r, g * h.pow(static_cast<unsigned>(delta)));
        g = a.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        }
        if (deg(b) == 0) {
            const int da = deg(a);
            MultiPoly res = b.back().pow(static_cast<unsigned>(da));
            if (da > 1) res = exact(res, h.pow(static_cast<unsigned>(da - 1)));
            return sign < 0 ? -res : res;
        }
    }
}

MultiPoly multivariate_gcd(const MultiPoly& p, const MultiPoly& q) {
    if (p.variables() != q.variables()) throw InputError("variable-list mismatch");
    if (p.is_zero()) return q.normalized();
    if (q.is_zero()) return p.normalized();
    const auto& vars = p.variables();
    if (p.is_constant() || q.is_constant()) return MultiPoly::constant(vars, Rational(1));

    std::size_t var = 0;
    while (p.degree_in(var) == 0 && q.degree_in(var) == 0) ++var;
    if (p.degree_in(var) == 0) return multivariate_gcd(p, content_in(q, var));
    if (q.degree_in(var) == 0) return multivariate_gcd(content_in(p, var), q);

    const MultiPoly cp = content_in(p, var);
    const MultiPoly cq = content_in(q, var);
    const MultiPoly c = multivariate_gcd(cp, cq);
    const MultiPoly g = primitive_gcd(exact(p, cp), exact(q, cq), var);
    return (c * g).normalized();
}

MultiPoly squarefree_part(const MultiPoly& p) {
    if (p.is_zero()) throw InputError("square-free part of the zero polynomial");
    MultiPoly g = p;
    for (std::size_t v = 0; v < p.arity(); ++v) {
        if (p.degree_in(v) <= 0) continue;
        g = multivariate_gcd(g, p.derivative(v));
        if (g.is_constant()) break;
    }
    return exact(p, g).normalized();
}

std::pair<MultiPoly, unsigned> strip_factor(const MultiPoly& p, const MultiPoly& factor) {
    if (factor.is_constant()) return {p, 0};
    MultiPoly cur = p;
    unsigned k = 0;
    while (!cur.is_zero()) {
        auto q = cur.divide_exact(factor);
        if (!q) break;
        cur = *std::move(q);
        ++k;
    }
    return {cur, k};
}

UniPoly to_unipoly(const MultiPoly& p, std::size_t var) {
    std::vector<Rational> c;
    for (const auto& [e, v] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0) throw InputError("polynomial involves more than one variable: " + p.to_string());
        if (c.size() <= e[var]) c.resize(e[var] + 1);
        c[e[var]] = v;
    }
    return UniPoly(p.variables()[var], std::move(c));
}

namespace {

// Arithmetic in K[z] with K = Q[x]/(h), h square-free. Coefficients are
// UniPoly residues; a zero divisor discovered while inverting is reported
// through SplitFound so the caller can restart on both factors of h.
struct SplitFound {
    UniPoly factor;
};

using KPoly = std::vector<UniPoly>;

UniPoly mod(const UniPoly& a, const UniPoly& h) { return UniPoly::divmod(a, h).second; }

KPoly reduce(const KPoly& a, const UniPoly& h) {
    KPoly out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(mod(c, h));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

UniPoly inverse(const UniPoly& c, const UniPoly& h) {
    const ExtendedGcd eg = extended_gcd(c, h);
    if (eg.g.degree() > 0) throw SplitFound{eg.g};
    return mod(eg.s, h);
}

KPoly scale(const KPoly& a, const UniPoly& s, const UniPoly& h) {
    KPoly out;
    for (const auto& c : a) out.push_back(mod(c * s, h));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

// Makes `a` monic, stripping leading coefficients that vanish mod h.
KPoly make_monic(KPoly a, const UniPoly& h) {
    while (!a.empty()) {
        const UniPoly g = gcd(a.back(), h);
        if (g.degree() == h.degree()) {
            a.pop_back();
            continue;
        }
        if (g.degree() > 0) throw SplitFound{g};
        return scale(a, inverse(a.back(), h), h);
    }
    return a;
}

// a mod b for monic b.
KPoly remainder(KPoly a, const KPoly& b, const UniPoly& h) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const UniPoly lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] = mod(a[shift + j] - lead * b[j], h);
        a.pop_back();
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    return a;
}

KPoly multiply(const KPoly& a, const KPoly& b, const UniPoly& h) {
    if (a.empty() || b.empty()) return {};
    KPoly out(a.size() + b.size() - 1, UniPoly(h.variable()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return reduce(out, h);
}

KPoly to_kpoly(const MultiPoly& p, std::size_t base_var, std::size_t main_var) {
    KPoly out;
    for (const auto& c : p.coefficients_in(main_var)) out.push_back(to_unipoly(c, base_var));
    return out;
}

bool branch_has_solution(const UniPoly& h, const KPoly& a0, const KPoly& b0, const KPoly* exclude) {
    try {
        KPoly a = make_monic(reduce(a0, h), h);
        KPoly b = make_monic(reduce(b0, h), h);
        while (!b.empty()) {
            KPoly r = make_monic(remainder(a, b, h), h);
            a = std::move(b);
            b = std::move(r);
        }
        if (a.empty()) return true;  // both vanish identically over this branch
        if (a.size() == 1) return false;
        if (exclude == nullptr) return true;
        // Every root of a is a root of E iff a divides E^deg(a).
        const KPoly e = reduce(*exclude, h);
        KPoly acc{UniPoly(h.variable(), {Rational(1)})};
        for (std::size_t i = 0; i + 1 < a.size(); ++i) acc = remainder(multiply(acc, e, h), a, h);
        return !acc.empty();
    } catch (const SplitFound& split) {
        const UniPoly other = UniPoly::divmod(h, split.factor).first.monic();
        return branch_has_solution(split.factor.monic(), a0, b0, exclude) ||
               branch_has_solution(other, a0, b0, exclude);
    }
}

}  // namespace

bool has_solution_over(const UniPoly& h, const MultiPoly& a, const MultiPoly& b, const MultiPoly* exclude,
                       std::size_t base_var) {
    if (h.degree() <= 0) return false;
    const std::size_t main_var = 1 - base_var;
    const KPoly ka = to_kpoly(a, base_var, main_var);
    const KPoly kb = to_kpoly(b, base_var, main_var);
    if (exclude != nullptr) {
        const KPoly ke = to_kpoly(*exclude, base_var, main_var);
        return branch_has_solution(h.monic(), ka, kb, &ke);
    }
    return branch_has_solution(h.monic(), ka, kb, nullptr);
}

PlaneSolutions solve_plane_system(const MultiPoly& a, const MultiPoly& b, const MultiPoly* exclude) {
    if (a.arity() != 2 || a.variables() != b.variables()) throw InputError("plane system needs two polynomials in the same two variables");
    PlaneSolutions out;
    if (a.is_zero() || b.is_zero()) throw NonIsolated("plane system has an identically zero equation");
    if (a.is_constant() || b.is_constant()) return out;
    const MultiPoly g = multivariate_gcd(a, b);
    if (!g.is_constant()) throw NonIsolated("equations share the curve component " + g.to_string());

    const auto& vars = a.variables();
    std::vector<RationalRoots> roots(2);
    std::vector<bool> eliminated(2, false);
    for (std::size_t base = 0; base < 2; ++base) {
        const std::size_t other = 1 - base;
        if (a.degree_in(other) <= 0 && b.degree_in(other) <= 0) continue;
        const MultiPoly r = resultant(a, b, vars[other]);
        roots[base] = rational_roots(to_unipoly(r, base));
        eliminated[base] = true;
    }
    // A side without elimination means both equations are univariate in the
    // other variable; coprimality then leaves no common zero.
    if (!eliminated[0] || !eliminated[1]) return out;

    for (const auto& x : roots[0].roots) {
        for (const auto& z : roots[1].roots) {
            const std::vector<Rational> pt{x, z};
            if (!a.evaluate(pt).is_zero() || !b.evaluate(pt).is_zero()) continue;
            if (exclude != nullptr && exclude->evaluate(pt).is_zero()) continue;
            out.points.push_back(pt);
        }
    }
    for (std::size_t base = 0; base < 2; ++base) {
        const UniPoly& rest = roots[base].remainder;
        if (rest.degree() > 0 && has_solution_over(rest, a, b, exclude, base)) out.unresolved.push_back(rest);
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

}  // namespace meropole
