#include "meropole/pencil.hpp"

#include "meropole/elimination.hpp"
#include "meropole/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

namespace meropole {

// ---------------------------------------------------------------------------
// Sampling

Rational GenericSampler::draw(const std::set<Rational>& avoid) {
    for (;;) {
        const Rational v(uniform(1009, 9973));
        if (avoid.count(v) != 0 || used_.count(v) != 0) continue;
        used_.insert(v);
        return v;
    }
}

long GenericSampler::uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
}

std::uint64_t derive_seed(std::uint64_t global, std::uint64_t chart, std::uint64_t point) {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31U);
    };
    return mix(mix(mix(global) ^ chart) ^ (point * 0x2545f4914f6cdd1dULL));
}

// ---------------------------------------------------------------------------
// Fractions and fibers

namespace {

void require_plane(const MultiPoly& p, const MultiPoly& q) {
    if (p.arity() != 2 || p.variables() != q.variables())
        throw InputError("p and q must be polynomials in the same two chart variables");
}

MultiPoly translate(const MultiPoly& p, const Point& pt) {
    if (std::all_of(pt.begin(), pt.end(), [](const Rational& r) { return r.is_zero(); })) return p;
    std::map<std::string, MultiPoly> shift;
    for (std::size_t i = 0; i < p.arity(); ++i) {
        const auto& v = p.variables()[i];
        shift.emplace(v, MultiPoly::variable(p.variables(), v) + MultiPoly::constant(p.variables(), pt[i]));
    }
    return p.substitute(shift);
}

MultiPoly saturate(MultiPoly p, const MultiPoly& pole, std::vector<MultiPoly>* removed = nullptr) {
    if (pole.is_constant() || p.is_zero()) return p;
    for (;;) {
        const MultiPoly g = multivariate_gcd(p, pole);
        if (g.is_constant()) return p;
        p = *p.divide_exact(g);
        if (removed != nullptr) removed->push_back(g);
    }
}

std::string point_string(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].to_string();
    return s + ")";
}

}  // namespace

ReducedFraction reduce_fraction(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw InputError("pole polynomial q is zero");
    if (p.variables() != q.variables()) throw InputError("variable-list mismatch between p and q");
    ReducedFraction out{p, q, {}};
    if (p.is_zero()) {
        out.warnings.emplace_back("zero numerator");
        return out;
    }
    const MultiPoly g = multivariate_gcd(p, q);
    if (!g.is_constant()) {
        out.p = *p.divide_exact(g);
        out.q = *q.divide_exact(g);
        out.warnings.push_back("removed common factor " + g.to_string() + " from p/q");
    }
    return out;
}

BasePoints base_points(const MultiPoly& p, const MultiPoly& q) {
    require_plane(p, q);
    PlaneSolutions sol;
    try {
        sol = solve_plane_system(p, q);
    } catch (const NonIsolated& e) {
        throw InputError(std::string("p and q share a curve component: ") + e.what());
    }
    return BasePoints{std::move(sol.points), std::move(sol.unresolved)};
}

bool fiber_reducedness(const MultiPoly& p, const MultiPoly& q, const Rational& a) {
    const MultiPoly f = p - a * q;
    if (f.is_zero()) return false;
    if (f.is_constant()) return true;
    return squarefree_part(f) == f.normalized();
}

// ---------------------------------------------------------------------------
// Families

PlaneGermFamily::PlaneGermFamily(const MultiPoly& p, const MultiPoly& q)
    : PlaneGermFamily(p, q, Point{Rational(0), Rational(0)}) {}

PlaneGermFamily::PlaneGermFamily(const MultiPoly& p, const MultiPoly& q, Point base_point) : base_(std::move(base_point)) {
    require_plane(p, q);
    if (base_.size() != 2) throw InputError("base point must have two coordinates");
    if (!p.evaluate(base_).is_zero() || !q.evaluate(base_).is_zero())
        throw InputError("point " + point_string(base_) + " is not a base point: p and q must both vanish there");
    p_ = translate(p, base_);
    q_ = translate(q, base_);
    const MultiPoly g = multivariate_gcd(p_, q_);
    if (!g.is_constant() && g.constant_term().is_zero())
        throw InputError("p and q share the component " + g.to_string() + " through the base point");
}

PolarCurve polar_curve(const PlaneGermFamily& fam) {
    const MultiPoly& p = fam.p();
    const MultiPoly& q = fam.q();
    PolarCurve out;
    out.jacobian = p.derivative(0) * q.derivative(1) - p.derivative(1) * q.derivative(0);
    if (out.jacobian.is_zero()) throw DegeneratePair("p and q are functionally dependent (Jacobian vanishes)");
    out.equation = saturate(out.jacobian, squarefree_part(q), &out.removed_factors).normalized();
    return out;
}

// ---------------------------------------------------------------------------
// Generic data

namespace {

std::size_t polar_intersection(const PolarCurve& polar, const Germ& fiber, int cap, const Rational& t) {
    if (!polar.passes_through_origin()) return 0;
    const auto i = local_intersection_multiplicity(Germ(polar.equation), fiber, cap);
    if (!i) throw NonIsolated("polar curve shares a component with the fiber at t = " + t.to_string());
    return *i;
}

void require_reduced(const PlaneGermFamily& fam, const Rational& a) {
    if (!fiber_reducedness(fam.p(), fam.q(), a))
        throw NonIsolated("fiber p - (" + a.to_string() + ")*q is not reduced: singularities at t = " + a.to_string() +
                          " are not isolated");
}

}  // namespace

GenericData generic_data(const PlaneGermFamily& fam, const PolarCurve& polar, const std::set<Rational>& avoid,
                         GenericSampler& sampler, int cap) {
    std::string diagnostic;
    for (int attempt = 0; attempt < 2; ++attempt) {
        const Rational s1 = sampler.draw(avoid);
        const Rational s2 = sampler.draw(avoid);
        require_reduced(fam, s1);
        require_reduced(fam, s2);
        const Germ g1 = fam.member(s1);
        const Germ g2 = fam.member(s2);
        const auto m1 = milnor_number(g1, cap).mu;
        const auto m2 = milnor_number(g2, cap).mu;
        const auto i1 = polar_intersection(polar, g1, cap, s1);
        const auto i2 = polar_intersection(polar, g2, cap, s2);
        if (m1 == m2 && i1 == i2) {
            GenericData out;
            out.mu = static_cast<int>(m1);
            out.cls = classify_plane_germ(g1, cap);
            out.polar_intersection = i1;
            out.samples = {s1, s2};
            return out;
        }
        diagnostic += "samples t = " + s1.to_string() + ", " + s2.to_string() + " gave mu " + std::to_string(m1) +
                      " vs " + std::to_string(m2) + " and polar intersection " + std::to_string(i1) + " vs " +
                      std::to_string(i2) + "; ";
    }
    throw GenericityFailure("generic samples disagree: " + diagnostic);
}

GenericMu generic_mu(const PlaneGermFamily& fam, const std::set<Rational>& avoid, GenericSampler& sampler, int cap) {
    std::string diagnostic;
    for (int attempt = 0; attempt < 2; ++attempt) {
        const Rational s1 = sampler.draw(avoid);
        const Rational s2 = sampler.draw(avoid);
        const auto m1 = milnor_number(fam.member(s1), cap).mu;
        const auto m2 = milnor_number(fam.member(s2), cap).mu;
        if (m1 == m2) return GenericMu{static_cast<int>(m1), classify_plane_germ(fam.member(s1), cap)};
        diagnostic += "t = " + s1.to_string() + " -> " + std::to_string(m1) + ", t = " + s2.to_string() + " -> " +
                      std::to_string(m2) + "; ";
    }
    throw GenericityFailure("generic Milnor number samples disagree: " + diagnostic);
}

namespace {

std::set<Rational> avoid_set(const Rational& a, const AnalysisOptions& opts) {
    std::set<Rational> avoid(opts.candidate_overrides.begin(), opts.candidate_overrides.end());
    avoid.insert(a);
    return avoid;
}

int lambda_from(const PolarCurve& polar, const PlaneGermFamily& fam, const Rational& a, std::size_t generic, int cap) {
    const std::size_t special = polar_intersection(polar, fam.member(a), cap, a);
    if (special < generic)
        throw GenericityFailure("polar intersection at t = " + a.to_string() + " is below the generic value");
    return static_cast<int>(special - generic);
}

}  // namespace

int polar_lambda(const PlaneGermFamily& fam, const Rational& a, const AnalysisOptions& opts) {
    const PolarCurve polar = polar_curve(fam);
    if (!polar.passes_through_origin()) return 0;
    require_reduced(fam, a);
    GenericSampler sampler(opts.seed);
    GenericSampler shear_sampler(derive_seed(opts.seed, 0, 1));
    std::set<Rational> avoid = avoid_set(a, opts);
    for (const auto& c : special_value_candidates(fam, polar, shear_sampler).values) avoid.insert(c);
    const GenericData gen = generic_data(fam, polar, avoid, sampler, opts.jet_cap);
    return lambda_from(polar, fam, a, gen.polar_intersection, opts.jet_cap);
}

JumpLambda jump_lambda(const PlaneGermFamily& fam, const Rational& a, const AnalysisOptions& opts) {
    require_reduced(fam, a);
    const PolarCurve polar = polar_curve(fam);
    GenericSampler sampler(opts.seed);
    GenericSampler shear_sampler(derive_seed(opts.seed, 0, 1));
    std::set<Rational> avoid = avoid_set(a, opts);
    for (const auto& c : special_value_candidates(fam, polar, shear_sampler).values) avoid.insert(c);
    const GenericData gen = generic_data(fam, polar, avoid, sampler, opts.jet_cap);
    JumpLambda out;
    out.mu_special = static_cast<int>(milnor_number(fam.member(a), opts.jet_cap).mu);
    out.lambda_jump = out.mu_special - gen.mu;
    const int lp = lambda_from(polar, fam, a, gen.polar_intersection, opts.jet_cap);
    out.splitting_detected = out.lambda_jump != lp;
    out.mu_nearby_sum = out.mu_special - lp;
    return out;
}

// ---------------------------------------------------------------------------
// Candidates

namespace {

std::string fresh_name(const std::vector<std::string>& vars, std::string base) {
    while (std::find(vars.begin(), vars.end(), base) != vars.end()) base += "_";
    return base;
}

MultiPoly shear(const MultiPoly& p, long c) {
    if (c == 0) return p;
    const auto& vars = p.variables();
    std::map<std::string, MultiPoly> sub;
    sub.emplace(vars[1], MultiPoly::variable(vars, vars[1]) + Rational(c) * MultiPoly::variable(vars, vars[0]));
    return p.substitute(sub);
}

}  // namespace

Candidates special_value_candidates(const PlaneGermFamily& fam, const PolarCurve& polar, GenericSampler& sampler) {
    Candidates out;
    if (!polar.passes_through_origin()) return out;
    const auto& vars = fam.variables();

    // The polar curve must keep a nonvanishing x-leading coefficient along
    // the line z = 0, otherwise intersections escape to infinity there.
    long c = 0;
    MultiPoly gamma = polar.equation;
    for (int tries = 0;; ++tries) {
        gamma = shear(polar.equation, c);
        const MultiPoly lead = gamma.coefficients_in(0).back();
        if (!lead.evaluate(Point{Rational(0), Rational(0)}).is_zero()) break;
        if (tries > 32) throw GenericityFailure("no admissible shear found for the polar curve");
        c = sampler.uniform(1, 97);
    }
    out.shear = c;

    const std::string t = fresh_name(vars, "t");
    const std::vector<std::string> vars3{vars[0], vars[1], t};
    const MultiPoly g3 = gamma.embed(vars3);
    const MultiPoly tv = MultiPoly::variable(vars3, t);
    const MultiPoly f3 = shear(fam.p(), c).embed(vars3) - tv * shear(fam.q(), c).embed(vars3);
    const MultiPoly r = resultant(g3, f3, vars[0]);
    if (r.is_zero()) throw NonIsolated("polar curve divides every fiber");

    unsigned m = ~0U;
    for (const auto& [e, coef] : r.terms()) m = std::min(m, e[1]);
    std::vector<Rational> low;
    for (const auto& [e, coef] : r.terms()) {
        if (e[1] != m) continue;
        if (low.size() <= e[2]) low.resize(e[2] + 1);
        low[e[2]] = coef;
    }
    const UniPoly lowest(t, std::move(low));
    if (lowest.degree() <= 0) return out;
    RationalRoots rr = rational_roots(lowest);
    out.values = std::move(rr.roots);
    if (rr.remainder.degree() > 0) out.irrational.push_back(std::move(rr.remainder));
    return out;
}

// ---------------------------------------------------------------------------
// Germ analysis

std::vector<const SpecialValueRecord*> GermReport::nontrivial() const {
    std::vector<const SpecialValueRecord*> out;
    for (const auto& r : specials)
        if (r.lambda_polar > 0 || r.mu_special != r.mu_generic) out.push_back(&r);
    return out;
}

GermReport analyze_germ(const PlaneGermFamily& fam, const AnalysisOptions& opts, const std::vector<Rational>& extra_values) {
    GermReport rep;
    rep.point = fam.base_point();
    rep.polar = polar_curve(fam);
    GenericSampler sampler(opts.seed);
    GenericSampler shear_sampler(derive_seed(opts.seed, 0, 1));
    rep.candidates = special_value_candidates(fam, rep.polar, shear_sampler);
    for (const auto& f : rep.candidates.irrational)
        rep.warnings.push_back("irrational special-value candidates: roots of " + f.to_string());

    std::set<Rational> values(rep.candidates.values.begin(), rep.candidates.values.end());
    values.insert(extra_values.begin(), extra_values.end());
    values.insert(opts.candidate_overrides.begin(), opts.candidate_overrides.end());

    const GenericData gen = generic_data(fam, rep.polar, values, sampler, opts.jet_cap);
    rep.mu_generic = gen.mu;
    rep.class_generic = gen.cls;
    rep.generic_polar_intersection = gen.polar_intersection;

    for (const auto& a : values) {
        require_reduced(fam, a);
        SpecialValueRecord r;
        r.a = a;
        const Germ fiber = fam.member(a);
        r.mu_special = static_cast<int>(milnor_number(fiber, opts.jet_cap).mu);
        r.mu_generic = gen.mu;
        r.lambda_polar = lambda_from(rep.polar, fam, a, gen.polar_intersection, opts.jet_cap);
        r.lambda_jump = r.mu_special - gen.mu;
        r.splitting_detected = r.lambda_polar != r.lambda_jump;
        r.mu_nearby_sum = r.mu_special - r.lambda_polar;
        r.class_generic = gen.cls;
        r.class_special = classify_plane_germ(fiber, opts.jet_cap);
        r.trivial = r.lambda_polar == 0;
        if (r.lambda_jump < 0 || r.lambda_polar > r.lambda_jump || r.mu_nearby_sum < r.mu_generic)
            rep.warnings.push_back("inconsistent lambda routes at t = " + a.to_string() + " (polar " +
                                   std::to_string(r.lambda_polar) + ", jump " + std::to_string(r.lambda_jump) + ")");
        else if (r.splitting_detected)
            rep.warnings.push_back("splitting detected at t = " + a.to_string());
        rep.specials.push_back(std::move(r));
    }
    return rep;
}

bool unit_twist_check(const PlaneGermFamily& fam, const MultiPoly& u, const Rational& a, const AnalysisOptions& opts) {
    if (u.constant_term().is_zero()) throw InputError("twisting polynomial is not a unit at the origin");
    const MultiPoly uu = u.embed(fam.variables());
    const PlaneGermFamily twisted(fam.p() * uu, fam.q() * uu);
    return polar_lambda(twisted, a, opts) == polar_lambda(fam, a, opts);
}

// ---------------------------------------------------------------------------
// Critical points

CriticalAnalysis critical_analysis(const MultiPoly& p, const MultiPoly& q, int cap) {
    require_plane(p, q);
    MultiPoly a = q * p.derivative(0) - p * q.derivative(0);
    MultiPoly b = q * p.derivative(1) - p * q.derivative(1);
    if (a.is_zero() && b.is_zero()) throw DegeneratePair("p/q is constant");
    if (!q.is_constant()) {
        const MultiPoly pole = squarefree_part(q);
        a = saturate(a, pole);
        b = saturate(b, pole);
    }
    CriticalAnalysis out;
    if (a.is_zero() || b.is_zero()) {
        const MultiPoly& other = a.is_zero() ? b : a;
        if (other.is_constant()) return out;
        throw NonIsolated("critical locus off the poles is a curve: " + other.to_string() + " = 0");
    }
    PlaneSolutions sol;
    try {
        sol = solve_plane_system(a, b, &q);
    } catch (const NonIsolated& e) {
        throw NonIsolated(std::string("critical locus off the poles is not finite: ") + e.what());
    }
    out.unresolved = sol.unresolved;
    for (const auto& pt : sol.points) {
        CriticalPoint cp;
        cp.point = pt;
        cp.value = p.evaluate(pt) / q.evaluate(pt);
        const Germ fiber(translate(p - cp.value * q, pt));
        cp.milnor = milnor_number(fiber, cap);
        cp.cls = classify_plane_germ(fiber, cap);
        out.points.push_back(std::move(cp));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Atlas

namespace {

// Runs fn(i) for i < n on up to `threads` workers; rethrows the exception of
// the lowest failing index.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
    std::vector<std::exception_ptr> errors(n);
    auto guarded = [&](std::size_t i) {
        try {
            fn(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) guarded(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        const unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(n));
        for (unsigned w = 0; w < count; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) guarded(i);
            });
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::optional<Point> map_point(const OverlapSpec& ov, const std::vector<std::string>& target_vars, const Point& pt) {
    Point out;
    for (const auto& v : target_vars) {
        const auto& [num, den] = ov.map.at(v);
        const Rational d = den.evaluate(pt);
        if (d.is_zero()) return std::nullopt;
        out.push_back(num.evaluate(pt) / d);
    }
    return out;
}

std::string chart_points_summary(const ChartReport& c) {
    std::ostringstream os;
    os << c.name << ": base points {";
    for (std::size_t i = 0; i < c.base_points.size(); ++i) os << (i ? ", " : "") << point_string(c.base_points[i].point);
    os << "}, critical points {";
    for (std::size_t i = 0; i < c.critical_points.size(); ++i)
        os << (i ? ", " : "") << point_string(c.critical_points[i].point);
    os << "}";
    return os.str();
}

}  // namespace

PencilReport analyze_pencil(const Atlas& atlas, const PencilOptions& opts) {
    const std::size_t n = atlas.charts.size();
    PencilReport rep;
    rep.charts.resize(n);
    std::vector<std::vector<std::string>> chart_warnings(n);
    std::vector<std::vector<Point>> chart_base_points(n);

    parallel_for(n, opts.parallelism, [&](std::size_t i) {
        const ChartSpec& spec = atlas.charts[i];
        ChartReport& cr = rep.charts[i];
        cr.name = spec.name;
        ReducedFraction rf = reduce_fraction(spec.p, spec.q);
        for (auto& w : rf.warnings) chart_warnings[i].push_back(spec.name + ": " + w);
        cr.p = rf.p;
        cr.q = rf.q;
        const CriticalAnalysis ca = critical_analysis(cr.p, cr.q, opts.analysis.jet_cap);
        cr.critical_points = ca.points;
        cr.critical_counted.assign(ca.points.size(), true);
        cr.unresolved_critical = ca.unresolved;
        if (spec.declared_base_points) {
            chart_base_points[i] = *spec.declared_base_points;
            chart_warnings[i].push_back(spec.name + ": using declared base points; enumeration not checked");
        } else {
            BasePoints bp = base_points(cr.p, cr.q);
            chart_base_points[i] = std::move(bp.points);
            cr.unresolved_base_points = std::move(bp.unresolved);
        }
    });

    struct Task {
        std::size_t chart, point;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < n; ++i) {
        rep.charts[i].base_points.resize(chart_base_points[i].size());
        for (std::size_t j = 0; j < chart_base_points[i].size(); ++j) tasks.push_back({i, j});
    }
    parallel_for(tasks.size(), opts.parallelism, [&](std::size_t k) {
        const auto [i, j] = tasks[k];
        ChartReport& cr = rep.charts[i];
        std::vector<Rational> critical_values;
        for (const auto& cp : cr.critical_points) critical_values.push_back(cp.value);
        AnalysisOptions ao = opts.analysis;
        ao.seed = derive_seed(opts.analysis.seed, i, j);
        const PlaneGermFamily fam(cr.p, cr.q, chart_base_points[i][j]);
        cr.base_points[j] = analyze_germ(fam, ao, critical_values);
    });

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(atlas.charts[i].name, i);
    for (const auto& ov : atlas.overlaps) {
        const auto fi = index.find(ov.from);
        const auto ti = index.find(ov.to);
        if (fi == index.end() || ti == index.end()) throw InputError("overlap refers to an unknown chart");
        ChartReport& from = rep.charts[fi->second];
        ChartReport& to = rep.charts[ti->second];
        const bool later_is_to = ti->second > fi->second;
        for (std::size_t a = 0; a < from.critical_points.size(); ++a) {
            const auto image = map_point(ov, atlas.charts[ti->second].variables, from.critical_points[a].point);
            if (!image) continue;
            for (std::size_t b = 0; b < to.critical_points.size(); ++b) {
                if (to.critical_points[b].point != *image) continue;
                if (later_is_to && from.critical_counted[a]) {
                    to.critical_counted[b] = false;
                } else if (!later_is_to && to.critical_counted[b]) {
                    from.critical_counted[a] = false;
                } else {
                    continue;
                }
                rep.warnings.push_back("critical point " + point_string(from.critical_points[a].point) + " of " +
                                       from.name + " coincides with " + point_string(*image) + " of " + to.name +
                                       "; counted once");
            }
        }
    }

    std::map<Rational, ValueTotals> totals;
    auto entry = [&](const Rational& a) -> ValueTotals& {
        auto [it, inserted] = totals.try_emplace(a);
        it->second.a = a;
        return it->second;
    };
    std::vector<std::string> incomplete;
    for (std::size_t i = 0; i < n; ++i) {
        ChartReport& cr = rep.charts[i];
        for (auto& w : chart_warnings[i]) rep.warnings.push_back(std::move(w));
        for (std::size_t k = 0; k < cr.critical_points.size(); ++k) {
            ValueTotals& vt = entry(cr.critical_points[k].value);
            if (cr.critical_counted[k]) vt.mu_a += static_cast<int>(cr.critical_points[k].milnor.mu);
        }
        for (const auto& g : cr.base_points) {
            for (const auto& w : g.warnings) rep.warnings.push_back(cr.name + " at " + point_string(g.point) + ": " + w);
            for (const auto& r : g.specials) entry(r.a).lambda_a += r.lambda_polar;
            if (!g.complete()) cr.complete = false;
        }
        if (!cr.unresolved_critical.empty() || !cr.unresolved_base_points.empty()) cr.complete = false;
        if (!cr.complete) {
            std::string what = cr.name + ":";
            for (const auto& f : cr.unresolved_critical) what += " irrational critical points over roots of " + f.to_string() + ";";
            for (const auto& f : cr.unresolved_base_points) what += " irrational base points over roots of " + f.to_string() + ";";
            for (const auto& g : cr.base_points)
                for (const auto& f : g.candidates.irrational) what += " irrational special values, roots of " + f.to_string() + ";";
            incomplete.push_back(what);
        }
    }
    if (!incomplete.empty()) {
        std::string msg = "enumeration incomplete:";
        for (const auto& s : incomplete) msg += " " + s;
        if (!opts.allow_incomplete) throw Incomplete(msg);
        rep.warnings.push_back(msg);
    }
    if (n > 1) {
        std::string msg = "totals assume the declared charts are disjoint except for declared overlaps;";
        for (const auto& c : rep.charts) msg += " " + chart_points_summary(c) + ";";
        rep.warnings.push_back(msg);
    }

    for (const auto& [a, vt] : totals) {
        rep.per_value.push_back(vt);
        rep.mu += vt.mu_a;
        rep.lambda += vt.lambda_a;
        if (vt.mu_a + vt.lambda_a > 0) rep.atypical_values.push_back(a);
    }
    rep.b2 = rep.mu + rep.lambda;
    rep.chi_rel = rep.b2;
    return rep;
}

}  // namespace meropole
