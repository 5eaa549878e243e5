#pragma once

#include "meropole/local_algebra.hpp"
#include "meropole/multipoly.hpp"
#include "meropole/unipoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace meropole {

using Point = std::vector<Rational>;

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2004;

/// Deterministic source of "generic" parameter values: integers drawn from
/// [1009, 9973], never repeating and never hitting an avoided value.
class GenericSampler {
public:
    explicit GenericSampler(std::uint64_t seed) : rng_(seed) {}
    Rational draw(const std::set<Rational>& avoid);
    long uniform(long lo, long hi);

private:
    std::mt19937_64 rng_;
    std::set<Rational> used_;
};

/// Per-task seed from (global seed, chart index, base point index), so the
/// outcome does not depend on scheduling.
std::uint64_t derive_seed(std::uint64_t global, std::uint64_t chart, std::uint64_t point);

// ---------------------------------------------------------------------------
// Fractions and fibers

struct ReducedFraction {
    MultiPoly p, q;
    std::vector<std::string> warnings;
};

/// Divides out gcd(p, q). Throws InputError when q = 0.
ReducedFraction reduce_fraction(const MultiPoly& p, const MultiPoly& q);

struct BasePoints {
    std::vector<Point> points;
    std::vector<UniPoly> unresolved;  // eliminant factors carrying irrational base points
    bool complete() const { return unresolved.empty(); }
};

/// Rational common zeros of p and q (the base points of the pencil).
BasePoints base_points(const MultiPoly& p, const MultiPoly& q);

/// True iff p - a*q is square-free.
bool fiber_reducedness(const MultiPoly& p, const MultiPoly& q, const Rational& a);

// ---------------------------------------------------------------------------
// Germ families at a base point

/// The family X_t : p - t*q = 0 near a base point, stored translated so the
/// base point is the origin.
class PlaneGermFamily {
public:
    /// Throws InputError unless p and q are in two variables, vanish at the
    /// base point, and share no curve component through it.
    PlaneGermFamily(const MultiPoly& p, const MultiPoly& q, Point base_point);
    PlaneGermFamily(const MultiPoly& p, const MultiPoly& q);

    const MultiPoly& p() const { return p_; }
    const MultiPoly& q() const { return q_; }
    const Point& base_point() const { return base_; }
    const std::vector<std::string>& variables() const { return p_.variables(); }

    /// p - t*q at the origin.
    Germ member(const Rational& t) const { return Germ(p_ - t * q_); }

private:
    MultiPoly p_, q_;
    Point base_;
};

struct PolarCurve {
    MultiPoly equation;
    std::vector<MultiPoly> removed_factors;
    MultiPoly jacobian;  // p_x q_z - p_z q_x before saturation
    bool passes_through_origin() const { return !equation.is_constant() && equation.constant_term().is_zero(); }
};

/// Jacobian determinant of (p, q) saturated by the reduced pole equation.
/// Throws DegeneratePair when the Jacobian vanishes identically.
PolarCurve polar_curve(const PlaneGermFamily& fam);

struct AnalysisOptions {
    int jet_cap = kDefaultJetCap;
    std::uint64_t seed = kDefaultSeed;
    std::vector<Rational> candidate_overrides;
};

struct GenericData {
    int mu = 0;
    GermClass cls;
    std::size_t polar_intersection = 0;  // i_0(polar curve, X_s)
    std::vector<Rational> samples;
};

/// Milnor number, class and polar intersection of the generic member, from
/// two samples that must agree (one fresh retry, then GenericityFailure).
GenericData generic_data(const PlaneGermFamily& fam, const PolarCurve& polar, const std::set<Rational>& avoid,
                         GenericSampler& sampler, int cap);

struct GenericMu {
    int mu = 0;
    GermClass cls;
};
GenericMu generic_mu(const PlaneGermFamily& fam, const std::set<Rational>& avoid, GenericSampler& sampler,
                     int cap = kDefaultJetCap);

/// lambda via the polar curve: i_0(polar, X_a) - i_0(polar, X_s).
int polar_lambda(const PlaneGermFamily& fam, const Rational& a, const AnalysisOptions& opts = {});

struct JumpLambda {
    int lambda_jump = 0;
    int mu_special = 0;
    bool splitting_detected = false;
    int mu_nearby_sum = 0;
};
JumpLambda jump_lambda(const PlaneGermFamily& fam, const Rational& a, const AnalysisOptions& opts = {});

struct Candidates {
    std::vector<Rational> values;
    std::vector<UniPoly> irrational;  // factors whose roots are irrational special-value candidates
    long shear = 0;                   // z -> z + shear*x applied before elimination
};

/// Rational roots of the lowest moving coefficient of Res_x(polar, p - t q).
Candidates special_value_candidates(const PlaneGermFamily& fam, const PolarCurve& polar, GenericSampler& sampler);

struct SpecialValueRecord {
    Rational a;
    int mu_special = 0;
    int mu_generic = 0;
    int lambda_polar = 0;
    int lambda_jump = 0;
    bool splitting_detected = false;
    int mu_nearby_sum = 0;
    GermClass class_generic;
    GermClass class_special;
    bool trivial = true;
};

struct GermReport {
    Point point;
    PolarCurve polar;
    int mu_generic = 0;
    GermClass class_generic;
    std::size_t generic_polar_intersection = 0;
    Candidates candidates;
    std::vector<SpecialValueRecord> specials;  // every analyzed value, ascending
    std::vector<std::string> warnings;
    bool complete() const { return candidates.irrational.empty(); }
    /// Records with lambda > 0 or a Milnor number jump.
    std::vector<const SpecialValueRecord*> nontrivial() const;
};

/// Full analysis of one family: polar curve, candidates (plus `extra_values`
/// and the overrides in `opts`), generic data and a record per value.
GermReport analyze_germ(const PlaneGermFamily& fam, const AnalysisOptions& opts,
                        const std::vector<Rational>& extra_values = {});

/// Recomputes polar_lambda for (p*u, q*u) and compares.
bool unit_twist_check(const PlaneGermFamily& fam, const MultiPoly& u, const Rational& a,
                      const AnalysisOptions& opts = {});

// ---------------------------------------------------------------------------
// Critical points off the poles

struct CriticalPoint {
    Point point;
    Rational value;
    MilnorResult milnor;
    GermClass cls;
};

struct CriticalAnalysis {
    std::vector<CriticalPoint> points;
    std::vector<UniPoly> unresolved;
    bool complete() const { return unresolved.empty(); }
};

/// Solves q p_x - p q_x = q p_z - p q_z = 0 off q = 0. Throws NonIsolated on
/// a positive-dimensional critical locus.
CriticalAnalysis critical_analysis(const MultiPoly& p, const MultiPoly& q, int cap = kDefaultJetCap);

// ---------------------------------------------------------------------------
// Atlases

struct ChartSpec {
    std::string name;
    std::vector<std::string> variables;
    MultiPoly p, q;
    std::optional<std::vector<Point>> declared_base_points;
};

/// Chart `to` coordinates as rational functions of chart `from` coordinates.
struct OverlapSpec {
    std::string from, to;
    std::map<std::string, std::pair<MultiPoly, MultiPoly>> map;  // target variable -> (numerator, denominator)
};

struct Atlas {
    std::vector<ChartSpec> charts;
    std::vector<OverlapSpec> overlaps;
};

struct ChartReport {
    std::string name;
    MultiPoly p, q;
    std::vector<CriticalPoint> critical_points;
    std::vector<bool> critical_counted;  // false when identified with a point of an earlier chart
    std::vector<UniPoly> unresolved_critical;
    std::vector<UniPoly> unresolved_base_points;
    std::vector<GermReport> base_points;
    bool complete = true;
};

struct ValueTotals {
    Rational a;
    int mu_a = 0;
    int lambda_a = 0;
};

struct PencilReport {
    std::vector<ChartReport> charts;
    std::vector<Rational> atypical_values;
    std::vector<ValueTotals> per_value;
    int mu = 0;
    int lambda = 0;
    int b2 = 0;
    int chi_rel = 0;
    std::vector<std::string> warnings;
};

struct PencilOptions {
    AnalysisOptions analysis;
    unsigned parallelism = 1;
    bool allow_incomplete = false;
};

/// Runs every chart and aggregates mu, lambda and the atypical values.
/// Refuses (Incomplete) when an enumeration could not be completed, unless
/// `allow_incomplete` is set.
PencilReport analyze_pencil(const Atlas& atlas, const PencilOptions& opts);

}  // namespace meropole
