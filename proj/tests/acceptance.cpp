// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include "meropole/cli.hpp"
#include "meropole/errors.hpp"
#include "meropole/local_algebra.hpp"
#include "meropole/parser.hpp"
#include "meropole/pencil.hpp"
#include "meropole/report.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace meropole;

namespace {

using Clock = std::chrono::steady_clock;

struct Tuple {
    int a, b, rho, sigma;
};
const std::vector<Tuple> kTuples{{1, 1, 1, 2}, {1, 2, 2, 2}, {2, 1, 1, 3}, {2, 2, 2, 3}};

std::string pw(const std::string& v, int e) { return v + "^" + std::to_string(e); }

struct Chart {
    std::string label;
    std::vector<std::string> vars;
    std::string p, q;
    std::vector<Rational> overrides;
};

Chart y1(const Tuple& t) {
    return {"brieskorn y=1", {"x", "z"}, pw("x", t.a + 1) + " + x*" + pw("z", t.a + t.b), pw("z", t.sigma), {}};
}
Chart x1(const Tuple& t) {
    return {"brieskorn x=1", {"y", "z"}, pw("z", t.a + t.b) + " + " + pw("y", t.b), pw("y", t.rho) + "*" + pw("z", t.sigma), {Rational(0)}};
}
Chart z1(const Tuple& t) {
    return {"brieskorn z=1", {"x", "y"}, "x*(1 + " + pw("x", t.a) + "*" + pw("y", t.b) + ")", pw("y", t.rho), {Rational(0)}};
}
const Chart kY52{"quadric y=1", {"x", "z"}, "x^2 + x*z^2", "z^3", {}};
const Chart kW52{"quadric w=1", {"x", "z"}, "x*z^2 + x^2*z^2 - x^4", "z^3", {Rational(0), Rational(1), Rational(-1), Rational(2)}};

std::vector<Chart> corpus() {
    std::vector<Chart> out;
    for (const auto& t : kTuples) {
        out.push_back(y1(t));
        out.push_back(x1(t));
        out.push_back(z1(t));
    }
    out.push_back(kY52);
    out.push_back(kW52);
    return out;
}

struct Cli {
    int code;
    std::string out, err;
};

Cli cli(std::vector<std::string> args) {
    args.insert(args.begin(), "meropole");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string rationals(const std::vector<Rational>& v) {
    std::vector<std::string> s;
    for (const auto& r : v) s.push_back(r.to_string());
    return join(s, ",");
}

Json germ_json(const Chart& c) {
    std::vector<std::string> args{"germ", "--vars", join(c.vars, ","), "--p", c.p, "--q", c.q, "--format", "json"};
    if (!c.overrides.empty()) args.push_back("--candidates=" + rationals(c.overrides));
    const Cli r = cli(args);
    if (r.code != 0) throw std::runtime_error(c.label + ": germ exited " + std::to_string(r.code) + ": " + r.err);
    return Json::parse(r.out);
}

// Collects failure messages for one criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what) {
        if (!(got == want)) {
            std::ostringstream os;
            os << what << ": got " << got << ", expected " << want;
            failures_.push_back(os.str());
        }
    }
    bool ok() const { return failures_.empty(); }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

int failed = 0;

void criterion(int n, const std::string& title, const std::function<void(Check&)>& body) {
    Check c;
    const auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  criterion " << n << ": " << title << " (" << secs << " s)\n";
    for (const auto& f : c.failures()) std::cout << "        " << f << "\n";
    if (!c.ok()) ++failed;
}

double elapsed(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Real solutions of the pole-saturated critical system of the quadric pencil, chart
// w=1, found by damped Newton iteration from a grid of starting points.
std::vector<std::array<double, 2>> newton_critical_points() {
    auto F = [](double x, double z) {
        return std::array<double, 2>{z * z + 2 * x * z * z - 4 * x * x * x, x * z * z + x * x * z * z - 3 * x * x * x * x};
    };
    auto J = [](double x, double z) {
        return std::array<double, 4>{2 * z * z - 12 * x * x, 2 * z + 4 * x * z, z * z + 2 * x * z * z - 12 * x * x * x,
                                     2 * x * z + 2 * x * x * z};
    };
    std::vector<std::array<double, 2>> roots;
    for (int i = 0; i <= 40; ++i)
        for (int k = 0; k <= 40; ++k) {
            double x = -2 + 0.1 * i + 0.013, z = -2 + 0.1 * k + 0.007;
            bool converged = false;
            for (int it = 0; it < 200; ++it) {
                const auto f = F(x, z);
                if (std::hypot(f[0], f[1]) < 1e-13) {
                    converged = true;
                    break;
                }
                const auto j = J(x, z);
                const double det = j[0] * j[3] - j[1] * j[2];
                if (std::abs(det) < 1e-300) break;
                x -= (j[3] * f[0] - j[1] * f[1]) / det;
                z -= (-j[2] * f[0] + j[0] * f[1]) / det;
                if (!std::isfinite(x) || !std::isfinite(z) || std::abs(x) > 1e6) break;
            }
            if (!converged || std::abs(z) < 1e-3 || std::abs(x) < 1e-3) continue;  // on the pole z = 0
            bool seen = false;
            for (const auto& r : roots) seen = seen || std::hypot(r[0] - x, r[1] - z) < 1e-6;
            if (!seen) roots.push_back({x, z});
        }
    return roots;
}

}  // namespace

int main() {
    criterion(1, "Brieskorn pencil jump law on chart y=1", [](Check& c) {
        for (const auto& t : kTuples) {
            const std::string tag = "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.rho) +
                                    "," + std::to_string(t.sigma) + ")";
            const auto t0 = Clock::now();
            const Json g = germ_json(y1(t));
            c.expect(elapsed(t0) < 5.0, tag + " took longer than 5 s");
            c.equal(g["generic_mu"].get<int>(), t.a * (t.sigma - 1), tag + " mu_generic");
            if (g["specials"].size() != 1) {
                c.expect(false, tag + " expected exactly one special value");
                continue;
            }
            const Json& s = g["specials"][0];
            c.equal(s["a"].get<std::string>(), std::string("0/1"), tag + " special value");
            c.equal(s["lambda_polar"].get<int>(), t.b + t.a * t.rho, tag + " lambda");
            c.equal(s["mu_special"].get<int>(), t.a * t.a + t.a * t.b + t.b, tag + " mu(0)");
        }
    });

    criterion(2, "Brieskorn pencil quiet charts x=1 and z=1", [](Check& c) {
        const auto t0 = Clock::now();
        for (const auto& t : kTuples) {
            const std::string tag = "(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
            const int expected = (t.b - 1) * (t.a + t.b - 1);
            const Json gx = germ_json(x1(t));
            c.equal(gx["generic_mu"].get<int>(), expected, tag + " x=1 mu_generic");
            for (const auto& s : gx["specials"]) {
                c.equal(s["mu_special"].get<int>(), expected, tag + " x=1 mu_special");
                c.equal(s["lambda_polar"].get<int>(), 0, tag + " x=1 lambda");
            }
            const Chart z = z1(t);
            const Json gz = germ_json(z);
            c.equal(gz["generic_mu"].get<int>(), 0, tag + " z=1 mu_generic");
            for (const auto& s : gz["specials"]) {
                c.equal(s["mu_special"].get<int>(), 0, tag + " z=1 mu_special");
                c.equal(s["lambda_polar"].get<int>(), 0, tag + " z=1 lambda");
            }
            const Cli pz = cli({"pencil", "--vars", "x,y", "--p", z.p, "--q", z.q, "--format", "json"});
            c.equal(pz.code, 0, tag + " z=1 pencil exit code");
            if (pz.code == 0) {
                const Json j = Json::parse(pz.out);
                c.expect(j["charts"][0]["critical_points"].empty(), tag + " z=1 has critical points");
                c.equal(j["totals"]["mu"].get<int>(), 0, tag + " z=1 mu");
                c.equal(j["totals"]["lambda"].get<int>(), 0, tag + " z=1 lambda");
            }
        }
        c.expect(elapsed(t0) < 5.0, "took longer than 5 s");
    });

    criterion(3, "quadric pencil germ charts", [](Check& c) {
        const auto t0 = Clock::now();
        const Json w = germ_json(kW52);
        c.equal(w["class_generic"].get<std::string>(), std::string("D_5"), "w=1 generic class");
        std::vector<std::string> seen;
        for (const auto& s : w["specials"]) {
            seen.push_back(s["a"]);
            c.equal(s["class_special"].get<std::string>(), std::string("D_5"), "w=1 class at " + s["a"].get<std::string>());
            c.equal(s["lambda_polar"].get<int>(), 0, "w=1 lambda at " + s["a"].get<std::string>());
        }
        c.equal(join(seen, " "), std::string("-1/1 0/1 1/1 2/1"), "w=1 analyzed values");
        const Json y = germ_json(kY52);
        c.equal(y["class_generic"].get<std::string>(), std::string("A_2"), "y=1 generic class");
        c.expect(y["specials"].size() == 1, "y=1 expected one special value");
        if (y["specials"].size() == 1) {
            c.equal(y["specials"][0]["a"].get<std::string>(), std::string("0/1"), "y=1 special value");
            c.equal(y["specials"][0]["class_special"].get<std::string>(), std::string("A_3"), "y=1 class at 0");
            c.equal(y["specials"][0]["lambda_polar"].get<int>(), 1, "y=1 lambda");
        }
        c.expect(elapsed(t0) < 5.0, "took longer than 5 s");
    });

    criterion(4, "quadric pencil global pipeline", [](Check& c) {
        const auto t0 = Clock::now();
        const Cli r = cli({"pencil", "--atlas", std::string(MEROPOLE_DATA_DIR) + "/quadric.atlas", "--format", "json"});
        c.expect(elapsed(t0) < 10.0, "took longer than 10 s");
        c.equal(r.code, 0, "exit code");
        if (r.code != 0) return;
        const Json j = Json::parse(r.out);
        c.equal(j["atypical_values"].dump(), std::string(R"(["-1/1","0/1","1/1"])"), "Lambda_f");
        c.equal(j["totals"]["mu"].get<int>(), 2, "mu");
        c.equal(j["totals"]["lambda"].get<int>(), 1, "lambda");
        c.equal(j["totals"]["b2"].get<int>(), 3, "b2");
        const Json& w = j["charts"][1];
        c.equal(w["name"].get<std::string>(), std::string("w1"), "second chart");
        c.equal(w["critical_points"].size(), std::size_t{2}, "number of critical points in w1");
        const std::vector<std::pair<std::string, std::string>> want{{"[\"1/2\",\"-1/2\"]", "-1/1"}, {"[\"1/2\",\"1/2\"]", "1/1"}};
        for (std::size_t i = 0; i < std::min<std::size_t>(2, w["critical_points"].size()); ++i) {
            const Json& cp = w["critical_points"][i];
            c.equal(cp["point"].dump(), want[i].first, "critical point");
            c.equal(cp["value"].get<std::string>(), want[i].second, "critical value");
            c.equal(cp["mu"].get<int>(), 1, "critical mu");
        }
        c.expect(j["charts"][0]["critical_points"].empty(), "chart y1 should have no critical points");

        // Independent numerical confirmation.
        const auto roots = newton_critical_points();
        c.equal(roots.size(), std::size_t{2}, "Newton root count off the pole");
        for (const auto& root : roots) {
            const double x = root[0], z = root[1];
            const bool match = std::abs(x - 0.5) < 1e-9 && std::abs(std::abs(z) - 0.5) < 1e-9;
            c.expect(match, "Newton root (" + std::to_string(x) + ", " + std::to_string(z) + ") not at (1/2, +-1/2)");
            const double value = (x * z * z + x * x * z * z - x * x * x * x) / (z * z * z);
            c.expect(std::abs(value - (z > 0 ? 1.0 : -1.0)) < 1e-9, "Newton critical value mismatch");
        }
    });

    criterion(5, "Milnor oracle", [](Check& c) {
        const auto t0 = Clock::now();
        const std::vector<std::string> xz{"x", "z"};
        for (unsigned u = 2; u <= 6; ++u)
            for (unsigned v = 2; v <= 6; ++v) {
                const auto mu = milnor_number(Germ(parse_expression(pw("x", u) + " + " + pw("z", v), xz))).mu;
                c.equal(mu, std::size_t{(u - 1) * (v - 1)}, "mu(x^" + std::to_string(u) + " + z^" + std::to_string(v) + ")");
            }
        std::mt19937_64 rng(0xacce55);
        std::uniform_int_distribution<long> coef(-9, 9);
        std::uniform_int_distribution<unsigned> deg(0, 5);
        int count = 0;
        while (count < 20) {
            MultiPoly f(xz);
            for (int k = 0; k < 5; ++k) f.add_term({deg(rng), deg(rng)}, Rational(coef(rng)));
            f = f - MultiPoly::constant(xz, f.constant_term());
            f = f - f.homogeneous_part(1);
            const long lx = coef(rng), lz = coef(rng);
            if (lx == 0 && lz == 0) continue;
            f = f + MultiPoly::monomial(xz, {1, 0}, Rational(lx)) + MultiPoly::monomial(xz, {0, 1}, Rational(lz));
            c.equal(milnor_number(Germ(f)).mu, std::size_t{0}, "mu(" + f.to_string() + ")");
            ++count;
        }
        c.expect(elapsed(t0) < 30.0, "took longer than 30 s");
    });

    criterion(6, "lambda_polar = lambda_jump without splitting on the corpus", [](Check& c) {
        for (const auto& chart : corpus()) {
            const Json g = germ_json(chart);
            for (const auto& s : g["specials"]) {
                const std::string tag = chart.label + " (" + chart.p + ") at " + s["a"].get<std::string>();
                c.equal(s["lambda_polar"].get<int>(), s["lambda_jump"].get<int>(), tag);
                c.expect(!s["splitting"].get<bool>(), tag + ": splitting reported");
            }
        }
    });

    criterion(7, "unit twists and shears preserve mu and lambda", [](Check& c) {
        const auto t0 = Clock::now();
        // Per analyzed value: (mu_special, lambda_polar, lambda_jump), plus the generic mu.
        auto profile = [](const PlaneGermFamily& fam, const std::vector<Rational>& values) {
            AnalysisOptions o;
            o.candidate_overrides = values;
            const GermReport r = analyze_germ(fam, o);
            std::ostringstream os;
            os << "generic " << r.mu_generic;
            for (const auto& s : r.specials)
                if (!s.trivial || std::find(values.begin(), values.end(), s.a) != values.end())
                    os << "; " << s.a.to_string() << ": " << s.mu_special << "/" << s.lambda_polar << "/" << s.lambda_jump;
            return os.str();
        };
        for (const auto& chart : corpus()) {
            const MultiPoly p = parse_expression(chart.p, chart.vars);
            const MultiPoly q = parse_expression(chart.q, chart.vars);
            const PlaneGermFamily base(p, q);
            std::vector<Rational> values = chart.overrides;
            values.push_back(Rational(0));
            const std::string want = profile(base, values);
            const std::string v0 = chart.vars[0], v1 = chart.vars[1];
            for (const std::string& u : std::vector<std::string>{"2", "1 + " + v0, "1 + " + v1, "3 + " + v0 + " + " + v1}) {
                const MultiPoly unit = parse_expression(u, chart.vars);
                const PlaneGermFamily twisted(p * unit, q * unit);
                c.equal(profile(twisted, values), want, chart.label + " (" + chart.p + ") twisted by " + u);
                for (const auto& a : values)
                    c.expect(unit_twist_check(base, unit, a), chart.label + " unit_twist_check " + u + " at " + a.to_string());
            }
            for (long k = 1; k <= 3; ++k) {
                const std::map<std::string, MultiPoly> sh{
                    {v0, MultiPoly::variable(chart.vars, v0) + Rational(k) * MultiPoly::variable(chart.vars, v1)}};
                const PlaneGermFamily sheared(p.substitute(sh), q.substitute(sh));
                c.equal(profile(sheared, values), want, chart.label + " (" + chart.p + ") sheared by " + std::to_string(k));
            }
        }
        c.expect(elapsed(t0) < 60.0, "took longer than 60 s");
    });

    criterion(8, "quadric pencil atypicality criterion and determinism", [](Check& c) {
        std::mt19937_64 rng(20040101);
        std::uniform_int_distribution<long> num(-60, 60), den(1, 25);
        std::vector<Rational> values;
        while (values.size() < 10) {
            const Rational r(num(rng), den(rng));
            if (r == Rational(-1) || r == Rational(0) || r == Rational(1)) continue;
            if (std::find(values.begin(), values.end(), r) == values.end()) values.push_back(r);
        }
        const std::vector<std::string> args{"pencil", "--atlas", std::string(MEROPOLE_DATA_DIR) + "/quadric.atlas",
                                            "--candidates=" + rationals(values), "--format", "json", "--seed", "77"};
        const Cli first = cli(args);
        c.equal(first.code, 0, "exit code");
        if (first.code != 0) return;
        const Json j = Json::parse(first.out);
        int found = 0;
        for (const auto& pv : j["per_value"]) {
            const Rational a = Rational::parse(pv["a"].get<std::string>());
            if (std::find(values.begin(), values.end(), a) == values.end()) continue;
            ++found;
            c.equal(pv["mu_a"].get<int>(), 0, "mu_a at " + a.to_string());
            c.equal(pv["lambda_a"].get<int>(), 0, "lambda_a at " + a.to_string());
        }
        c.equal(found, 10, "random values present in per_value");
        c.equal(j["atypical_values"].dump(), std::string(R"(["-1/1","0/1","1/1"])"), "Lambda_f");
        c.expect(cli(args).out == first.out, "second run with the same seed differs");
        std::vector<std::string> par = args;
        par.insert(par.end(), {"--parallelism", "4"});
        c.expect(cli(par).out == first.out, "parallel run differs");
    });

    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed;
}
