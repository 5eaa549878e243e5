#include "meropole/report.hpp"

#include <algorithm>
#include <sstream>

namespace meropole {

namespace {

Json rational(const Rational& r) { return r.to_fraction_string(); }

Json point(const Point& p) {
    Json out = Json::array();
    for (const auto& c : p) out.push_back(rational(c));
    return out;
}

std::string point_text(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].to_string();
    return s + ")";
}

std::string set_text(const std::vector<Rational>& values) {
    std::string s = "{";
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + values[i].to_string();
    return s + "}";
}

std::string monomial_text(const Exponent& e, const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

Json special(const SpecialValueRecord& r) {
    Json j;
    j["a"] = rational(r.a);
    j["mu_special"] = r.mu_special;
    j["mu_generic"] = r.mu_generic;
    j["lambda_polar"] = r.lambda_polar;
    j["lambda_jump"] = r.lambda_jump;
    j["splitting"] = r.splitting_detected;
    j["mu_nearby_sum"] = r.mu_nearby_sum;
    j["class_special"] = r.class_special.label();
    j["trivial"] = r.trivial;
    return j;
}

Json base_point(const GermReport& g) {
    Json j;
    j["point"] = point(g.point);
    j["generic_mu"] = g.mu_generic;
    j["class_generic"] = g.class_generic.label();
    Json specials = Json::array();
    for (const auto& r : g.specials) specials.push_back(special(r));
    j["specials"] = std::move(specials);
    return j;
}

// Left-aligned columns separated by two spaces.
class Table {
public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void write(std::ostream& os, const std::string& indent) const {
        std::vector<std::size_t> width(rows_.front().size(), 0);
        for (const auto& r : rows_)
            for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
        for (const auto& r : rows_) {
            std::string line = indent;
            for (std::size_t c = 0; c < r.size(); ++c) {
                line += r[c];
                if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
            }
            os << line << "\n";
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

void specials_table(std::ostream& os, const GermReport& g, const std::string& indent) {
    Table t({"a", "mu(a)", "mu_gen", "lambda_polar", "lambda_jump", "splitting", "sum mu_i(s)", "class"});
    for (const auto& r : g.specials)
        t.add({r.a.to_string(), std::to_string(r.mu_special), std::to_string(r.mu_generic),
               std::to_string(r.lambda_polar), std::to_string(r.lambda_jump), r.splitting_detected ? "yes" : "no",
               std::to_string(r.mu_nearby_sum), r.class_special.label() + " <- " + r.class_generic.label()});
    t.write(os, indent);
}

}  // namespace

Json to_json(const PencilReport& report) {
    Json j;
    Json charts = Json::array();
    for (const auto& c : report.charts) {
        Json cj;
        cj["name"] = c.name;
        cj["p"] = c.p.to_string();
        cj["q"] = c.q.to_string();
        Json crit = Json::array();
        for (std::size_t i = 0; i < c.critical_points.size(); ++i) {
            const auto& cp = c.critical_points[i];
            Json pj;
            pj["point"] = point(cp.point);
            pj["value"] = rational(cp.value);
            pj["mu"] = cp.milnor.mu;
            pj["class"] = cp.cls.label();
            pj["counted"] = static_cast<bool>(c.critical_counted[i]);
            crit.push_back(std::move(pj));
        }
        cj["critical_points"] = std::move(crit);
        Json bps = Json::array();
        for (const auto& g : c.base_points) bps.push_back(base_point(g));
        cj["base_points"] = std::move(bps);
        cj["complete"] = c.complete;
        charts.push_back(std::move(cj));
    }
    j["charts"] = std::move(charts);
    Json atypical = Json::array();
    for (const auto& a : report.atypical_values) atypical.push_back(rational(a));
    j["atypical_values"] = std::move(atypical);
    Json per_value = Json::array();
    for (const auto& v : report.per_value)
        per_value.push_back(Json{{"a", rational(v.a)}, {"mu_a", v.mu_a}, {"lambda_a", v.lambda_a}});
    j["per_value"] = std::move(per_value);
    j["totals"] = Json{{"mu", report.mu}, {"lambda", report.lambda}, {"b2", report.b2}, {"chi_rel", report.chi_rel}};
    j["warnings"] = report.warnings;
    return j;
}

Json to_json(const GermReport& report) {
    Json j = base_point(report);
    j["polar_curve"] = report.polar.equation.to_string();
    j["generic_polar_intersection"] = report.generic_polar_intersection;
    Json irrational = Json::array();
    for (const auto& f : report.candidates.irrational) irrational.push_back(f.to_string());
    j["irrational_candidates"] = std::move(irrational);
    j["complete"] = report.complete();
    j["warnings"] = report.warnings;
    return j;
}

Json to_json(const MilnorQuery& query) {
    Json j;
    j["poly"] = query.poly.to_string();
    j["point"] = point(query.point);
    j["mu"] = query.result.mu;
    j["stabilization_degree"] = query.result.stabilization_degree;
    Json basis = Json::array();
    for (const auto& m : query.result.basis_monomials) basis.push_back(monomial_text(m, query.poly.variables()));
    j["basis"] = std::move(basis);
    return j;
}

Json to_json(const ClassifyQuery& query) {
    Json j;
    j["poly"] = query.poly.to_string();
    j["point"] = point(query.point);
    j["class"] = query.cls.label();
    j["mu"] = query.cls.mu;
    j["corank"] = query.cls.corank;
    return j;
}

std::string to_text(const PencilReport& report) {
    std::ostringstream os;
    for (const auto& c : report.charts) {
        os << "chart " << c.name << ": f = (" << c.p.to_string() << ") / (" << c.q.to_string() << ")"
           << (c.complete ? "" : "  [incomplete]") << "\n";
        if (c.critical_points.empty()) {
            os << "  critical points off the poles: none\n";
        } else {
            os << "  critical points off the poles:\n";
            Table t({"point", "value", "mu", "class", "counted"});
            for (std::size_t i = 0; i < c.critical_points.size(); ++i) {
                const auto& cp = c.critical_points[i];
                t.add({point_text(cp.point), cp.value.to_string(), std::to_string(cp.milnor.mu), cp.cls.label(),
                       c.critical_counted[i] ? "yes" : "no"});
            }
            t.write(os, "    ");
        }
        for (const auto& g : c.base_points) {
            os << "  base point " << point_text(g.point) << ": generic mu = " << g.mu_generic << " ("
               << g.class_generic.label() << ")\n";
            if (!g.specials.empty()) specials_table(os, g, "    ");
        }
    }
    os << "per value:\n";
    Table t({"a", "mu_a", "lambda_a"});
    for (const auto& v : report.per_value) t.add({v.a.to_string(), std::to_string(v.mu_a), std::to_string(v.lambda_a)});
    t.write(os, "  ");
    os << "Lambda_f = " << set_text(report.atypical_values) << "\n";
    os << "mu = " << report.mu << "\n";
    os << "lambda = " << report.lambda << "\n";
    os << "b_2(X,F) = mu + lambda = " << report.b2 << "\n";
    os << "chi(X,F) = " << report.chi_rel << "\n";
    for (const auto& w : report.warnings) os << "warning: " << w << "\n";
    return os.str();
}

std::string to_text(const GermReport& report) {
    std::ostringstream os;
    os << "base point " << point_text(report.point) << "\n";
    os << "polar curve: " << report.polar.equation.to_string() << " = 0\n";
    os << "generic member: mu = " << report.mu_generic << " (" << report.class_generic.label() << ")\n";
    if (report.specials.empty()) {
        os << "special values: none\n";
    } else {
        os << "special values:\n";
        specials_table(os, report, "  ");
    }
    if (!report.complete()) os << "enumeration incomplete: irrational special values present\n";
    for (const auto& w : report.warnings) os << "warning: " << w << "\n";
    return os.str();
}

std::string to_text(const MilnorQuery& query) {
    std::ostringstream os;
    os << "mu = " << query.result.mu << "\n";
    os << "stabilized at jet order " << query.result.stabilization_degree << "\n";
    os << "monomial basis:";
    for (const auto& m : query.result.basis_monomials) os << " " << monomial_text(m, query.poly.variables());
    os << "\n";
    return os.str();
}

std::string to_text(const ClassifyQuery& query) {
    std::ostringstream os;
    os << query.cls.label() << " (mu = " << query.cls.mu << ", corank = " << query.cls.corank << ")\n";
    return os.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace meropole
