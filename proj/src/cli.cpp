#include "meropole/cli.hpp"

#include "meropole/atlas.hpp"
#include "meropole/errors.hpp"
#include "meropole/parser.hpp"
#include "meropole/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace meropole {

namespace {

struct Common {
    std::uint64_t seed = kDefaultSeed;
    int jet_cap = kDefaultJetCap;
    std::string candidates;
    std::string format = "text";
    std::string out;
    unsigned parallelism = 1;
};

struct Inputs {
    std::string vars = "x,z";
    std::string poly, p, q, point, atlas;
    bool allow_incomplete = false;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--seed", c.seed, "seed for generic parameter samples");
    sub->add_option("--jet-cap", c.jet_cap, "highest jet order tried by the Milnor engine")->check(CLI::Range(4, 100000));
    sub->add_option("--candidates", c.candidates, "extra parameter values to analyze, comma separated");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", c.out, "also write the report to this file");
    sub->add_option("--parallelism", c.parallelism, "worker threads")->check(CLI::Range(1U, 1024U));
}

std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    std::istringstream is(text);
    for (std::string item; std::getline(is, item, ',');) out.push_back(Rational::parse(item));
    return out;
}

Point parse_point(const std::string& text, std::size_t arity) {
    if (text.empty()) return Point(arity, Rational(0));
    Point p = parse_rationals(text);
    if (p.size() != arity)
        throw InputError("point has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(arity));
    return p;
}

MultiPoly translated(const MultiPoly& f, const Point& pt) {
    std::map<std::string, MultiPoly> shift;
    for (std::size_t i = 0; i < f.arity(); ++i) {
        const auto& v = f.variables()[i];
        shift.emplace(v, MultiPoly::variable(f.variables(), v) + MultiPoly::constant(f.variables(), pt[i]));
    }
    return f.substitute(shift);
}

AnalysisOptions analysis_options(const Common& c) {
    AnalysisOptions o;
    o.jet_cap = c.jet_cap;
    o.seed = c.seed;
    if (!c.candidates.empty()) o.candidate_overrides = parse_rationals(c.candidates);
    return o;
}

template <class Report>
std::string render(const Report& r, const Common& c) {
    return c.format == "json" ? dump(to_json(r)) : to_text(r);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of meromorphic functions p/q: Milnor numbers, polar jumps, atypical values.", "meropole"};
    app.require_subcommand(1);
    Common common;
    Inputs in;

    auto* mu = app.add_subcommand("mu", "Milnor number of a hypersurface germ at a point");
    mu->add_option("--vars", in.vars, "comma separated variable list");
    mu->add_option("--poly", in.poly, "polynomial")->required();
    mu->add_option("--point", in.point, "point, comma separated rationals (default origin)");

    auto* classify = app.add_subcommand("classify", "ADE type of a plane curve germ at a point");
    classify->add_option("--vars", in.vars, "two variables");
    classify->add_option("--poly", in.poly, "polynomial")->required();
    classify->add_option("--point", in.point, "point (default origin)");

    auto* germ = app.add_subcommand("germ", "analysis of the family p - t*q at one base point");
    germ->add_option("--vars", in.vars, "two variables");
    germ->add_option("--p", in.p, "numerator")->required();
    germ->add_option("--q", in.q, "denominator")->required();
    germ->add_option("--point", in.point, "base point (default origin)");

    auto* pencil = app.add_subcommand("pencil", "global analysis over a chart atlas");
    auto* atlas_opt = pencil->add_option("--atlas", in.atlas, "atlas file");
    auto* pv = pencil->add_option("--vars", in.vars, "two variables of a single chart");
    auto* pp = pencil->add_option("--p", in.p, "numerator of a single chart");
    auto* pq = pencil->add_option("--q", in.q, "denominator of a single chart");
    atlas_opt->excludes(pv)->excludes(pp)->excludes(pq);
    pp->needs(pq);
    pq->needs(pp);
    pencil->add_flag("--allow-incomplete", in.allow_incomplete, "report totals even if an enumeration is incomplete");

    for (auto* sub : {mu, classify, germ, pencil}) add_common(sub, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        std::string text;
        if (mu->parsed() || classify->parsed()) {
            const auto vars = parse_variable_list(in.vars);
            const MultiPoly f = parse_expression(in.poly, vars);
            const Point pt = parse_point(in.point, vars.size());
            const Germ g(translated(f, pt));
            if (mu->parsed()) {
                text = render(MilnorQuery{f, pt, milnor_number(g, common.jet_cap)}, common);
            } else {
                if (vars.size() != 2) throw InputError("classify needs exactly two variables");
                text = render(ClassifyQuery{f, pt, classify_plane_germ(g, common.jet_cap)}, common);
            }
        } else if (germ->parsed()) {
            const auto vars = parse_variable_list(in.vars);
            if (vars.size() != 2) throw InputError("germ needs exactly two variables");
            const MultiPoly p = parse_expression(in.p, vars);
            const MultiPoly q = parse_expression(in.q, vars);
            const PlaneGermFamily fam(p, q, parse_point(in.point, 2));
            text = render(analyze_germ(fam, analysis_options(common)), common);
        } else {
            Atlas atlas;
            if (!in.atlas.empty()) {
                atlas = load_atlas(in.atlas);
            } else if (!in.p.empty()) {
                ChartSpec chart;
                chart.name = "chart";
                chart.variables = parse_variable_list(in.vars);
                if (chart.variables.size() != 2) throw InputError("charts need exactly two variables");
                chart.p = parse_expression(in.p, chart.variables);
                chart.q = parse_expression(in.q, chart.variables);
                atlas.charts.push_back(std::move(chart));
            } else {
                throw InputError("pencil needs --atlas or --p/--q");
            }
            PencilOptions po;
            po.analysis = analysis_options(common);
            po.parallelism = common.parallelism;
            po.allow_incomplete = in.allow_incomplete;
            text = render(analyze_pencil(atlas, po), common);
        }
        out << text;
        if (!common.out.empty()) {
            std::ofstream file(common.out, std::ios::binary);
            if (!file || !(file << text)) throw InputError("cannot write '" + common.out + "'");
        }
        return 0;
    } catch (const Refusal& e) {
        err << "refused: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace meropole
