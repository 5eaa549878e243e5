#include "meropole/atlas.hpp"

#include "meropole/errors.hpp"
#include "meropole/parser.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace meropole {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

struct PendingChart {
    ChartSpec spec;
    bool has_vars = false, has_p = false, has_q = false;
    std::size_t line = 0;
};

struct PendingOverlap {
    OverlapSpec spec;
    std::vector<std::pair<std::string, std::string>> raw;  // (target variable, right-hand side)
    std::size_t line = 0;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw InputError("atlas line " + std::to_string(line) + ": " + what);
}

Point parse_point(const std::string& text, std::size_t line) {
    const std::string t = trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') fail(line, "expected a point like (0, 0), got '" + t + "'");
    Point p;
    std::istringstream is(t.substr(1, t.size() - 2));
    for (std::string c; std::getline(is, c, ',');) p.push_back(Rational::parse(trim(c)));
    return p;
}

void finish_chart(PendingChart& c, std::vector<ChartSpec>& out) {
    if (!c.has_vars || !c.has_p || !c.has_q) fail(c.line, "chart '" + c.spec.name + "' needs vars, p and q");
    if (c.spec.declared_base_points) {
        for (const auto& pt : *c.spec.declared_base_points) {
            if (pt.size() != c.spec.variables.size()) fail(c.line, "base point has the wrong number of coordinates");
            if (!c.spec.p.evaluate(pt).is_zero() || !c.spec.q.evaluate(pt).is_zero())
                fail(c.line, "declared base point of chart '" + c.spec.name + "' is not a common zero of p and q");
        }
    }
    out.push_back(std::move(c.spec));
}

}  // namespace

Atlas parse_atlas(std::string_view text) {
    Atlas atlas;
    std::optional<PendingChart> chart;
    std::vector<PendingOverlap> overlaps;
    bool in_overlap = false;

    std::istringstream is{std::string(text)};
    std::size_t lineno = 0;
    for (std::string raw; std::getline(is, raw);) {
        ++lineno;
        const std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(lineno, "unterminated section header");
            if (chart) finish_chart(*chart, atlas.charts);
            chart.reset();
            in_overlap = false;
            const auto w = words(line.substr(1, line.size() - 2));
            if (w.size() == 2 && w[0] == "chart") {
                for (const auto& c : atlas.charts)
                    if (c.name == w[1]) fail(lineno, "duplicate chart '" + w[1] + "'");
                chart.emplace();
                chart->spec.name = w[1];
                chart->line = lineno;
            } else if (w.size() == 3 && w[0] == "overlap") {
                overlaps.push_back(PendingOverlap{OverlapSpec{w[1], w[2], {}}, {}, lineno});
                in_overlap = true;
            } else {
                fail(lineno, "expected [chart NAME] or [overlap FROM TO]");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (in_overlap) {
                overlaps.back().raw.emplace_back(key, value);
            } else if (!chart) {
                fail(lineno, "entry outside a section");
            } else if (key == "vars") {
                chart->spec.variables = parse_variable_list(value);
                if (chart->spec.variables.size() != 2) fail(lineno, "charts need exactly two variables");
                chart->has_vars = true;
            } else if (key == "p" || key == "q") {
                if (!chart->has_vars) fail(lineno, "vars must precede p and q");
                (key == "p" ? chart->spec.p : chart->spec.q) = parse_expression(value, chart->spec.variables);
                (key == "p" ? chart->has_p : chart->has_q) = true;
            } else if (key == "base_points") {
                std::vector<Point> pts;
                std::istringstream ps(value);
                for (std::string item; std::getline(ps, item, ';');)
                    if (!trim(item).empty()) pts.push_back(parse_point(item, lineno));
                chart->spec.declared_base_points = std::move(pts);
            } else {
                fail(lineno, "unknown key '" + key + "'");
            }
        } catch (const InputError& e) {
            if (std::string_view(e.what()).starts_with("atlas line")) throw;
            fail(lineno, e.what());
        }
    }
    if (chart) finish_chart(*chart, atlas.charts);

    auto find = [&](const std::string& name) -> const ChartSpec* {
        for (const auto& c : atlas.charts)
            if (c.name == name) return &c;
        return nullptr;
    };
    for (auto& ov : overlaps) {
        const ChartSpec* from = find(ov.spec.from);
        const ChartSpec* to = find(ov.spec.to);
        if (from == nullptr || to == nullptr) fail(ov.line, "overlap refers to an unknown chart");
        for (const auto& [target, rhs] : ov.raw) {
            if (std::find(to->variables.begin(), to->variables.end(), target) == to->variables.end())
                fail(ov.line, "'" + target + "' is not a variable of chart '" + to->name + "'");
            std::string num = rhs, den = "1";
            const auto w = rhs.find(" over ");
            if (w != std::string::npos) {
                num = rhs.substr(0, w);
                den = rhs.substr(w + 6);
            }
            try {
                ov.spec.map[target] = {parse_expression(num, from->variables), parse_expression(den, from->variables)};
            } catch (const InputError& e) {
                fail(ov.line, e.what());
            }
            if (ov.spec.map[target].second.is_zero()) fail(ov.line, "zero denominator in overlap map");
        }
        for (const auto& v : to->variables)
            if (ov.spec.map.count(v) == 0) fail(ov.line, "overlap map does not define '" + v + "'");
        atlas.overlaps.push_back(std::move(ov.spec));
    }
    return atlas;
}

Atlas load_atlas(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read atlas file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_atlas(ss.str());
}

}  // namespace meropole
