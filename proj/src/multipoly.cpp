#include "meropole/multipoly.hpp"

#include "meropole/errors.hpp"

#include <algorithm>
#include <sstream>

namespace meropole {

unsigned total_degree(const Exponent& e) {
    unsigned d = 0;
    for (unsigned v : e) d += v;
    return d;
}

bool GrlexDescending::operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
    MultiPoly p(std::move(variables));
    p.add_term(Exponent(p.arity(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::string_view name) {
    MultiPoly p(std::move(variables));
    Exponent e(p.arity(), 0);
    e[p.index_of(name)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponent e, const Rational& c) {
    MultiPoly p(std::move(variables));
    if (e.size() != p.arity()) throw InputError("exponent length does not match variable count");
    p.add_term(e, c);
    return p;
}

std::size_t MultiPoly::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw InputError("unknown variable '" + std::string(name) + "'");
}

bool MultiPoly::has_variable(std::string_view name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && meropole::total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_term() const { return coefficient(Exponent(arity(), 0)); }

Rational MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(meropole::total_degree(terms_.begin()->first));
}

int MultiPoly::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

int MultiPoly::order() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(meropole::total_degree(terms_.rbegin()->first));
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
    const int d = degree_in(var);
    std::vector<MultiPoly> out(d < 0 ? 0 : static_cast<std::size_t>(d) + 1, MultiPoly(vars_));
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        f[var] = 0;
        out[e[var]].terms_.emplace(std::move(f), c);
    }
    return out;
}

MultiPoly MultiPoly::from_coefficients(std::span<const MultiPoly> coeffs, std::size_t var) {
    if (coeffs.empty()) return MultiPoly();
    MultiPoly out(coeffs.front().vars_);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        for (const auto& [e, c] : coeffs[i].terms_) {
            Exponent f = e;
            f[var] += static_cast<unsigned>(i);
            out.add_term(f, c);
        }
    }
    return out;
}

MultiPoly MultiPoly::homogeneous_part(unsigned d) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_)
        if (meropole::total_degree(e) == d) out.terms_.emplace(e, c);
    return out;
}

MultiPoly MultiPoly::truncated_below(unsigned k) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_)
        if (meropole::total_degree(e) < k) out.terms_.emplace(e, c);
    return out;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != vars_.size()) throw InputError("exponent length does not match variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::require_same_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw InputError("variable-list mismatch");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_vars(b);
    MultiPoly out(a.vars_);
    const std::size_t n = a.arity();
    Exponent f(n);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i) f[i] = ea[i] + eb[i];
            out.add_term(f, ca * cb);
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::shifted(const Exponent& s) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (std::size_t i = 0; i < f.size(); ++i) f[i] += s[i];
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != arity()) throw InputError("evaluation point has wrong dimension");
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= point[i].pow(e[i]);
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::derivative(std::string_view var) const { return derivative(index_of(var)); }

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent f = e;
        f[var] -= 1;
        out.terms_.emplace(std::move(f), c * Rational(static_cast<long>(e[var])));
    }
    return out;
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings) const {
    for (const auto& [name, expr] : bindings) index_of(name);

    std::vector<std::string> result_vars;
    auto push_unique = [&](const std::string& v) {
        if (std::find(result_vars.begin(), result_vars.end(), v) == result_vars.end()) result_vars.push_back(v);
    };
    for (const auto& v : vars_) {
        auto it = bindings.find(v);
        if (it == bindings.end()) {
            push_unique(v);
        } else {
            for (const auto& w : it->second.variables()) push_unique(w);
        }
    }

    // Images of every source variable in the result ring, with cached powers.
    std::vector<MultiPoly> image;
    image.reserve(arity());
    for (const auto& v : vars_) {
        auto it = bindings.find(v);
        image.push_back(it == bindings.end() ? MultiPoly::variable(result_vars, v)
                                             : it->second.embed(result_vars));
    }
    std::vector<std::vector<MultiPoly>> powers(arity());
    auto power = [&](std::size_t i, unsigned e) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(MultiPoly::constant(result_vars, Rational(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * image[i]);
        return cache[e];
    };

    MultiPoly out(result_vars);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(result_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t = t * power(i, e[i]);
        out += t;
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, Rational>& values) const {
    std::map<std::string, MultiPoly> bindings;
    for (const auto& [name, v] : values) bindings.emplace(name, MultiPoly::constant({}, v));
    return substitute(bindings);
}

MultiPoly MultiPoly::embed(const std::vector<std::string>& variables) const {
    if (variables == vars_) return *this;
    std::vector<std::ptrdiff_t> where(arity(), -1);
    for (std::size_t i = 0; i < arity(); ++i) {
        auto it = std::find(variables.begin(), variables.end(), vars_[i]);
        if (it != variables.end()) where[i] = it - variables.begin();
    }
    MultiPoly out(variables);
    for (const auto& [e, c] : terms_) {
        Exponent f(variables.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0) throw InputError("cannot drop variable '" + vars_[i] + "' that occurs");
            f[static_cast<std::size_t>(where[i])] = e[i];
        }
        out.add_term(f, c);
    }
    return out;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(0);
    BigInt num = 0;
    BigInt den = 1;
    for (const auto& [e, c] : terms_) {
        num = gcd(num, c.numerator());
        den = lcm(den, c.denominator());
    }
    return Rational(num, den);
}

MultiPoly MultiPoly::normalized() const {
    if (terms_.empty()) return *this;
    Rational scale = Rational(1) / content();
    if (leading_coefficient().sign() < 0) scale = -scale;
    MultiPoly out(*this);
    out *= scale;
    return out;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
    require_same_vars(divisor);
    if (divisor.is_zero()) throw InputError("division by zero polynomial");
    MultiPoly rem = *this;
    MultiPoly quot(vars_);
    const Exponent& dl = divisor.leading_exponent();
    const Rational& dc = divisor.leading_coefficient();
    Exponent shift(arity());
    while (!rem.is_zero()) {
        const Exponent& rl = rem.leading_exponent();
        for (std::size_t i = 0; i < arity(); ++i) {
            if (rl[i] < dl[i]) return std::nullopt;
            shift[i] = rl[i] - dl[i];
        }
        const Rational c = rem.leading_coefficient() / dc;
        quot.add_term(shift, c);
        for (const auto& [e, v] : divisor.terms_) {
            Exponent f = e;
            for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
            rem.add_term(f, -(c * v));
        }
    }
    return quot;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool is_const = meropole::total_degree(e) == 0;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (is_const || mag != Rational(1)) {
            os << mag.to_string();
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << '*';
            os << vars_[i];
            if (e[i] > 1) os << '^' << e[i];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace meropole
