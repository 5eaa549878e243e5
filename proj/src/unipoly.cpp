#include "meropole/unipoly.hpp"

#include "meropole/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace meropole {

UniPoly::UniPoly(std::string variable, std::vector<Rational> coeffs)
    : var_(std::move(variable)), c_(std::move(coeffs)) {
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::from_multi(const MultiPoly& p) {
    std::ptrdiff_t var = -1;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (var >= 0 && static_cast<std::size_t>(var) != i)
                throw InputError("polynomial is not univariate: " + p.to_string());
            var = static_cast<std::ptrdiff_t>(i);
        }
    }
    std::string name = var >= 0 ? p.variables()[static_cast<std::size_t>(var)]
                                : (p.arity() > 0 ? p.variables().front() : std::string("t"));
    std::vector<Rational> coeffs;
    for (const auto& [e, c] : p.terms()) {
        const unsigned d = var >= 0 ? e[static_cast<std::size_t>(var)] : 0;
        if (coeffs.size() <= d) coeffs.resize(d + 1);
        coeffs[d] = c;
    }
    return UniPoly(std::move(name), std::move(coeffs));
}

MultiPoly UniPoly::to_multi(const std::vector<std::string>& variables) const {
    MultiPoly out(variables);
    const std::size_t v = out.index_of(var_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        Exponent e(variables.size(), 0);
        e[v] = static_cast<unsigned>(i);
        out.add_term(e, c_[i]);
    }
    return out;
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return UniPoly(var_, std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    const Rational inv = Rational(1) / leading();
    return inv * *this;
}

UniPoly UniPoly::operator-() const { return Rational(-1) * *this; }

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return UniPoly(a.var_.empty() ? b.var_ : a.var_, std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.var_.empty() ? b.var_ : a.var_);
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(a.var_.empty() ? b.var_ : a.var_, std::move(c));
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
    std::vector<Rational> c = a.c_;
    for (auto& v : c) v *= s;
    return UniPoly(a.var_, std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw InputError("division by zero polynomial");
    std::vector<Rational> rem = a.c_;
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) return {UniPoly(a.var_), a};
    std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1));
    const Rational inv = Rational(1) / b.leading();
    for (int k = da - db; k >= 0; --k) {
        const Rational q = rem[static_cast<std::size_t>(k + db)] * inv;
        quot[static_cast<std::size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.c_[static_cast<std::size_t>(j)];
    }
    return {UniPoly(a.var_, std::move(quot)), UniPoly(a.var_, std::move(rem))};
}

std::string UniPoly::to_string() const {
    std::vector<std::string> vars{var_.empty() ? std::string("t") : var_};
    UniPoly named(vars.front(), c_);
    return named.to_multi(vars).to_string();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a;
    UniPoly y = b;
    while (!y.is_zero()) {
        auto r = UniPoly::divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
    const std::string& v = a.variable().empty() ? b.variable() : a.variable();
    UniPoly r0 = a, r1 = b;
    UniPoly s0(v, {Rational(1)}), s1(v);
    UniPoly t0(v), t1(v, {Rational(1)});
    while (!r1.is_zero()) {
        auto [q, r] = UniPoly::divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UniPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Rational inv = Rational(1) / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

UniPoly squarefree_part(const UniPoly& u) {
    if (u.is_zero()) throw InputError("square-free part of the zero polynomial");
    if (u.is_constant()) return UniPoly(u.variable(), {Rational(1)});
    const UniPoly g = gcd(u, u.derivative());
    return UniPoly::divmod(u, g).first.monic();
}

namespace {

// Prime factorisation by trial division followed by Pollard-Brent.
void factor_into(BigInt n, std::map<BigInt, unsigned>& out);

BigInt pollard_brent(const BigInt& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2, x, ys, q = 1, g = 1;
        const unsigned long m = 64;
        unsigned long r = 1;
        auto f = [&](const BigInt& v) {
            BigInt w = v * v + c;
            mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
            return w;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    BigInt d = x - y;
                    q = q * abs(d);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(BigInt(abs(BigInt(x - ys))), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(BigInt n, std::map<BigInt, unsigned>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    for (unsigned long p = 2; p < 1000; ++p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[BigInt(p)] += 1;
            n /= p;
        }
        if (n == 1) return;
    }
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        out[n] += 1;
        return;
    }
    const BigInt d = pollard_brent(n);
    factor_into(d, out);
    factor_into(BigInt(n / d), out);
}

std::vector<BigInt> divisors(const BigInt& n) {
    std::map<BigInt, unsigned> f;
    factor_into(n, f);
    std::vector<BigInt> out{1};
    for (const auto& [p, e] : f) {
        const std::size_t base = out.size();
        BigInt pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// v^n * W(u/v) for an integer polynomial W of degree n.
BigInt homogeneous_value(const std::vector<BigInt>& w, const BigInt& u, const BigInt& v) {
    BigInt acc = 0;
    BigInt vpow = 1;
    // Horner on the homogenised form: acc = sum w_i u^i v^(n-i).
    const std::size_t n = w.size() - 1;
    std::vector<BigInt> vp(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        vp[i] = vpow;
        vpow *= v;
    }
    for (std::size_t i = n + 1; i-- > 0;) acc = acc * u + w[i] * vp[n - i];
    return acc;
}

}  // namespace

RationalRoots rational_roots(const UniPoly& u) {
    if (u.is_zero()) throw InputError("rational roots of the zero polynomial");
    UniPoly s = squarefree_part(u);
    RationalRoots out;
    const std::string& var = u.variable();
    if (s.degree() >= 1 && s.coefficient(0).is_zero()) {
        out.roots.emplace_back(0);
        s = UniPoly::divmod(s, UniPoly(var, {Rational(0), Rational(1)})).first;
    }
    if (s.degree() >= 1) {
        BigInt den = 1;
        for (const auto& c : s.coefficients()) den = lcm(den, c.denominator());
        std::vector<BigInt> w;
        BigInt cont = 0;
        for (const auto& c : s.coefficients()) {
            w.push_back(c.numerator() * (den / c.denominator()));
            cont = gcd(cont, w.back());
        }
        for (auto& c : w) c /= cont;
        const std::size_t n = w.size() - 1;

        // Cauchy bound |r| <= 1 + max |w_i / w_n|.
        Rational bound = 0;
        for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, Rational(w[i], w[n]).abs());
        bound += Rational(1);

        BigInt w_at_1 = 0, w_at_m1 = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            w_at_1 += w[i];
            w_at_m1 += (i % 2 == 0) ? w[i] : BigInt(-w[i]);
        }

        const auto num_divs = divisors(w[0]);
        const auto den_divs = divisors(w[n]);
        for (const auto& dv : den_divs) {
            for (const auto& dn : num_divs) {
                if (gcd(dn, dv) != 1) continue;
                if (Rational(dn, dv) > bound) break;
                for (int sign : {1, -1}) {
                    const BigInt num = sign * dn;
                    if (w_at_1 != 0 && !mpz_divisible_p(w_at_1.get_mpz_t(), BigInt(dv - num).get_mpz_t())) continue;
                    if (w_at_m1 != 0 && !mpz_divisible_p(w_at_m1.get_mpz_t(), BigInt(dv + num).get_mpz_t())) continue;
                    if (homogeneous_value(w, num, dv) == 0) out.roots.emplace_back(num, dv);
                }
            }
        }
        for (const auto& r : out.roots) {
            if (r.is_zero()) continue;
            s = UniPoly::divmod(s, UniPoly(var, {-r, Rational(1)})).first;
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.remainder = s.monic();
    return out;
}

}  // namespace meropole
