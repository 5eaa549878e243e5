#include "meropole/rational.hpp"

#include "meropole/errors.hpp"

#include <cctype>

namespace meropole {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(unsigned e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(r);
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    const auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text))
        throw InputError("malformed rational '" + std::string(text) + "'");
    BigInt num{std::string(num_text)};
    BigInt den{std::string(den_text)};
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::to_fraction_string() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return to_fraction_string();
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace meropole
