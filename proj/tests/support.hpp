#pragma once

#include "meropole/multipoly.hpp"
#include "meropole/parser.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

using meropole::Exponent;
using meropole::MultiPoly;
using meropole::Rational;

inline const std::vector<std::string> XZ{"x", "z"};

inline MultiPoly P(const std::string& text, const std::vector<std::string>& vars = XZ) {
    return meropole::parse_expression(text, vars);
}

inline Rational random_rational(std::mt19937_64& rng, long height) {
    std::uniform_int_distribution<long> num(-height, height), den(1, height);
    return Rational(num(rng), den(rng));
}

/// Up to `terms` terms of degree <= `degree`, coefficients of height <= `height`.
inline MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int terms, unsigned degree,
                             long height = 100, bool integer = false) {
    MultiPoly p(vars);
    std::uniform_int_distribution<unsigned> ex(0, degree);
    std::uniform_int_distribution<long> coef(-height, height);
    for (int i = 0; i < terms; ++i) {
        Exponent e(vars.size());
        for (auto& k : e) k = ex(rng);
        p.add_term(e, integer ? Rational(coef(rng)) : random_rational(rng, height));
    }
    return p;
}

}  // namespace testing
