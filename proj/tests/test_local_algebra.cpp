#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "meropole/elimination.hpp"
#include "meropole/errors.hpp"
#include "meropole/local_algebra.hpp"
#include "support.hpp"

using namespace meropole;
using testing::P;
using testing::random_poly;

namespace {

std::size_t mu(const std::string& s, int cap = kDefaultJetCap) { return milnor_number(Germ(P(s)), cap).mu; }

std::optional<std::size_t> ii(const std::string& a, const std::string& b) {
    return local_intersection_multiplicity(Germ(P(a)), Germ(P(b)));
}

MultiPoly shear(const MultiPoly& f, long c) {
    return f.substitute(std::map<std::string, MultiPoly>{{"x", P("x + " + std::to_string(c) + "*z")}});
}

// Order in z of Res_x(u, v): the intersection number when v is monic in x.
std::size_t resultant_order(const MultiPoly& u, const MultiPoly& v) {
    const MultiPoly r = resultant(u, v, "x");
    return static_cast<std::size_t>(r.order());
}

}  // namespace

TEST_CASE("Milnor numbers of reference germs") {
    CHECK(mu("x^2 + z^2") == 1);
    CHECK(mu("x^2 + x*z^2") == 3);
    CHECK(mu("x*z^2 - x^4 + x^2*z^2") == 5);
    CHECK(mu("x^2 + x*z^2 - z^3") == 2);
    CHECK(mu("x^3 + z^4") == 6);
    CHECK(mu("x^3 + x*z^3") == 7);
    CHECK(mu("x^3 + z^5") == 8);
    CHECK(mu("x + z^7") == 0);
    CHECK_THROWS_AS(mu("x^2 + 1"), NotVanishing);
    CHECK_THROWS_AS(mu("x^2*z^2"), NonIsolated);
    CHECK_THROWS_AS(mu("x^2"), NonIsolated);
}

TEST_CASE("Brieskorn oracle with explicit monomial basis") {
    for (unsigned u = 2; u <= 6; ++u)
        for (unsigned v = 2; v <= 6; ++v) {
            const std::string s = "x^" + std::to_string(u) + " + z^" + std::to_string(v);
            const MilnorResult r = milnor_number(Germ(P(s)));
            CHECK(r.mu == (u - 1) * (v - 1));
            CHECK(r.basis_monomials.size() == r.mu);
            for (const auto& e : r.basis_monomials) CHECK((e[0] <= u - 2 && e[1] <= v - 2));
        }
}

TEST_CASE("Nakayama certificate and cap monotonicity") {
    const MultiPoly f = P("x^3 + x*z^3 + z^7");
    const MilnorResult r = milnor_number(Germ(f));
    const std::vector<MultiPoly> jac{f.derivative(0), f.derivative(1)};
    const LocalQuotient at = local_quotient(jac, r.stabilization_degree + 1);
    CHECK(at.dimension == r.mu);
    CHECK(milnor_number(Germ(f), 24).mu == milnor_number(Germ(f), 32).mu);
    CHECK_THROWS_AS(milnor_number(Germ(P("x^2 + z^30")), 8), NonIsolated);
}

TEST_CASE("Milnor number in three variables") {
    const std::vector<std::string> xyz{"x", "y", "z"};
    CHECK(milnor_number(Germ(P("x^2 + y^3 + z^4", xyz))).mu == 6);
    CHECK(milnor_number(Germ(P("x*y + z^2", xyz))).mu == 1);
}

TEST_CASE("smooth germs have mu = 0") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        MultiPoly f = random_poly(rng, testing::XZ, 5, 4, 20);
        f = f - MultiPoly::constant(testing::XZ, f.constant_term());
        f = f + P("3*x - 2*z");
        if (f.homogeneous_part(1).is_zero()) continue;
        CHECK(milnor_number(Germ(f)).mu == 0);
    }
}

TEST_CASE("intersection multiplicities") {
    CHECK(ii("x", "z") == 1u);
    CHECK(ii("z^2 + 2*x", "x*z^2 + x^2") == 4u);
    CHECK(ii("z^2 + 2*x", "x*z^2 + x^2 - 5*z^3") == 3u);
    CHECK_FALSE(ii("x", "x*z").has_value());
    CHECK(ii("x - z^2", "x*(x + z^3)") == 4u);
    CHECK_THROWS_AS(ii("x + 1", "z"), NotVanishing);

    SUBCASE("resultant oracle") {
        const std::vector<std::pair<std::string, std::string>> pairs{
            {"z^2 + 2*x", "x^2 + x*z^2"}, {"z^3 - x*z", "x^2 - z^5"}, {"z - x^2", "x^3 + z^2*x"},
            {"z^2 + x*z + x^3", "x^2 + z^3"}, {"3*z^2 + 2*x", "x^3 + x*z^3 - 7*z^3"}};
        for (const auto& [u, v] : pairs) CHECK(ii(u, v) == resultant_order(P(u), P(v)));
    }

    SUBCASE("symmetry on random pairs") {
        std::mt19937_64 rng(77);
        int checked = 0;
        while (checked < 50) {
            MultiPoly u = random_poly(rng, testing::XZ, 4, 4, 9, true);
            MultiPoly v = random_poly(rng, testing::XZ, 4, 4, 9, true);
            u = u - MultiPoly::constant(testing::XZ, u.constant_term());
            v = v - MultiPoly::constant(testing::XZ, v.constant_term());
            if (u.is_zero() || v.is_zero()) continue;
            const auto a = local_intersection_multiplicity(Germ(u), Germ(v));
            const auto b = local_intersection_multiplicity(Germ(v), Germ(u));
            CHECK(a == b);
            ++checked;
        }
    }
}

TEST_CASE("shear invariance") {
    const std::vector<std::string> germs{"x^2 + x*z^2", "x*z^2 - x^4 + x^2*z^2", "x^3 + z^5", "x^2 + z^7"};
    for (long c = 1; c <= 3; ++c)
        for (const auto& g : germs) {
            CHECK(milnor_number(Germ(shear(P(g), c))).mu == mu(g));
            CHECK(local_intersection_multiplicity(Germ(shear(P("z^2 + 2*x"), c)), Germ(shear(P(g), c))) ==
                  ii("z^2 + 2*x", g));
        }
}

TEST_CASE("Hessian corank") {
    CHECK(hessian_corank(Germ(P("x^2 + z^2"))) == 0);
    CHECK(hessian_corank(Germ(P("x^2 + x*z^2"))) == 1);
    CHECK(hessian_corank(Germ(P("x*z^2 - x^4"))) == 2);
    CHECK(hessian_corank(Germ(P("x*z + z^5"))) == 0);
    CHECK_THROWS_AS(hessian_corank(Germ(P("x + z^2"))), NonzeroLinearPart);
}

TEST_CASE("ADE classification") {
    auto cls = [](const std::string& s) { return classify_plane_germ(Germ(P(s))); };
    CHECK(cls("x*z^2 + x^2 - z^3").label() == "A_2");
    CHECK(cls("x*z^2 + x^2").label() == "A_3");
    CHECK(cls("x*z^2 - x^4 + x^2*z^2").label() == "D_5");
    CHECK(cls("x + z^2").label() == "Smooth");
    CHECK(cls("x^3 + z^4").label() == "E_6");
    CHECK(cls("x^3 + x*z^3").label() == "E_7");
    CHECK(cls("x^3 + z^5").label() == "E_8");
    CHECK(cls("x^3 + z^6").label() == "Unclassified");
    CHECK(cls("x^3 - x*z^2").label() == "D_4");
    for (int k = 1; k <= 8; ++k) {
        const GermClass c = cls("x^2 + z^" + std::to_string(k + 1));
        CHECK(c.label() == "A_" + std::to_string(k));
        CHECK(c.mu == k);
        CHECK(c.corank == (k == 1 ? 0 : 1));
    }
    for (int k = 4; k <= 8; ++k) {
        const GermClass c = cls("x*(z^2 + x^" + std::to_string(k - 2) + ")");
        CHECK(c.label() == "D_" + std::to_string(k));
        CHECK(c.mu == k);
        CHECK(c.corank == 2);
    }
    // Labels survive linear coordinate changes.
    for (long c = 1; c <= 3; ++c) {
        CHECK(classify_plane_germ(Germ(shear(P("x*z^2 - x^4 + x^2*z^2"), c))).label() == "D_5");
        CHECK(classify_plane_germ(Germ(shear(P("x^3 + z^4"), c))).label() == "E_6");
    }
    CHECK_THROWS_AS(cls("x^2*z^2"), NonIsolated);
}
