#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfs/grading.hpp"
#include "qfs/parse.hpp"
#include "qfs/poly.hpp"
#include "test_util.hpp"

using namespace qfs;
using testutil::P;

TEST_CASE("modulus basics") {
    CHECK_THROWS(Modulus(4, 1));
    CHECK_THROWS(Modulus(1, 1));
    CHECK(Modulus(2, 1).pe() == 2);
    CHECK(Modulus(3, 2).pe() == 9);
    Modulus m(5, 1);
    CHECK(m.mul(m.inv(3), 3) == 1);
    Modulus m73(7, 3);
    CHECK(m73.mul(m73.inv(3), 3) == 1);
    CHECK_THROWS(m73.inv(7));
}

TEST_CASE("addition examples") {
    auto v = testutil::xyz();
    CHECK((P("x+y", 2, v) + P("x+y", 2, v)).is_zero());
    CHECK(P("x^3+y^3", 3, v) + P("z^3", 3, v) == P("x^3+y^3+z^3", 3, v));
    CHECK(P("2x", 3, v) + P("2x", 3, v) == P("x", 3, v));
    CHECK_THROWS(P("x", 2, v) + P("x", 3, v));
    CHECK_THROWS(P("x", 2, v) + P("x", 2, {"x", "y"}));
}

TEST_CASE("multiplication examples") {
    auto v = testutil::xyz();
    CHECK(P("x+y", 2, v) * P("x+y", 2, v) == P("x^2+y^2", 2, v));
    SparsePoly f = P("x^3+y^3+z^3", 2, v);
    SparsePoly d = P("x^3*y^3+y^3*z^3+x^3*z^3", 2, v);
    Mono m;
    m.e[0] = m.e[1] = m.e[2] = 3;
    CHECK((f * d).coefficient(m) == 1);
    CHECK(P("x+2y", 3, v) * P("x+y", 3, v) == P("x^2+2y^2", 3, v));
}

TEST_CASE("pow examples") {
    auto v = testutil::xyz();
    CHECK(P("x+y", 2, v).pow(2) == P("x^2+y^2", 2, v));
    CHECK(P("x^3+y^3+z^3", 2, v).pow(1) == P("x^3+y^3+z^3", 2, v));
    auto w = testutil::xyzw();
    SparsePoly q = P("x^4+y^4+z^4+w^4", 3, w).pow(2);
    Mono m;
    m.e[0] = m.e[1] = 4;
    CHECK(q.coefficient(m) == 2);
    CHECK(P("x+y", 5, v).pow(0) == SparsePoly::constant(Modulus(5, 1), 3, 1));
}

TEST_CASE("degree and gradings") {
    auto v = testutil::xyz();
    Grading std3 = Grading::standard(3);
    auto d = std3.degree(P("x^3+y^3+z^3", 2, v));
    CHECK(d.kind == DegreeResult::Homogeneous);
    CHECK(d.degree == std::vector<int64_t>{3});
    CHECK(std3.degree(P("x+y^2", 2, v)).kind == DegreeResult::Inhomogeneous);
    CHECK(std3.degree(SparsePoly::zero(Modulus(2, 1), 3)).kind == DegreeResult::Zero);

    Grading wt = Grading::weighted({1, 1, 1, 2});
    auto dw = wt.degree(P("w^2+x^2*y*z+x*y^2*z+x*y*z^2", 2, testutil::xyzw()));
    CHECK(dw.kind == DegreeResult::Homogeneous);
    CHECK(dw.degree == std::vector<int64_t>{4});
    CHECK(wt.mu() == std::vector<int64_t>{5});
}

TEST_CASE("bracket power generators") {
    auto v = testutil::xyz();
    Modulus f2(2, 1);
    std::vector<SparsePoly> m = {SparsePoly::variable(f2, 3, 0), SparsePoly::variable(f2, 3, 1),
                                 SparsePoly::variable(f2, 3, 2)};
    auto sq = bracket_power_ideal_gens(m, 2);
    CHECK(sq[0] == P("x^2", 2, v));
    CHECK(sq[2] == P("z^2", 2, v));
    CHECK_THROWS(bracket_power_ideal_gens(m, 3));
    CHECK_THROWS(bracket_power_ideal_gens(m, 6));

    Modulus f3(3, 1);
    std::vector<SparsePoly> m3 = {P("x", 3, testutil::xyzw()), P("y", 3, testutil::xyzw()),
                                  P("z", 3, testutil::xyzw()), P("w", 3, testutil::xyzw())};
    auto q9 = bracket_power_ideal_gens(m3, 9);
    CHECK(q9[3] == P("w^9", 3, testutil::xyzw()));

    SparsePoly f = P("x^3+y^3+z^3", 5, v);
    CHECK(bracket_power_ideal_gens({f}, 5)[0] == f.pow(5));
}

TEST_CASE("reduce and lift") {
    auto v = testutil::xyz();
    SparsePoly a = P("x^3+y^3+z^3", 2, v);
    CHECK(a.lift_to(2).reduce_mod_p() == a);
    for (const auto& t : a.lift_to(2).terms()) CHECK(t.c == 1);
    SparsePoly px = P("2x", 2, v, 2);  // 2x over Z/4
    CHECK(px.reduce_mod_p().is_zero());
}

TEST_CASE("escape terms and bracket membership") {
    auto v = testutil::xyz();
    CHECK(P("x^3+y^3+z^3", 2, v).in_m_bracket(2));
    CHECK(!P("x*y*z", 2, v).in_m_bracket(2));
    CHECK(P("x^2*y+x*y^2", 2, v).in_m_bracket(2));
    CHECK(P("x*y*z+x^2", 2, v).escape_term(2).has_value());
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(12345);
    for (uint64_t p : {2, 3, 5}) {
        for (int iter = 0; iter < 1000; ++iter) {
            auto a = testutil::random_poly(rng, p, 3, 5, 4);
            auto b = testutil::random_poly(rng, p, 3, 5, 4);
            auto c = testutil::random_poly(rng, p, 3, 5, 4);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE(a + b == b + a);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * b == b * a);
            REQUIRE(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("pow(a, p) is the termwise Frobenius over F_p") {
    std::mt19937_64 rng(999);
    for (uint64_t p : {2, 3, 5}) {
        for (int iter = 0; iter < 200; ++iter) {
            auto a = testutil::random_poly(rng, p, 3, 6, 4);
            REQUIRE(a.pow(p) == a.frobenius_power());
        }
    }
}

TEST_CASE("degree is additive under mul; bracket power scales degrees") {
    std::mt19937_64 rng(7);
    Grading wt = Grading::weighted({1, 2, 3});
    for (int iter = 0; iter < 200; ++iter) {
        // random homogeneous pairs
        auto mk = [&](int64_t deg) {
            std::vector<Term> terms;
            for (int t = 0; t < 4; ++t) {
                Mono m;
                int64_t left = deg;
                for (int i = 2; i >= 0; --i) {
                    int64_t w = wt.total_weight(i);
                    int64_t maxk = left / w;
                    m.e[i] = uint16_t(i == 0 ? maxk : std::uniform_int_distribution<int64_t>(
                                                          0, maxk)(rng));
                    left -= m.e[i] * w;
                }
                if (left == 0) terms.push_back({m, 1});
            }
            return SparsePoly::from_terms(Modulus(3, 1), 3, std::move(terms));
        };
        auto a = mk(6), b = mk(9);
        if (a.is_zero() || b.is_zero()) continue;
        auto da = wt.degree(a), db = wt.degree(b), dab = wt.degree(a * b);
        if (dab.kind != DegreeResult::Homogeneous) continue;  // product collapsed to zero
        REQUIRE(dab.degree[0] == da.degree[0] + db.degree[0]);
        auto br = bracket_power_ideal_gens({a}, 9)[0];
        REQUIRE(wt.degree(br).degree[0] == 9 * da.degree[0]);
    }
}

TEST_CASE("serialize-parse-serialize is a fixed point") {
    auto v = testutil::xyzw();
    std::mt19937_64 rng(31337);
    for (uint64_t p : {2, 3, 5}) {
        for (int iter = 0; iter < 100; ++iter) {
            auto a = testutil::random_poly(rng, p, 4, 8, 5);
            std::string s = a.serialize(v);
            SparsePoly b = parse_poly(s, v, Modulus(p, 1));
            REQUIRE(b == a);
            REQUIRE(b.serialize(v) == s);
        }
    }
    CHECK(SparsePoly::zero(Modulus(2, 1), 4).serialize(v) == "0");
    CHECK(P("0", 2, v).is_zero());
}

TEST_CASE("parser grammar") {
    auto v = testutil::xyz();
    CHECK(P("2*x^2*y", 5, v) == P("2x^2y", 5, v));
    CHECK(P("xyz", 2, v) == P("x*y*z", 2, v));
    CHECK(P("7", 5, v) == SparsePoly::constant(Modulus(5, 1), 3, 2));
    CHECK(P("x-y", 3, v) == P("x+2y", 3, v));
    CHECK_THROWS_AS(P("x+q", 2, v), ParseError);
    CHECK_THROWS_AS(P("", 2, v), ParseError);
    CHECK_THROWS_AS(P("x^", 2, v), ParseError);
    // declared multi-character names win over splitting
    CHECK(P("xy", 2, {"xy", "x", "y"}).terms().front().m.e[0] == 1);
}
