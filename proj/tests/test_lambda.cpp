#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cid/critical.hpp"
#include "cid/lambda.hpp"

using namespace cid;

namespace {

Polynomial var(int nvars, int i) { return Polynomial::variable(nvars, i); }
Polynomial cst(int nvars, long c) { return Polynomial::constant(nvars, Int(c)); }

const Digraph p2 = from_arcs(2, {{0, 1}});
const Digraph c2 = from_arcs(2, {{0, 1}, {1, 0}});

} // namespace

TEST_CASE("build_lambda examples") {
    CHECK(build_lambda({1, 1, 0}) == p2);
    CHECK(build_lambda({0, 2, 0}) == c2);
    CHECK(build_lambda({1, 1, 1}) == from_arcs(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(build_lambda({0, 0, 1}).order() == 1);

    CHECK_THROWS_AS(build_lambda({2, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_lambda({0, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(build_lambda({0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(build_lambda({-1, 1, 1}), std::invalid_argument);
}

TEST_CASE("recognition examples") {
    const LambdaRecognition rp2 = recognize_lambda(p2);
    REQUIRE(rp2.ok);
    CHECK(rp2.params == LambdaParams{1, 0, 1});

    const LambdaRecognition rt1 = recognize_lambda(from_arcs(1, {}));
    REQUIRE(rt1.ok);
    CHECK(rt1.params == LambdaParams{0, 0, 1});

    const LambdaRecognition rc2 = recognize_lambda(c2);
    REQUIRE(rc2.ok);
    CHECK(rc2.params == LambdaParams{0, 2, 0});

    // directed triangle is not in the family
    const LambdaRecognition rf35 = recognize_lambda(from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK_FALSE(rf35.ok);
    CHECK_FALSE(rf35.certificate.empty());

    const LambdaRecognition big = recognize_lambda(build_lambda({2, 1, 3}));
    REQUIRE(big.ok);
    CHECK(is_isomorphic(build_lambda(big.params), build_lambda({2, 1, 3})));

    CHECK_FALSE(recognize_lambda(from_arcs(4, {{0, 1}, {2, 3}})).ok); // disconnected
}

TEST_CASE("recognition round-trips over all connected triples up to 6") {
    for (const LambdaParams& p : connected_lambda_params(6)) {
        CAPTURE(p.to_string());
        const Digraph d = build_lambda(p);
        const LambdaRecognition rec = recognize_lambda(d);
        REQUIRE(rec.ok);
        CHECK(is_isomorphic(build_lambda(rec.params), d));
    }
}

TEST_CASE("rejections carry a certificate") {
    for (const auto& m : forbidden_family()) {
        const LambdaRecognition rec = recognize_lambda(m.digraph);
        CAPTURE(m.name);
        CHECK_FALSE(rec.ok);
        CHECK(!rec.reason.empty());
    }
}

TEST_CASE("lemma3 closed forms (spot checks)") {
    // (1,1,0): single generator x1*y1 in ambient variables x0, x1
    const auto i110 = lemma3_ideal({1, 1, 0});
    REQUIRE(i110.size() == 1);
    CHECK(i110[0] == var(2, 0) * var(2, 1));

    // (0,3,0): the linear forms y_i+1; the pairwise products generate a
    // strictly smaller ideal (no common zero of the products kills all three
    // linear forms), and the minors contain -(y_i+1) outright.
    const auto i030 = lemma3_ideal({0, 3, 0});
    REQUIRE(i030.size() == 3);
    CHECK(i030[0] == var(3, 0) + cst(3, 1));
    std::vector<Polynomial> products;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            products.push_back((var(3, i) + cst(3, 1)) * (var(3, j) + cst(3, 1)));
    CHECK_FALSE(ideals_equal(products, i030));

    // (0,1,2): the z variables of the T' part
    const auto i012 = lemma3_ideal({0, 1, 2});
    REQUIRE(i012.size() == 2);
    CHECK(i012[0] == var(3, 1));
    CHECK(i012[1] == var(3, 2));

    CHECK_THROWS_AS(lemma3_ideal({1, 0, 0}), std::invalid_argument); // single vertex
    CHECK_THROWS_AS(lemma3_ideal({2, 0, 0}), std::invalid_argument); // disconnected
}

TEST_CASE("lemma3 ideals match computed minors over all connected triples up to 5") {
    // the acceptance run extends this to 6
    for (const LambdaParams& p : connected_lambda_params(5)) {
        if (p.total() < 2) continue;
        CAPTURE(p.to_string());
        const Digraph d = build_lambda(p);
        CHECK(is_trivial(critical_ideal_gens(d, 1)));
        CHECK(ideals_equal(critical_ideal_gens(d, 2), lemma3_ideal(p)));
    }
}

TEST_CASE("out-degree formula") {
    CHECK(lambda_outdegrees({1, 1, 1}) == std::vector<int>{2, 1, 0});
    CHECK(lambda_outdegrees({0, 2, 0}) == std::vector<int>{1, 1});
    CHECK(lambda_outdegrees({2, 0, 2}) == std::vector<int>{2, 2, 0, 0});

    for (const LambdaParams& p : connected_lambda_params(6)) {
        const Digraph d = build_lambda(p);
        const auto expected = lambda_outdegrees(p);
        REQUIRE(static_cast<int>(expected.size()) == d.order());
        for (int v = 0; v < d.order(); ++v) CHECK(expected[v] == d.out_degree(v));
    }
}

TEST_CASE("corollary predicate examples") {
    CHECK(corollary7_predicate({1, 1, 1}));
    CHECK_FALSE(corollary7_predicate({2, 1, 0}));
    CHECK_FALSE(corollary7_predicate({2, 0, 1}));
    CHECK(corollary7_predicate({0, 2, 0}));
    CHECK(corollary7_predicate({5, 2, 0}));

    CHECK(corollary9_predicate({2, 1, 0}));
    CHECK(corollary9_predicate({1, 1, 0}));
    CHECK_FALSE(corollary9_predicate({1, 1, 1}));
    CHECK_FALSE(corollary9_predicate({0, 2, 0}));
    CHECK_FALSE(corollary9_predicate({0, 3, 0}));
}

TEST_CASE("lambda members have co-rank at most 1") {
    for (const LambdaParams& p : connected_lambda_params(5)) {
        CAPTURE(p.to_string());
        CHECK(algebraic_corank(build_lambda(p)) <= 1);
    }
}
