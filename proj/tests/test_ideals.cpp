#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cid/errors.hpp"
#include "cid/ideals.hpp"

using namespace cid;

namespace {

Polynomial var(int nvars, int i) { return Polynomial::variable(nvars, i); }
Polynomial cst(int nvars, long c) { return Polynomial::constant(nvars, Int(c)); }

// Exact division oracle, independent of the reduction engine: repeated exact
// leading-term division in degrevlex.
bool exactly_divides(const Polynomial& p, Polynomial q) {
    if (p.is_zero()) return q.is_zero();
    while (!q.is_zero()) {
        const Term& ltq = q.leading_term();
        const Term& ltp = p.leading_term();
        if (!ltp.mono.divides(ltq.mono)) return false;
        if (ltq.coeff % ltp.coeff != 0) return false;
        q = q.add_scaled(-(ltq.coeff / ltp.coeff), ltp.mono.quotient_of(ltq.mono), p);
    }
    return true;
}

Polynomial random_poly(int nvars, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 3), expo(0, 2), coeff(-3, 3);
    Polynomial acc(nvars);
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Polynomial mono = cst(nvars, coeff(rng));
        for (int i = 0; i < nvars; ++i)
            for (int e = expo(rng); e > 0; --e) mono = mono * var(nvars, i);
        acc = acc + mono;
    }
    return acc;
}

std::vector<Polynomial> random_ideal(int nvars, std::mt19937& rng) {
    std::uniform_int_distribution<int> ngens(1, 3);
    std::vector<Polynomial> gens;
    for (int i = ngens(rng); i > 0; --i) gens.push_back(random_poly(nvars, rng));
    return gens;
}

// The defining closure condition of a strong basis over the integers: every
// S-polynomial and every GCD-polynomial of basis pairs reduces to 0.
void check_strong_closure(const GroebnerBasis& gb) {
    for (std::size_t i = 0; i < gb.elems.size(); ++i)
        for (std::size_t j = i + 1; j < gb.elems.size(); ++j) {
            const Polynomial &f = gb.elems[i], &g = gb.elems[j];
            const Term& ltf = f.leading_term(gb.order);
            const Term& ltg = g.leading_term(gb.order);
            const Monomial lcm_mono = Monomial::lcm(ltf.mono, ltg.mono);
            const Monomial mf = ltf.mono.quotient_of(lcm_mono);
            const Monomial mg = ltg.mono.quotient_of(lcm_mono);
            Int d, u, v;
            mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), ltf.coeff.get_mpz_t(), ltg.coeff.get_mpz_t());
            const Int lcm_coeff = ltf.coeff / d * ltg.coeff;
            const Polynomial spoly =
                Polynomial(gb.nvars).add_scaled(lcm_coeff / ltf.coeff, mf, f).add_scaled(-(lcm_coeff / ltg.coeff), mg, g);
            const Polynomial gpoly = Polynomial(gb.nvars).add_scaled(u, mf, f).add_scaled(v, mg, g);
            CAPTURE(f.to_string());
            CAPTURE(g.to_string());
            CHECK(reduce(spoly, gb).is_zero());
            CHECK(reduce(gpoly, gb).is_zero());
        }
}

// F31 is the two-arc path 0->2->1; its generalized Laplacian by hand.
SymMatrix laplacian_f31() {
    SymMatrix m(3, 3, 3);
    m.at(0, 0) = var(3, 0);
    m.at(1, 1) = var(3, 1);
    m.at(2, 2) = var(3, 2);
    m.at(0, 2) = cst(3, -1);
    m.at(2, 1) = cst(3, -1);
    return m;
}

std::vector<Polynomial> two_minors(const SymMatrix& m) {
    std::vector<Polynomial> gens;
    const int n = m.rows();
    for (int r1 = 0; r1 < n; ++r1)
        for (int r2 = r1 + 1; r2 < n; ++r2)
            for (int c1 = 0; c1 < n; ++c1)
                for (int c2 = c1 + 1; c2 < n; ++c2) {
                    Polynomial det = determinant(m.submatrix({r1, r2}, {c1, c2}));
                    if (!det.is_zero()) gens.push_back(det);
                }
    return gens;
}

} // namespace

TEST_CASE("strong_groebner examples") {
    // difference of the generators is 1
    const GroebnerBasis gb1 = strong_groebner({var(1, 0), var(1, 0) + cst(1, 1)});
    REQUIRE(gb1.elems.size() == 1);
    CHECK(gb1.elems[0] == cst(1, 1));

    // <2, x0> is a proper ideal
    const GroebnerBasis gb2 = strong_groebner({cst(1, 2), var(1, 0)});
    REQUIRE(gb2.elems.size() == 2);
    CHECK(gb2.elems[0] == cst(1, 2));
    CHECK(gb2.elems[1] == var(1, 0));
    CHECK_FALSE(is_trivial({cst(1, 2), var(1, 0)}));

    // every forbidden 3-vertex fixture has trivial second critical ideal
    CHECK(is_trivial(two_minors(laplacian_f31())));
}

TEST_CASE("reduce examples") {
    const GroebnerBasis gb_x0 = strong_groebner({var(2, 0)});
    CHECK(reduce(var(2, 0) * var(2, 1), gb_x0).is_zero());

    const GroebnerBasis gb_2x = strong_groebner({cst(1, 2), var(1, 0)});
    CHECK(reduce(cst(1, 1), gb_2x) == cst(1, 1));

    // membership of the input generators
    std::mt19937 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        const auto gens = random_ideal(2 + trial % 3, rng);
        const GroebnerBasis gb = strong_groebner(gens);
        for (const auto& g : gens) CHECK(reduce(g, gb).is_zero());
    }
}

TEST_CASE("is_trivial examples") {
    // 1-minors of the one-arc pair's Laplacian
    CHECK(is_trivial({var(2, 0), var(2, 1), cst(2, -1)}));
    CHECK_FALSE(is_trivial({var(2, 0) * var(2, 1)}));
    CHECK_FALSE(is_trivial({}));
    CHECK_FALSE(is_trivial({Polynomial::zero(2)}));
    // unit constants short-circuit
    CHECK(is_trivial({cst(3, -1)}));
    // constants with a common prime divisor do not generate 1
    CHECK_FALSE(is_trivial({cst(1, 4), cst(1, 6)}));
    // but coprime constants do
    CHECK(is_trivial({cst(1, 4), cst(1, 9)}));
}

TEST_CASE("ideals_equal examples") {
    // Lambda(1,1,1): Laplacian [[x0,-1,-1],[0,x1,-1],[0,0,x2]]
    SymMatrix lam(3, 3, 3);
    lam.at(0, 0) = var(3, 0);
    lam.at(1, 1) = var(3, 1);
    lam.at(2, 2) = var(3, 2);
    lam.at(0, 1) = cst(3, -1);
    lam.at(0, 2) = cst(3, -1);
    lam.at(1, 2) = cst(3, -1);
    const std::vector<Polynomial> closed_form = {var(3, 0), var(3, 1) + cst(3, 1), var(3, 2)};
    CHECK(ideals_equal(two_minors(lam), closed_form));

    CHECK(ideals_equal({var(2, 0)}, {var(2, 0), var(2, 0) * var(2, 0)}));
    CHECK_FALSE(ideals_equal({var(2, 0)}, {var(2, 1)}));
}

TEST_CASE("strong closure of computed bases") {
    std::mt19937 rng(211);
    for (int trial = 0; trial < 120; ++trial) {
        const auto gens = random_ideal(1 + trial % 3, rng);
        const GroebnerBasis gb = strong_groebner(gens);
        for (const auto& e : gb.elems) {
            CHECK_FALSE(e.is_zero());
            CHECK(e.leading_term().coeff > 0);
        }
        check_strong_closure(gb);
    }
    // the classic mixed-coefficient case needs its GCD-polynomial
    const GroebnerBasis gb = strong_groebner({cst(2, 2) * var(2, 0) + cst(2, 1), cst(2, 3) * var(2, 1) + cst(2, 1)});
    check_strong_closure(gb);
    CHECK_FALSE(is_trivial({cst(2, 2) * var(2, 0) + cst(2, 1), cst(2, 3) * var(2, 1) + cst(2, 1)}));
}

TEST_CASE("order independence of triviality and equality") {
    std::mt19937 rng(307);
    GroebnerOptions lex_opts;
    lex_opts.order = MonomialOrder::lex;
    for (int trial = 0; trial < 60; ++trial) {
        const int nvars = 1 + trial % 4;
        const auto a = random_ideal(nvars, rng);
        const auto b = random_ideal(nvars, rng);
        CHECK(is_trivial(a) == is_trivial(a, lex_opts));
        CHECK(ideals_equal(a, b) == ideals_equal(a, b, lex_opts));
    }
}

TEST_CASE("idempotence: rebasing a basis generates the same ideal") {
    std::mt19937 rng(401);
    for (int trial = 0; trial < 50; ++trial) {
        const auto gens = random_ideal(2, rng);
        const GroebnerBasis gb = strong_groebner(gens);
        const GroebnerBasis gb2 = strong_groebner(gb.elems);
        CHECK(ideals_equal(gb.elems, gb2.elems));
        CHECK(ideals_equal(gens, gb.elems));
    }
}

TEST_CASE("principal ideal membership agrees with exact division") {
    std::mt19937 rng(503);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial p = random_poly(2, rng);
        if (p.is_zero()) continue;
        const Polynomial q = random_poly(2, rng);
        const Polynomial multiple = p * random_poly(2, rng);
        const GroebnerBasis gb = strong_groebner({p});
        CHECK(reduce(multiple, gb).is_zero());
        CHECK(reduce(q, gb).is_zero() == exactly_divides(p, q));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("triviality verdicts are consistent with witnesses") {
    std::mt19937 rng(601);
    for (int trial = 0; trial < 80; ++trial) {
        const auto gens = random_ideal(2, rng);
        const bool trivial = is_trivial(gens);
        const auto witness = find_nontriviality_witness(gens);
        if (trivial) {
            // soundness recheck both ways
            CHECK(reduce(cst(2, 1), strong_groebner(gens)).is_zero());
            CHECK_FALSE(witness.has_value());
        }
    }
    // a known witness: everything vanishes at the origin mod 2
    const auto w = find_nontriviality_witness({var(2, 0) * var(2, 1)});
    REQUIRE(w.has_value());
    CHECK_FALSE(is_trivial({var(2, 0) * var(2, 1)}));
}

TEST_CASE("step cap raises a resource error carrying progress") {
    GroebnerOptions opts;
    opts.step_cap = 1;
    // interreducing the second generator against x0 needs two Euclidean steps
    std::vector<Polynomial> gens = {var(2, 0), var(2, 0) * var(2, 1) + var(2, 0)};
    try {
        strong_groebner(gens, opts);
        FAIL("expected resource_limit_error");
    } catch (const resource_limit_error& e) {
        CHECK(e.steps() > 1);
        CHECK(e.partial_basis_size() >= 1);
    }
}

TEST_CASE("mismatched ambient variables are rejected") {
    CHECK_THROWS_AS(strong_groebner({var(2, 0), var(3, 0)}), std::invalid_argument);
}

TEST_CASE("trace emits one line per completed pair") {
    std::ostringstream trace;
    GroebnerOptions opts;
    opts.trace = &trace;
    strong_groebner({var(2, 0) + cst(2, 1), var(2, 1) - cst(2, 1)}, opts);
    CHECK(trace.str().find("pair (0,1)") != std::string::npos);
}
