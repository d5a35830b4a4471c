#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "cid/digraph.hpp"
#include "cid/errors.hpp"

using namespace cid;

namespace {

// Independent oracle: enumerate every labeled digraph on n vertices, filter
// connected, bucket by a permutation-minimal adjacency string computed from
// scratch.
std::set<std::vector<int>> labeled_bruteforce_classes(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) slots.emplace_back(u, v);
    const int m = static_cast<int>(slots.size());

    std::vector<std::vector<int>> perms;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::vector<int>> classes;
    for (long word = 0; word < (1L << m); ++word) {
        std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
        for (int i = 0; i < m; ++i)
            if ((word >> i) & 1) adj[slots[i].first][slots[i].second] = 1;
        // connectivity by repeated neighbor absorption
        std::vector<int> comp(n, 0);
        comp[0] = 1;
        for (int pass = 0; pass < n; ++pass)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (adj[u][v] || adj[v][u]) {
                        if (comp[u]) comp[v] = 1;
                        if (comp[v]) comp[u] = 1;
                    }
        if (std::count(comp.begin(), comp.end(), 1) != n) continue;

        std::vector<int> best;
        for (const auto& p : perms) {
            std::vector<int> flat;
            flat.reserve(n * n);
            std::vector<std::vector<int>> relab(n, std::vector<int>(n, 0));
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (adj[u][v]) relab[p[u]][p[v]] = 1;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) flat.push_back(relab[u][v]);
            if (best.empty() || flat < best) best = flat;
        }
        classes.insert(best);
    }
    return classes;
}

bool bruteforce_isomorphic(const Digraph& a, const Digraph& b) {
    if (a.order() != b.order()) return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (relabel(a, perm) == b) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool bruteforce_contains_induced(const Digraph& d, const Digraph& h) {
    const int n = d.order(), k = h.order();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        if (bruteforce_isomorphic(induced(d, VertexSet{mask}), h)) return true;
    }
    return false;
}

const Digraph p2 = from_arcs(2, {{0, 1}});
const Digraph c2 = from_arcs(2, {{0, 1}, {1, 0}});
const Digraph t1 = from_arcs(1, {});

} // namespace

TEST_CASE("from_arcs builds the expected digraphs") {
    CHECK(p2.order() == 2);
    CHECK(p2.has_arc(0, 1));
    CHECK_FALSE(p2.has_arc(1, 0));
    CHECK(c2.arc_count() == 2);
    CHECK(t1.order() == 1);
    CHECK(t1.arc_count() == 0);

    // duplicate arcs collapse
    CHECK(from_arcs(2, {{0, 1}, {0, 1}}) == p2);

    CHECK_THROWS_AS(from_arcs(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(from_arcs(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(from_arcs(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(from_arcs(17, {}), std::invalid_argument);
}

TEST_CASE("digraph6 encoding follows the bit layout") {
    // Hand-encoded: n=2, payload bits row-major 0,1,0,0 padded to 010000.
    CHECK(emit_digraph6(p2) == "&AO");
    CHECK(emit_digraph6(c2) == "&AW");
    CHECK(emit_digraph6(t1) == "&@?");

    // '&AG' carries bit 2 of the row-major string: the arc 1->0.
    const Digraph g = parse_digraph6("&AG");
    CHECK(g.order() == 2);
    CHECK(g.has_arc(1, 0));
    CHECK_FALSE(g.has_arc(0, 1));
    CHECK(is_isomorphic(g, p2));

    CHECK(parse_digraph6("&AO") == p2);
    CHECK(parse_digraph6("&AW") == c2);
    CHECK(parse_digraph6("&@?") == t1);
}

TEST_CASE("digraph6 parse errors name the byte offset") {
    CHECK_THROWS_AS(parse_digraph6("AG"), parse_error);
    CHECK_THROWS_AS(parse_digraph6(""), parse_error);
    CHECK_THROWS_AS(parse_digraph6("&"), parse_error);
    CHECK_THROWS_AS(parse_digraph6("&A"), parse_error);     // truncated payload
    CHECK_THROWS_AS(parse_digraph6("&AOO"), parse_error);   // trailing data
    CHECK_THROWS_AS(parse_digraph6("&A~"), parse_error);    // '~'-63 = 63: nonzero padding
    CHECK_THROWS_AS(parse_digraph6("&A\x20"), parse_error); // payload byte below 63
    CHECK_THROWS_AS(parse_digraph6("&?"), parse_error);     // order 0

    try {
        parse_digraph6("AG");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 0);
        CHECK(std::string(e.what()).find("byte 0") != std::string::npos);
    }
    try {
        parse_digraph6("&A");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 2);
    }
}

TEST_CASE("is_connected inspects the underlying graph") {
    CHECK(is_connected(p2));
    CHECK(is_connected(t1));
    CHECK_FALSE(is_connected(from_arcs(2, {})));
    CHECK(is_connected(from_arcs(4, {{0, 2}, {0, 3}, {1, 3}}))); // F41
    CHECK_FALSE(is_connected(from_arcs(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("induced subdigraphs relabel in increasing order") {
    const Digraph f31 = from_arcs(3, {{0, 2}, {2, 1}});
    CHECK(induced(f31, VertexSet{0b101}) == p2); // {0,2}: arc 0->2 becomes 0->1
    CHECK(induced(f31, VertexSet::all(3)) == f31);
    CHECK(induced(c2, VertexSet{0b01}) == t1);
    CHECK_THROWS_AS(induced(f31, VertexSet{}), std::invalid_argument);
}

TEST_CASE("canonical form and isomorphism") {
    CHECK(is_isomorphic(from_arcs(2, {{0, 1}}), from_arcs(2, {{1, 0}})));
    CHECK_FALSE(is_isomorphic(p2, c2));

    const Digraph f32 = from_arcs(3, {{0, 2}, {1, 2}, {2, 0}});
    const Digraph f33 = from_arcs(3, {{0, 2}, {2, 0}, {2, 1}});
    CHECK(bruteforce_isomorphic(f32, f32));
    CHECK_FALSE(bruteforce_isomorphic(f32, f33));
    CHECK_FALSE(is_isomorphic(f32, f33));

    CHECK_THROWS_AS(canonical_form(Digraph(9)), capability_error);
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(20240817);
    for (const Digraph& d : enumerate_connected(4)) {
        std::vector<int> perm(4);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(d) == canonical_form(relabel(d, perm)));
    }
}

TEST_CASE("contains_induced") {
    const Digraph f31 = from_arcs(3, {{0, 2}, {2, 1}});
    CHECK(contains_induced(f31, p2));
    CHECK_FALSE(contains_induced(c2, p2));

    // Triples of the transitive tournament always induce three arcs, so the
    // two-arc path never occurs induced; the brute-force oracle agrees.
    const Digraph f47 = from_arcs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(bruteforce_contains_induced(f47, f31) == false);
    CHECK_FALSE(contains_induced(f47, f31));
    const Digraph f35 = from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_FALSE(contains_induced(f47, f35));
    CHECK(contains_induced(f47, from_arcs(3, {{0, 1}, {0, 2}, {1, 2}})));
}

TEST_CASE("contains_induced agrees with brute force on small hosts") {
    const auto patterns = enumerate_connected(3);
    const auto hosts4 = enumerate_connected(4);
    for (std::size_t i = 0; i < hosts4.size(); i += 7) // sampled stride
        for (const auto& h : patterns)
            CHECK(contains_induced(hosts4[i], h) == bruteforce_contains_induced(hosts4[i], h));
    const auto hosts5 = enumerate_connected(5);
    for (std::size_t i = 0; i < hosts5.size(); i += 311)
        for (const auto& h : patterns)
            CHECK(contains_induced(hosts5[i], h) == bruteforce_contains_induced(hosts5[i], h));
}

TEST_CASE("enumerate_connected matches the labeled brute force") {
    CHECK(enumerate_connected(1).size() == 1);

    const auto two = enumerate_connected(2);
    REQUIRE(two.size() == 2);
    CHECK(is_isomorphic(two[0], p2));
    CHECK(is_isomorphic(two[1], c2));

    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        CHECK(enumerate_connected(n).size() == labeled_bruteforce_classes(n).size());
    }
    CHECK(enumerate_connected(3).size() == 13);
    CHECK(enumerate_connected(4).size() == 199);

    CHECK_THROWS_AS(enumerate_connected(6), capability_error);
}

TEST_CASE("enumerated classes are connected, pairwise non-isomorphic, canonical-sorted") {
    for (int n = 1; n <= 4; ++n) {
        std::set<CanonicalForm> seen;
        CanonicalForm prev{0, 0};
        bool first = true;
        for (const Digraph& d : enumerate_connected(n)) {
            CHECK(is_connected(d));
            const CanonicalForm cf = canonical_form(d);
            CHECK(seen.insert(cf).second);
            if (!first) CHECK(prev < cf);
            prev = cf;
            first = false;
        }
    }
}

TEST_CASE("digraph6 round-trip on all classes up to 4") {
    for (int n = 1; n <= 4; ++n)
        for (const Digraph& d : enumerate_connected(n)) CHECK(parse_digraph6(emit_digraph6(d)) == d);
}
