#ifndef CID_DIGRAPH_HPP
#define CID_DIGRAPH_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cid {

/// Subset of vertex indices 0..n as a bitmask.
struct VertexSet {
    std::uint32_t bits = 0;

    static VertexSet all(int n) { return {n >= 32 ? ~0u : ((1u << n) - 1u)}; }
    bool contains(int v) const { return (bits >> v) & 1u; }
    void add(int v) { bits |= (1u << v); }
    int size() const;
    bool empty() const { return bits == 0; }
    bool operator==(const VertexSet&) const = default;
};

/// Simple loop-free digraph on indexed vertices, adjacency held as one
/// bitmask row per vertex (bit v of row(u) set iff arc u->v).
class Digraph {
  public:
    static constexpr int max_vertices = 16;

    Digraph() = default;
    explicit Digraph(int n);

    int order() const { return n_; }
    bool has_arc(int u, int v) const { return (rows_[u] >> v) & 1u; }
    std::uint32_t out_row(int u) const { return rows_[u]; }
    int arc_count() const;
    int out_degree(int u) const;
    int in_degree(int v) const;
    std::vector<std::pair<int, int>> arcs() const;

    void add_arc(int u, int v);
    void remove_arc(int u, int v);

    bool operator==(const Digraph&) const = default;

  private:
    int n_ = 0;
    std::array<std::uint32_t, max_vertices> rows_{};
};

/// Lexicographically smallest row-major adjacency bit-string over all vertex
/// permutations, packed MSB-first into a word. Equal iff isomorphic.
struct CanonicalForm {
    int n = 0;
    std::uint64_t bits = 0;

    auto operator<=>(const CanonicalForm&) const = default;
};

Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

Digraph parse_digraph6(const std::string& text);
std::string emit_digraph6(const Digraph& d);

/// Connectivity of the underlying undirected graph (u~v iff either arc).
bool is_connected(const Digraph& d);

/// Subdigraph induced by S, vertices relabeled in increasing order.
Digraph induced(const Digraph& d, VertexSet s);

/// Digraph with vertex v deleted (induced on the complement of {v}).
Digraph delete_vertex(const Digraph& d, int v);

CanonicalForm canonical_form(const Digraph& d);
bool is_isomorphic(const Digraph& a, const Digraph& b);

/// Digraph obtained by relabeling: vertex v of d becomes perm[v].
Digraph relabel(const Digraph& d, const std::vector<int>& perm);

/// True iff some vertex subset of d induces a digraph isomorphic to h.
bool contains_induced(const Digraph& d, const Digraph& h);

/// One representative per isomorphism class of connected digraphs on n
/// vertices, in ascending canonical-form order.
std::vector<Digraph> enumerate_connected(int n);

} // namespace cid

#endif
