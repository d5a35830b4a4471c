#include "cid/digraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "cid/errors.hpp"

namespace cid {

int VertexSet::size() const { return std::popcount(bits); }

Digraph::Digraph(int n) : n_(n) {
    if (n <= 0 || n > max_vertices)
        throw std::invalid_argument("digraph order must be in 1.." + std::to_string(max_vertices));
}

int Digraph::arc_count() const {
    int total = 0;
    for (int u = 0; u < n_; ++u) total += std::popcount(rows_[u]);
    return total;
}

int Digraph::out_degree(int u) const { return std::popcount(rows_[u]); }

int Digraph::in_degree(int v) const {
    int total = 0;
    for (int u = 0; u < n_; ++u) total += has_arc(u, v) ? 1 : 0;
    return total;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (has_arc(u, v)) out.emplace_back(u, v);
    return out;
}

void Digraph::add_arc(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("arc endpoint out of range");
    if (u == v) throw std::invalid_argument("loop arcs are not allowed");
    rows_[u] |= (1u << v);
}

void Digraph::remove_arc(int u, int v) { rows_[u] &= ~(1u << v); }

Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    Digraph d(n);
    for (auto [u, v] : arcs) d.add_arc(u, v);
    return d;
}

// ---------------------------------------------------------------------------
// digraph6: '&', then n+63, then ceil(n^2/6) bytes of row-major adjacency
// bits (MSB first within each 6-bit group), each byte offset by 63.

std::string emit_digraph6(const Digraph& d) {
    const int n = d.order();
    std::string out;
    out.push_back('&');
    out.push_back(static_cast<char>(63 + n));
    const int nbits = n * n;
    const int ngroups = (nbits + 5) / 6;
    for (int g = 0; g < ngroups; ++g) {
        int val = 0;
        for (int t = 0; t < 6; ++t) {
            const int i = 6 * g + t;
            if (i < nbits && d.has_arc(i / n, i % n)) val |= 1 << (5 - t);
        }
        out.push_back(static_cast<char>(63 + val));
    }
    return out;
}

Digraph parse_digraph6(const std::string& text) {
    if (text.empty() || text[0] != '&') throw parse_error("digraph6: missing '&' header", 0);
    if (text.size() < 2) throw parse_error("digraph6: missing order byte", 1);
    const int order_byte = static_cast<unsigned char>(text[1]);
    if (order_byte == 126)
        throw parse_error("digraph6: multi-byte order not supported (order > 16)", 1);
    if (order_byte < 63 || order_byte > 126)
        throw parse_error("digraph6: order byte out of range", 1);
    const int n = order_byte - 63;
    if (n < 1 || n > Digraph::max_vertices)
        throw parse_error("digraph6: order " + std::to_string(n) + " outside supported 1..16", 1);

    const int nbits = n * n;
    const std::size_t ngroups = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() < 2 + ngroups)
        throw parse_error("digraph6: truncated bit payload", text.size());
    if (text.size() > 2 + ngroups)
        throw parse_error("digraph6: trailing data after bit payload", 2 + ngroups);

    Digraph d(n);
    for (std::size_t g = 0; g < ngroups; ++g) {
        const std::size_t pos = 2 + g;
        const int b = static_cast<unsigned char>(text[pos]);
        if (b < 63 || b > 126) throw parse_error("digraph6: payload byte out of range", pos);
        const int val = b - 63;
        for (int t = 0; t < 6; ++t) {
            if (((val >> (5 - t)) & 1) == 0) continue;
            const int i = static_cast<int>(6 * g) + t;
            if (i >= nbits) throw parse_error("digraph6: nonzero padding bits", pos);
            const int r = i / n, c = i % n;
            if (r == c) throw parse_error("digraph6: loop bit set on the diagonal", pos);
            d.add_arc(r, c);
        }
    }
    return d;
}

// ---------------------------------------------------------------------------

bool is_connected(const Digraph& d) {
    const int n = d.order();
    if (n <= 0) return false;
    std::array<std::uint32_t, Digraph::max_vertices> und{};
    for (int u = 0; u < n; ++u) {
        und[u] |= d.out_row(u);
        std::uint32_t row = d.out_row(u);
        while (row) {
            const int v = std::countr_zero(row);
            row &= row - 1;
            und[v] |= 1u << u;
        }
    }
    std::uint32_t seen = 1u, frontier = 1u;
    while (frontier) {
        std::uint32_t next = 0;
        while (frontier) {
            const int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= und[u];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == VertexSet::all(n).bits;
}

Digraph induced(const Digraph& d, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("induced: vertex set is empty");
    std::vector<int> verts;
    for (int v = 0; v < d.order(); ++v)
        if (s.contains(v)) verts.push_back(v);
    Digraph out(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = 0; j < verts.size(); ++j)
            if (i != j && d.has_arc(verts[i], verts[j])) out.add_arc(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Digraph delete_vertex(const Digraph& d, int v) {
    VertexSet s = VertexSet::all(d.order());
    s.bits &= ~(1u << v);
    return induced(d, s);
}

Digraph relabel(const Digraph& d, const std::vector<int>& perm) {
    const int n = d.order();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("relabel: permutation size mismatch");
    Digraph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (d.has_arc(u, v)) out.add_arc(perm[u], perm[v]);
    return out;
}

namespace {

// Row-major MSB-first packing: bit (r,c) lands at word bit n^2-1-(r*n+c),
// so numeric order on words equals lexicographic order on bit-strings.
std::uint64_t pack_word(const Digraph& d) {
    const int n = d.order();
    std::uint64_t w = 0;
    for (int u = 0; u < n; ++u) {
        std::uint32_t row = d.out_row(u);
        while (row) {
            const int v = std::countr_zero(row);
            row &= row - 1;
            w |= std::uint64_t{1} << (n * n - 1 - (u * n + v));
        }
    }
    return w;
}

std::uint64_t permuted_word(const Digraph& d, const std::vector<int>& perm) {
    const int n = d.order();
    std::uint64_t w = 0;
    for (int u = 0; u < n; ++u) {
        std::uint32_t row = d.out_row(u);
        while (row) {
            const int v = std::countr_zero(row);
            row &= row - 1;
            w |= std::uint64_t{1} << (n * n - 1 - (perm[u] * n + perm[v]));
        }
    }
    return w;
}

} // namespace

CanonicalForm canonical_form(const Digraph& d) {
    const int n = d.order();
    if (n > 8)
        throw capability_error("canonical_form: permutation minimization supports at most 8 vertices");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = pack_word(d);
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, permuted_word(d, perm));
    return CanonicalForm{n, best};
}

bool is_isomorphic(const Digraph& a, const Digraph& b) {
    if (a.order() != b.order()) return false;
    if (a.arc_count() != b.arc_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

bool contains_induced(const Digraph& d, const Digraph& h) {
    const int n = d.order(), k = h.order();
    if (k > n) throw std::invalid_argument("contains_induced: pattern larger than host");
    const CanonicalForm target = canonical_form(h);
    const int harcs = h.arc_count();
    // All k-subsets of 0..n-1.
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        VertexSet s;
        for (int v : idx) s.add(v);
        Digraph sub = induced(d, s);
        if (sub.arc_count() == harcs && canonical_form(sub) == target) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return false;
}

std::vector<Digraph> enumerate_connected(int n) {
    if (n < 1 || n > 5)
        throw capability_error("enumerate_connected: exhaustive generation supports 1..5 vertices");
    // Arc slots in row-major order, diagonal skipped; ascending arc words give
    // ascending packed words since the diagonal bits are fixed zeros.
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) slots.emplace_back(u, v);
    const int m = static_cast<int>(slots.size());

    std::vector<std::vector<int>> perms;
    {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin(), perm.end())) perms.push_back(perm);
    }

    std::vector<Digraph> out;
    for (std::uint32_t word = 0; word < (1u << m); ++word) {
        Digraph d(n);
        for (int i = 0; i < m; ++i)
            if ((word >> (m - 1 - i)) & 1u) d.add_arc(slots[i].first, slots[i].second);
        if (!is_connected(d)) continue;
        const std::uint64_t self = pack_word(d);
        bool minimal = true;
        for (const auto& perm : perms) {
            if (permuted_word(d, perm) < self) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(d);
    }
    return out;
}

} // namespace cid
