#include "cid/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cid/critical.hpp"

namespace cid {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("matrix: ragged rows");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix: dimension mismatch in product");
    IntMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

namespace {

struct SnfWorker {
    IntMatrix w;
    std::optional<IntMatrix> u, v;

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < w.cols(); ++j) std::swap(w.at(a, j), w.at(b, j));
        if (u)
            for (int j = 0; j < u->cols(); ++j) std::swap(u->at(a, j), u->at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < w.rows(); ++i) std::swap(w.at(i, a), w.at(i, b));
        if (v)
            for (int i = 0; i < v->rows(); ++i) std::swap(v->at(i, a), v->at(i, b));
    }
    void negate_row(int a) {
        for (int j = 0; j < w.cols(); ++j) w.at(a, j) = -w.at(a, j);
        if (u)
            for (int j = 0; j < u->cols(); ++j) u->at(a, j) = -u->at(a, j);
    }
    void add_row(int target, int source, const Int& scale) {
        for (int j = 0; j < w.cols(); ++j) w.at(target, j) += scale * w.at(source, j);
        if (u)
            for (int j = 0; j < u->cols(); ++j) u->at(target, j) += scale * u->at(source, j);
    }
    void add_col(int target, int source, const Int& scale) {
        for (int i = 0; i < w.rows(); ++i) w.at(i, target) += scale * w.at(i, source);
        if (v)
            for (int i = 0; i < v->rows(); ++i) v->at(i, target) += scale * v->at(i, source);
    }

    // Smallest-magnitude nonzero entry of the trailing submatrix, ties by
    // row-major position.
    bool find_pivot(int t, int& pr, int& pc) const {
        bool found = false;
        Int best;
        for (int i = t; i < w.rows(); ++i)
            for (int j = t; j < w.cols(); ++j) {
                const Int& e = w.at(i, j);
                if (e == 0) continue;
                Int mag = abs(e);
                if (!found || mag < best) {
                    found = true;
                    best = std::move(mag);
                    pr = i;
                    pc = j;
                }
            }
        return found;
    }

    static Int floor_div(const Int& a, const Int& b) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }

    void diagonalize() {
        const int bound = std::min(w.rows(), w.cols());
        for (int t = 0; t < bound; ++t) {
            while (true) {
                int pr, pc;
                if (!find_pivot(t, pr, pc)) return; // trailing submatrix is zero
                swap_rows(t, pr);
                swap_cols(t, pc);
                if (w.at(t, t) < 0) negate_row(t);

                bool clean = true;
                for (int i = t + 1; i < w.rows(); ++i) {
                    if (w.at(i, t) == 0) continue;
                    add_row(i, t, -floor_div(w.at(i, t), w.at(t, t)));
                    if (w.at(i, t) != 0) clean = false; // residue below pivot magnitude
                }
                for (int j = t + 1; j < w.cols(); ++j) {
                    if (w.at(t, j) == 0) continue;
                    add_col(j, t, -floor_div(w.at(t, j), w.at(t, t)));
                    if (w.at(t, j) != 0) clean = false;
                }
                if (!clean) continue; // a smaller pivot now exists

                // Divisibility repair: fold a non-divisible entry into row t
                // so the next pivot shrinks to a common divisor.
                bool divides_all = true;
                for (int i = t + 1; i < w.rows() && divides_all; ++i)
                    for (int j = t + 1; j < w.cols() && divides_all; ++j)
                        if (w.at(i, j) % w.at(t, t) != 0) {
                            add_row(t, i, Int(1));
                            divides_all = false;
                        }
                if (divides_all) break;
            }
        }
    }
};

Int int_det(const IntMatrix& m, const std::vector<int>& rows, std::uint32_t colmask, int depth) {
    if (depth == static_cast<int>(rows.size())) return 1;
    Int acc = 0;
    int sign = 1;
    for (int c = 0; c < m.cols(); ++c) {
        if (!((colmask >> c) & 1u)) continue;
        const Int& e = m.at(rows[depth], c);
        if (e != 0) {
            Int sub = int_det(m, rows, colmask & ~(1u << c), depth + 1);
            if (sign > 0)
                acc += e * sub;
            else
                acc -= e * sub;
        }
        sign = -sign;
    }
    return acc;
}

std::vector<std::vector<int>> index_combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& m, bool with_transforms) {
    SnfWorker worker{m, std::nullopt, std::nullopt};
    if (with_transforms) {
        worker.u = IntMatrix::identity(m.rows());
        worker.v = IntMatrix::identity(m.cols());
    }
    worker.diagonalize();

    SnfResult result;
    const int bound = std::min(m.rows(), m.cols());
    for (int t = 0; t < bound; ++t) {
        const Int& d = worker.w.at(t, t);
        if (d != 0) result.factors.push_back(d);
    }
    result.rank = static_cast<int>(result.factors.size());
    result.zero_count = bound - result.rank;
    result.left = std::move(worker.u);
    result.right = std::move(worker.v);
    return result;
}

Int gcd_minors(const IntMatrix& m, int i) {
    if (i < 1 || i > std::min(m.rows(), m.cols()))
        throw std::invalid_argument("gcd_minors: index out of range");
    Int g = 0;
    const auto row_sets = index_combinations(m.rows(), i);
    const auto col_sets = index_combinations(m.cols(), i);
    for (const auto& rows : row_sets) {
        for (const auto& cols : col_sets) {
            std::uint32_t mask = 0;
            for (int c : cols) mask |= 1u << c;
            Int det = int_det(m, rows, mask, 0);
            if (det != 0) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
                if (g == 1) return g;
            }
        }
    }
    return g;
}

IntMatrix adjacency_matrix(const Digraph& d) {
    const int n = d.order();
    IntMatrix a(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (d.has_arc(u, v)) a.at(u, v) = 1;
    return a;
}

IntMatrix laplacian_matrix(const Digraph& d) {
    const int n = d.order();
    IntMatrix l(n, n);
    for (int u = 0; u < n; ++u) {
        l.at(u, u) = d.out_degree(u);
        for (int v = 0; v < n; ++v)
            if (d.has_arc(u, v)) l.at(u, v) = -1;
    }
    return l;
}

namespace {

GroupSummary summarize(const IntMatrix& m) {
    const SnfResult snf = smith_normal_form(m);
    GroupSummary s;
    s.factors = snf.factors;
    s.unit_count = static_cast<int>(std::count(s.factors.begin(), s.factors.end(), Int(1)));
    s.free_rank = m.rows() - snf.rank;
    return s;
}

} // namespace

GroupSummary critical_group(const Digraph& d) { return summarize(laplacian_matrix(d)); }

GroupSummary smith_group(const Digraph& d) { return summarize(adjacency_matrix(d)); }

Int evaluation_bridge(const Digraph& d, int i, EvalPoint point) {
    const int n = d.order();
    if (i < 1 || i > n - 1) throw std::invalid_argument("evaluation_bridge: index out of range 1..n-1");
    std::vector<Int> coords;
    coords.reserve(n);
    for (int u = 0; u < n; ++u) coords.emplace_back(point == EvalPoint::outdegree ? d.out_degree(u) : 0);
    Int g = 0;
    for (const auto& gen : critical_ideal_gens(d, i)) {
        Int v = gen.evaluate(coords);
        if (v != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) break;
        }
    }
    return g;
}

} // namespace cid
