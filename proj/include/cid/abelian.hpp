#ifndef CID_ABELIAN_HPP
#define CID_ABELIAN_HPP

#include <optional>
#include <vector>

#include "cid/digraph.hpp"
#include "cid/zpoly.hpp"

namespace cid {

class IntMatrix {
  public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    static IntMatrix identity(int n);
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix&) const = default;

  private:
    int rows_, cols_;
    std::vector<Int> data_;
};

/// Invariant-factor diagonal of an integer matrix, with optional unimodular
/// transform certificates: left * M * right equals the diagonal of factors
/// padded with zeros.
struct SnfResult {
    std::vector<Int> factors; // positive, each dividing the next
    int rank = 0;
    int zero_count = 0;       // zero diagonal entries, min(r,c) - rank
    std::optional<IntMatrix> left;
    std::optional<IntMatrix> right;
};

/// Diagonalization by integral row/column operations; smallest-magnitude
/// pivot, ties by row-major position.
SnfResult smith_normal_form(const IntMatrix& m, bool with_transforms = false);

/// gcd of all i x i minors, 0 if all vanish. Brute force over row/column
/// selections with no SNF reuse; this is the oracle SNF is tested against.
Int gcd_minors(const IntMatrix& m, int i);

/// A(D)[u][v] = 1 iff arc u->v.
IntMatrix adjacency_matrix(const Digraph& d);
/// L(D) = diag(out-degrees) - A(D); every row sums to 0.
IntMatrix laplacian_matrix(const Digraph& d);

struct GroupSummary {
    std::vector<Int> factors; // nonzero invariant factors
    int unit_count = 0;       // factors equal to 1
    int free_rank = 0;        // rank deficiency of the defining matrix
};

/// Torsion invariants of coker L(D); for any digraph the Laplacian has a
/// zero row-sum, so the nonzero factors sit in indices 1..n-1.
GroupSummary critical_group(const Digraph& d);
/// Invariant factors of coker A(D).
GroupSummary smith_group(const Digraph& d);

enum class EvalPoint { outdegree, zero };

/// gcd of the evaluations of the generators of the i-th critical ideal at
/// the out-degree vector (matches the Laplacian minor gcd) or at the origin
/// (matches the adjacency minor gcd up to sign).
Int evaluation_bridge(const Digraph& d, int i, EvalPoint point);

} // namespace cid

#endif
