#ifndef CID_LAMBDA_HPP
#define CID_LAMBDA_HPP

#include <string>
#include <vector>

#include "cid/digraph.hpp"
#include "cid/zpoly.hpp"

namespace cid {

/// Member of the three-part family: trivial part T of size n1, complete
/// bidirectional part K of size n2, trivial part T' of size n3, with the
/// one-way arc sets T->K, T->T' and K->T' complete.
struct LambdaParams {
    int n1 = 0, n2 = 0, n3 = 0;

    int total() const { return n1 + n2 + n3; }
    std::string to_string() const;
    bool operator==(const LambdaParams&) const = default;
};

/// Vertices ordered T (0..n1), then K, then T'. Disconnected
/// parameterizations are rejected naming the failing condition.
Digraph build_lambda(const LambdaParams& p);

struct LambdaRecognition {
    bool ok = false;
    LambdaParams params;                // valid when ok
    std::vector<int> certificate;       // vertices witnessing the violation
    std::string reason;                 // violated condition, human readable
};

/// Deterministic classifier: vertices on a bidirectional arc must induce a
/// complete part K; remaining vertices with out-degree 0 form T', with
/// in-degree 0 form T; at most one leftover vertex may be a lone K. Success
/// is re-verified by rebuilding and comparing arc-for-arc.
LambdaRecognition recognize_lambda(const Digraph& d);

/// Closed-form generator set of the second critical ideal, in the ambient
/// variables of build_lambda's vertex order.
std::vector<Polynomial> lemma3_ideal(const LambdaParams& p);

/// Per-vertex out-degrees in build_lambda vertex order: n2+n3 on T,
/// n2+n3-1 on K, 0 on T'.
std::vector<int> lambda_outdegrees(const LambdaParams& p);

/// Parameter triples whose critical group has exactly one invariant factor
/// equal to 1.
bool corollary7_predicate(const LambdaParams& p);

/// Parameter triples whose Smith group has exactly one invariant factor
/// equal to 1.
bool corollary9_predicate(const LambdaParams& p);

/// All connected parameter triples with 1 <= n1+n2+n3 <= max_total, ordered
/// lexicographically.
std::vector<LambdaParams> connected_lambda_params(int max_total);

} // namespace cid

#endif
