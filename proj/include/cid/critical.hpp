#ifndef CID_CRITICAL_HPP
#define CID_CRITICAL_HPP

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cid/digraph.hpp"
#include "cid/ideals.hpp"
#include "cid/zpoly.hpp"

namespace cid {

/// Matrix with the vertex variable x_u on the diagonal and -1 at (u,v) for
/// each arc u->v.
SymMatrix generalized_laplacian(const Digraph& d);

/// Determinants of all i x i row/column selections of the generalized
/// Laplacian, zeros discarded, in lexicographic (row set, then column set)
/// order.
std::vector<Polynomial> critical_ideal_gens(const Digraph& d, int i);

/// Number of trivial critical ideals: the largest i with I_i trivial, 0 if
/// I_1 is nontrivial. Ascends i and stops at the first nontrivial ideal
/// (valid by nestedness); a constant +-1 minor certifies triviality without
/// a basis run.
int algebraic_corank(const Digraph& d, const GroebnerOptions& opts = {});

struct CriticalIdealReport {
    Digraph digraph;
    /// trivial[i-1] is the verdict for I_i; a prefix of true values.
    std::vector<bool> trivial;
    int gamma = 0;
};

CriticalIdealReport critical_ideal_report(const Digraph& d, const GroebnerOptions& opts = {});

/// True iff deleting any vertex strictly decreases the algebraic co-rank.
/// Deleted subdigraphs are evaluated on the same definition even when they
/// are disconnected.
bool is_gamma_critical(const Digraph& d, const GroebnerOptions& opts = {});

struct NamedDigraph {
    std::string name;
    Digraph digraph;
};

/// The 17 minimal forbidden digraphs for algebraic co-rank <= 1 (seven on 3
/// vertices, ten on 4).
using ForbiddenFamily = std::vector<NamedDigraph>;

const ForbiddenFamily& forbidden_family();

/// True iff no member of the forbidden family occurs as an induced
/// subdigraph.
bool is_f_free(const Digraph& d);

struct CensusEntry {
    Digraph digraph;
    std::string d6;
    int gamma = 0;
    bool critical = false;
};

/// Per-class gamma and criticality verdicts for all connected isomorphism
/// classes on n vertices, in enumeration order. Classes whose digraph6
/// string is in `skip` are omitted (checkpoint resume); `on_entry` fires as
/// each class completes (serialized, completion order). Resource errors
/// abort with the offending digraph6 string in the message.
std::vector<CensusEntry> census_scan(int n, int jobs = 1, const std::set<std::string>* skip = nullptr,
                                     const std::function<void(const CensusEntry&)>& on_entry = {});

/// Number of gamma-critical classes on n vertices per co-rank value k; only
/// nonzero counts appear.
std::map<int, long> census(int n, int jobs = 1);

} // namespace cid

#endif
