#ifndef CID_IDEALS_HPP
#define CID_IDEALS_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "cid/zpoly.hpp"

namespace cid {

struct GroebnerOptions {
    MonomialOrder order = MonomialOrder::degrevlex;
    /// Reduction-step budget per basis; exceeding it raises
    /// resource_limit_error instead of returning a possibly wrong answer.
    long step_cap = 1'000'000;
    /// One line per completed critical pair when set.
    std::ostream* trace = nullptr;
};

/// Strong Groebner basis over the integers for a fixed monomial order:
/// every S-polynomial and every GCD-polynomial of basis pairs reduces to 0,
/// leading coefficients positive, no zero elements.
struct GroebnerBasis {
    int nvars = 0;
    MonomialOrder order = MonomialOrder::degrevlex;
    std::vector<Polynomial> elems;
};

GroebnerBasis strong_groebner(const std::vector<Polynomial>& gens, const GroebnerOptions& opts = {});

/// Strong remainder: no term of the result is reducible by any basis element
/// (a term is reducible when some leading monomial divides it and the leading
/// coefficient either divides the coefficient or the Euclidean remainder step
/// changes it). Coefficients of the remainder are least non-negative residues.
Polynomial reduce(const Polynomial& p, const GroebnerBasis& gb);

/// True iff 1 lies in the ideal generated by gens.
bool is_trivial(const std::vector<Polynomial>& gens, const GroebnerOptions& opts = {});

/// Mutual containment via reduction against each side's basis.
bool ideals_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                  const GroebnerOptions& opts = {});

/// A prime p and a point over Z/p at which all generators vanish; such a
/// witness certifies nontriviality. The search scans p in {2,3,5} and points
/// with coordinates in {-1,0,1,2}; absence of a witness decides nothing.
struct NontrivialityWitness {
    long prime = 0;
    std::vector<long> point;
};

std::optional<NontrivialityWitness> find_nontriviality_witness(const std::vector<Polynomial>& gens);

} // namespace cid

#endif
