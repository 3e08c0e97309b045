#ifndef EWB_EFFECT_ALGEBRA_HPP
#define EWB_EFFECT_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ewb/kalmbach.hpp"
#include "ewb/ortho.hpp"
#include "ewb/poset.hpp"
#include "ewb/report.hpp"

namespace ewb {

/// Partial commutative sum with complements. The sum table holds -1 for
/// "undefined"; laws are checked by check_effect_algebra, not on construction.
struct FinEffectAlgebra {
    int size = 0;
    ElemId zero = 0;
    ElemId one = 0;
    std::vector<int16_t> sum; // size*size, -1 = undefined
    std::vector<ElemId> perp;
    std::string name = "ea";

    bool defined(ElemId a, ElemId b) const {
        return sum[static_cast<size_t>(a) * size + b] >= 0;
    }
    ElemId add(ElemId a, ElemId b) const {
        return sum[static_cast<size_t>(a) * size + b];
    }
    ElemId comp(ElemId a) const { return perp[static_cast<size_t>(a)]; }
};

/// The five sum axioms plus the derived-order and orthogonality invariants.
Report check_effect_algebra(const FinEffectAlgebra& e);

/// a <= b iff some c has a+c = b; returns that relation as a bounded poset.
/// Requires a valid algebra (the relation need not be an order otherwise).
BoundedPoset induced_order(const FinEffectAlgebra& e);

/// The unique c with a+c = b, when a <= b; nullopt otherwise.
std::optional<ElemId> ominus(const FinEffectAlgebra& e, ElemId b, ElemId a);

/// one-preserved, additivity over defined sums, plus the consequence checks
/// zero-preserved and perp-preserved.
Report check_ea_hom(const FinEffectAlgebra& src, const FinEffectAlgebra& dst,
                    const std::vector<ElemId>& assign);

struct EaProduct {
    FinEffectAlgebra ea;
    std::vector<std::pair<ElemId, ElemId>> pairs;
    std::vector<ElemId> proj_left;
    std::vector<ElemId> proj_right;
};
EaProduct ea_product(const FinEffectAlgebra& e, const FinEffectAlgebra& f);

struct EaEqualizer {
    FinEffectAlgebra sub;
    std::vector<ElemId> members; // source ids, ascending; inclusion map
};
EaEqualizer ea_equalizer(const FinEffectAlgebra& src, const FinEffectAlgebra& dst,
                         const std::vector<ElemId>& f, const std::vector<ElemId>& g);

/// Sum defined exactly on orthogonal pairs, as the join.
FinEffectAlgebra omp_to_ea(const OrthoPoset& a);

/// The collapse K(order of e) -> e: a chain goes to the sum of its interval
/// differences. Total; throws PreconditionFailure if k was built elsewhere.
PosetMap algebra_action(const FinEffectAlgebra& e, const KalmbachExtension& k);

/// Sum table rebuilt through differences alone: a+b = 1-((1-a)-b).
std::vector<int16_t> dposet_sum(const FinEffectAlgebra& e);

struct FreeFactorization {
    KalmbachExtension extension;     // over the map's source
    std::vector<ElemId> h;           // chain id -> element of the target OMP
    bool unique_certified = false;   // exhaustive search ran and found only h
    unsigned long long searched = 0; // candidate assignments examined
};

/// Extends a bounded-poset map f: P -> A through the chain embedding:
/// h = action of A after the chain image of f. Certifies h is the only
/// orthocomplement-respecting extension when the search fits the budget.
FreeFactorization free_factorization(const PosetMap& f, const OrthoPoset& a,
                                     const Budget& budget = {});

/// EA isomorphism (bijection preserving sum table and complements).
std::optional<std::vector<ElemId>> find_ea_iso(const FinEffectAlgebra& e,
                                               const FinEffectAlgebra& f);

/// Lexicographically least (sum, perp) encoding over relabelings.
std::vector<uint8_t> canonical_ea_key(const FinEffectAlgebra& e);

/// Equally spaced points 0, 1/steps, ..., 1 with truncated addition:
/// size steps+1, sum defined iff i+j <= steps.
FinEffectAlgebra chain_effect_algebra(int steps);

/// Subsets of `atoms` points: disjoint union as sum, complement as perp.
FinEffectAlgebra boolean_effect_algebra(int atoms);

} // namespace ewb

#endif
