#ifndef EWB_EFFECT_MONOID_HPP
#define EWB_EFFECT_MONOID_HPP

#include <optional>
#include <string>
#include <vector>

#include "ewb/effect_algebra.hpp"
#include "ewb/ortho.hpp"
#include "ewb/report.hpp"

namespace ewb {

/// An effect algebra with a total multiplication table. Laws are checked by
/// check_effect_monoid, not on construction.
struct FinEffectMonoid {
    FinEffectAlgebra ea;
    std::vector<ElemId> mul; // size*size, total

    ElemId times(ElemId a, ElemId b) const { return mul[static_cast<size_t>(a) * ea.size + b]; }
};

/// Unitality, associativity, and distributivity over defined sums on both
/// sides (with the definedness implications).
Report check_effect_monoid(const FinEffectMonoid& m);

/// A pairing table E x F -> G: unit on (1,1) and additive in each argument.
Report check_bimorphism(const FinEffectAlgebra& e, const FinEffectAlgebra& f,
                        const FinEffectAlgebra& g, const std::vector<ElemId>& pairing);

/// Fixed points of squaring, ascending.
std::vector<ElemId> idempotents(const FinEffectMonoid& m);

/// True iff the idempotents are exactly {0, 1}. The one-point monoid is
/// final, not irreducible, and returns false.
bool is_irreducible(const FinEffectMonoid& m);

struct CornerDecomposition {
    FinEffectMonoid left;  // elements under p, with p as the unit
    FinEffectMonoid right; // elements under the complement of p
    std::vector<ElemId> left_members;
    std::vector<ElemId> right_members;
    std::vector<std::pair<ElemId, ElemId>> pairing; // a -> (p*a, p'*a) as corner ids
    bool certified = false; // pairing is an isomorphism onto the product
};

/// Splits at an idempotent p; throws PreconditionFailure if p*p != p.
CornerDecomposition corner_decompose(const FinEffectMonoid& m, ElemId p);

/// All ordered pairs of nonzero elements multiplying to zero.
std::vector<std::pair<ElemId, ElemId>> zero_divisors(const FinEffectMonoid& m);

/// Meet as multiplication; throws PreconditionFailure naming the failed
/// lattice law when the input is not a Boolean algebra.
FinEffectMonoid boolean_bridge(const OrthoPoset& b);

/// True iff every element is idempotent (the monoid is a Boolean algebra
/// under its own meet).
bool detect_boolean(const FinEffectMonoid& m);

struct EmClassification {
    std::string descriptor; // "{0}", "2^k", or "irreducible_N" on failure
    int exponent = 0;       // k in 2^k; 0 for the one-point monoid
    std::vector<ElemId> iso; // carrier -> bitmask of boolean_em(exponent)
    std::vector<std::string> trace; // one line per corner split
    bool certified = false;
    bool failed = false;
    std::optional<FinEffectMonoid> counterexample; // the irreducible big factor
};

/// Splits on idempotents until every factor is irreducible, certifies the
/// assembled isomorphism onto a power of {0,1}. An irreducible factor with
/// more than two elements is returned as a counterexample, never dropped.
EmClassification classify_finite_em(const FinEffectMonoid& m);

/// Every multiplication table completing e to an effect monoid, sorted.
std::vector<std::vector<ElemId>> em_structures_on(const FinEffectAlgebra& e,
                                                  const Budget& budget = {});
bool admits_em(const FinEffectAlgebra& e, const Budget& budget = {});

FinEffectMonoid em_product(const FinEffectMonoid& a, const FinEffectMonoid& b);

/// Multiplicative isomorphism (an EA iso that also preserves mul).
std::optional<std::vector<ElemId>> find_em_iso(const FinEffectMonoid& a,
                                               const FinEffectMonoid& b);

/// Lexicographically least (sum, perp, mul) encoding over relabelings.
std::vector<uint8_t> canonical_em_key(const FinEffectMonoid& m);

/// Subsets of `atoms` points with intersection as multiplication.
FinEffectMonoid boolean_em(int atoms);

} // namespace ewb

#endif
