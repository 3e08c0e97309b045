#ifndef EWB_OMEGA_HPP
#define EWB_OMEGA_HPP

#include <string>
#include <vector>

#include "ewb/effect_algebra.hpp"
#include "ewb/effect_monoid.hpp"
#include "ewb/poset.hpp"
#include "ewb/report.hpp"

namespace ewb {

/// A monotone sequence over a finite bounded poset, stored as the finite
/// prefix before stabilization plus the eventual value. s(i) = prefix[i] for
/// i < |prefix|, eventual afterwards.
struct MonotoneSeq {
    std::vector<ElemId> prefix;
    ElemId eventual = 0;

    ElemId at(size_t i) const { return i < prefix.size() ? prefix[i] : eventual; }
};

MonotoneSeq constant_seq(ElemId x);

/// Weakly increasing along the poset order, prefix through eventual.
bool valid_monotone_seq(const BoundedPoset& p, const MonotoneSeq& s);

/// The stabilization value; classes under eventual equality biject with
/// elements, so the class IS this value. Throws MalformedInput when the
/// sequence is not monotone.
ElemId seq_class_of(const BoundedPoset& p, const MonotoneSeq& s);

bool seq_eventually_equal(const BoundedPoset& p, const MonotoneSeq& s, const MonotoneSeq& t);

/// s <= t iff from some index on, s(i) <= t(i) pointwise.
bool seq_leq(const BoundedPoset& p, const MonotoneSeq& s, const MonotoneSeq& t);

/// The poset of sequence classes with the tail order, plus the stabilization
/// map down to the base, certified an order isomorphism.
struct SeqModel {
    BoundedPoset poset; // one node per class
    PosetMap stab;      // class -> stabilization value
    bool certified = false;
};
SeqModel seq_functor(const BoundedPoset& p);

/// Pointwise image of representatives: the class of x maps to the class of
/// f(x). Defined for any bounded-poset morphism f.
PosetMap seq_map(const PosetMap& f);

/// Class -> supremum of any representative (the stabilization value), as a
/// map out of the sequence poset of the algebra's induced order.
PosetMap sup_map(const FinEffectAlgebra& e);

/// x -> class of the constant sequence at x.
PosetMap const_embedding(const BoundedPoset& p);

/// True iff assign commutes with suprema of monotone sequences, checked
/// exhaustively over bounded prefixes rather than assumed from finiteness.
/// Throws PreconditionFailure when assign is not a bounded-poset morphism
/// between the induced orders.
bool check_omega_normal(const FinEffectAlgebra& src, const FinEffectAlgebra& dst,
                        const std::vector<ElemId>& assign);

/// A comparable pair [low <= high]. The pair order reverses the left end:
/// [x1<=y1] <= [x2<=y2] iff x2 <= x1 and y1 <= y2.
struct IntervalPair {
    ElemId low = 0;
    ElemId high = 0;
};

std::vector<IntervalPair> interval_pairs(const BoundedPoset& p);
bool interval_leq(const BoundedPoset& p, const IntervalPair& a, const IntervalPair& b);

/// The equations tying a monoid's multiplication to the difference
/// structure: unit pairing, two-sided multiplication agreement, product
/// distribution over differences, and the morphism laws for the pairing and
/// scaling maps. Failures are report entries with witnesses.
Report check_monoid_naturality(const FinEffectMonoid& m);

} // namespace ewb

#endif
