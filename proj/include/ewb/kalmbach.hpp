#ifndef EWB_KALMBACH_HPP
#define EWB_KALMBACH_HPP

#include <string>
#include <vector>

#include "ewb/poset.hpp"
#include "ewb/report.hpp"

namespace ewb {

/// A finite chain of even length in some ambient bounded poset, stored
/// strictly ascending in the ambient order. Read as half-open intervals
/// [p0,p1), [p2,p3), ... The empty chain is allowed.
using EvenChain = std::vector<ElemId>;

/// Throws MalformedInput if a point is out of range; returns false when the
/// list is odd-length or not strictly ascending in the base order.
bool valid_even_chain(const EvenChain& s, const BoundedPoset& base);

/// Interval containment: every interval of s lies inside one of t.
bool chain_leq(const EvenChain& s, const EvenChain& t, const BoundedPoset& base);

/// Symmetric difference of the point set with {bottom, top}, re-sorted.
EvenChain chain_perp(const EvenChain& s, const BoundedPoset& base);

/// The poset of all even chains of a base poset, with interval order and
/// the symmetric-difference orthocomplement.
struct KalmbachExtension {
    BoundedPoset base;
    std::vector<EvenChain> elements; // index = element id of `poset`
    BoundedPoset poset;
    std::vector<ElemId> perp;
    /// Base had 0 = 1: the extension collapses to {empty chain} and carries
    /// no orthocomplement structure worth checking.
    bool degenerate = false;

    ElemId id_of(const EvenChain& s) const;
};

/// Number of even chains, saturating at 2^62 (budget arithmetic only).
unsigned long long count_even_chains(const BoundedPoset& p);

/// Throws BudgetExceeded when count_even_chains(p) > budget.max_chains.
KalmbachExtension kalmbach_extension(const BoundedPoset& p, const Budget& budget = {});

/// Functorial action on a bound-preserving monotone map: each chain goes to
/// the pairwise-cancelled image of its points.
PosetMap kalmbach_map(const PosetMap& f, const KalmbachExtension& ksource,
                      const KalmbachExtension& ktarget);

/// bottom -> empty chain, x -> [bottom < x] otherwise.
PosetMap unit_embedding(const BoundedPoset& p, const KalmbachExtension& kp);

/// The collapse K(K(p)) -> K(p): the action of K(p)'s own partial-sum
/// structure. Defined with the effect-algebra code; declared here because it
/// is part of the extension's interface.
PosetMap monad_mult(const BoundedPoset& p, const KalmbachExtension& kp,
                    const KalmbachExtension& kkp);

/// Display form like "[0<a<b<1]"; "[]" for the empty chain.
std::string chain_label(const EvenChain& s, const BoundedPoset& base);

} // namespace ewb

#endif
