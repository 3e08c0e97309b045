#ifndef EWB_ORTHO_HPP
#define EWB_ORTHO_HPP

#include <optional>
#include <string>
#include <vector>

#include "ewb/kalmbach.hpp"
#include "ewb/poset.hpp"
#include "ewb/report.hpp"

namespace ewb {

/// A bounded poset with an orthocomplement candidate. Laws are checked by
/// check_omp, not enforced on construction.
struct OrthoPoset {
    BoundedPoset poset;
    std::vector<ElemId> perp;
    std::string name = "omp";

    bool orthogonal(ElemId a, ElemId b) const {
        return poset.leq(a, perp[static_cast<size_t>(b)]);
    }
};

/// Five laws: involution, antitonicity, a meet a-perp = 0, orthogonal joins
/// exist, and the orthomodular identity b = a-perp meet (a join b).
Report check_omp(const OrthoPoset& a);

/// Bounded-poset morphism preserving orthogonality and orthogonal joins.
Report check_omp_morphism(const OrthoPoset& a, const OrthoPoset& b,
                          const std::vector<ElemId>& assign);

/// View a Kalmbach extension as an orthocomplemented poset.
OrthoPoset omp_of(const KalmbachExtension& k);

/// Isomorphism respecting order and perp; nullopt when none exists.
std::optional<std::vector<ElemId>> find_omp_iso(const OrthoPoset& a, const OrthoPoset& b);

/// Lexicographically least (order matrix, perp table) over relabelings.
std::vector<uint8_t> canonical_omp_key(const OrthoPoset& a);

/// All pairwise non-isomorphic orthomodular posets of size <= max_size,
/// built by equipping each canonical bounded poset with every law-abiding
/// orthocomplement. Canonical deterministic order.
std::vector<OrthoPoset> enumerate_omps(int max_size, const Budget& budget = {});

/// Boolean algebra 2^atoms as an OMP (ids are subsets encoded as bitmasks).
OrthoPoset boolean_omp(int atoms);

/// The horizontal sum of two 4-element Boolean algebras: 0, 1, and two
/// unrelated complement pairs.
OrthoPoset mo2_omp();

} // namespace ewb

#endif
