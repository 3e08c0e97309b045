#ifndef EWB_POSET_HPP
#define EWB_POSET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ewb/report.hpp"

namespace ewb {

/// Unchecked input for a bounded poset: an explicit relation plus bounds.
struct RawPoset {
    std::string name;
    int size = 0;
    std::vector<std::pair<ElemId, ElemId>> relation;
    ElemId bottom = -1;
    ElemId top = -1;
    std::vector<std::string> labels;
};

/// A finite poset with designated bottom and top. Elements are dense ids
/// 0..size-1; labels are display names only. Immutable after construction.
class BoundedPoset {
public:
    BoundedPoset() = default;
    BoundedPoset(int size, std::vector<uint8_t> leq, ElemId bottom, ElemId top,
                 std::vector<std::string> labels = {});

    int size() const { return size_; }
    bool leq(ElemId a, ElemId b) const { return leq_[static_cast<size_t>(a) * size_ + b] != 0; }
    bool lt(ElemId a, ElemId b) const { return a != b && leq(a, b); }
    ElemId bottom() const { return bottom_; }
    ElemId top() const { return top_; }
    /// The one-point poset (0 = 1) is permitted but flagged.
    bool degenerate() const { return size_ == 1; }
    const std::string& label(ElemId x) const { return labels_[static_cast<size_t>(x)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<uint8_t>& matrix() const { return leq_; }

    bool same_order(const BoundedPoset& other) const {
        return size_ == other.size_ && leq_ == other.leq_ && bottom_ == other.bottom_ &&
               top_ == other.top_;
    }

private:
    int size_ = 0;
    ElemId bottom_ = 0;
    ElemId top_ = 0;
    std::vector<uint8_t> leq_;
    std::vector<std::string> labels_;
};

/// A bound-preserving monotone assignment between two bounded posets.
struct PosetMap {
    BoundedPoset source;
    BoundedPoset target;
    std::vector<ElemId> assign;

    ElemId operator()(ElemId x) const { return assign[static_cast<size_t>(x)]; }
};

Report validate_bounded_poset(const RawPoset& raw);

/// Builds the poset after validation; throws MalformedInput on out-of-range
/// ids and std::invalid_argument if a poset law fails.
BoundedPoset poset_from_raw(const RawPoset& raw);

Report check_poset_map(const PosetMap& f);

PosetMap identity_map(const BoundedPoset& p);
PosetMap compose(const PosetMap& g, const PosetMap& f); // g after f

struct PosetProduct {
    BoundedPoset poset;
    PosetMap proj_left;
    PosetMap proj_right;
    std::vector<std::pair<ElemId, ElemId>> pairs; // pair behind each product id
};

PosetProduct product_poset(const BoundedPoset& p, const BoundedPoset& q);

struct PosetEqualizer {
    BoundedPoset sub;
    PosetMap inclusion;
    std::vector<ElemId> members; // source ids, ascending
};

PosetEqualizer equalizer_sub(const PosetMap& f, const PosetMap& g);

std::vector<std::pair<ElemId, ElemId>> hasse_covers(const BoundedPoset& p);

/// All pairwise non-isomorphic bounded posets of size <= max_size in the
/// canonical order (size, then lexicographically least relation matrix).
std::vector<BoundedPoset> enumerate_bounded_posets(int max_size, const Budget& budget = {});

/// Greatest lower / least upper bound, when they exist.
std::optional<ElemId> poset_meet(const BoundedPoset& p, ElemId a, ElemId b);
std::optional<ElemId> poset_join(const BoundedPoset& p, ElemId a, ElemId b);

/// Lexicographically least relation matrix over all relabelings.
std::vector<uint8_t> canonical_poset_key(const BoundedPoset& p);

/// Order isomorphism search with up/down-set cardinality pruning.
std::optional<std::vector<ElemId>> find_order_iso(const BoundedPoset& p, const BoundedPoset& q);

/// Every monotone bound-preserving map p -> q, in lexicographic order.
std::vector<PosetMap> all_poset_maps(const BoundedPoset& p, const BoundedPoset& q);

/// The n-element chain 0 < 1 < ... < n-1.
BoundedPoset chain_poset(int n);
/// The four-element diamond {0, a, b, 1} with a, b incomparable.
BoundedPoset diamond_poset();

} // namespace ewb

#endif
