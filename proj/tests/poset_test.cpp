#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#include "ewb/poset.hpp"

using namespace ewb;

namespace {

// Independent check: count cover-paths from bottom to top.
int count_maximal_chains(const BoundedPoset& p) {
    auto covers = hasse_covers(p);
    std::vector<std::vector<ElemId>> next(static_cast<size_t>(p.size()));
    for (auto [a, b] : covers) next[static_cast<size_t>(a)].push_back(b);
    std::vector<int> paths(static_cast<size_t>(p.size()), -1);
    auto rec = [&](auto&& self, ElemId x) -> int {
        if (x == p.top()) return 1;
        if (paths[static_cast<size_t>(x)] >= 0) return paths[static_cast<size_t>(x)];
        int total = 0;
        for (ElemId y : next[static_cast<size_t>(x)]) total += self(self, y);
        return paths[static_cast<size_t>(x)] = total;
    };
    return p.size() == 1 ? 1 : rec(rec, p.bottom());
}

int longest_chain_elems(const BoundedPoset& p) {
    std::vector<int> depth(static_cast<size_t>(p.size()), 1);
    std::vector<ElemId> order(static_cast<size_t>(p.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](ElemId a, ElemId b) {
        if (p.lt(a, b)) return true;
        if (p.lt(b, a)) return false;
        return a < b;
    });
    for (ElemId x : order)
        for (int y = 0; y < p.size(); ++y)
            if (p.lt(x, y))
                depth[static_cast<size_t>(y)] =
                    std::max(depth[static_cast<size_t>(y)], depth[static_cast<size_t>(x)] + 1);
    return *std::max_element(depth.begin(), depth.end());
}

std::vector<uint8_t> reflexive_transitive_closure(int n,
                                                  const std::vector<std::pair<ElemId, ElemId>>& edges) {
    std::vector<uint8_t> m(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1;
    for (auto [a, b] : edges) m[static_cast<size_t>(a) * n + b] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m[static_cast<size_t>(i) * n + k] && m[static_cast<size_t>(k) * n + j])
                    m[static_cast<size_t>(i) * n + j] = 1;
    return m;
}

// Oracle: enumerate every relation on n labeled points, keep the bounded
// posets, and count them up to relabeling. Bit-matrix canonical form over all
// n! permutations; shares no code with the library's enumerator.
int oracle_bounded_poset_count(int n) {
    std::vector<std::pair<int, int>> off;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) off.emplace_back(a, b);
    const int bits = static_cast<int>(off.size());
    std::set<uint64_t> classes;

    for (uint64_t mask = 0; mask < (1ull << bits); ++mask) {
        std::vector<uint8_t> m(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1;
        for (int k = 0; k < bits; ++k)
            if (mask & (1ull << k))
                m[static_cast<size_t>(off[static_cast<size_t>(k)].first) * n +
                  off[static_cast<size_t>(k)].second] = 1;
        auto at = [&](int a, int b) { return m[static_cast<size_t>(a) * n + b] != 0; };

        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) {
                if (a != b && at(a, b) && at(b, a)) ok = false;
                if (!at(a, b)) continue;
                for (int c = 0; c < n; ++c)
                    if (at(b, c) && !at(a, c)) {
                        ok = false;
                        break;
                    }
            }
        if (!ok) continue;
        int bottom = -1, top = -1;
        for (int x = 0; x < n; ++x) {
            bool is_bot = true, is_top = true;
            for (int y = 0; y < n; ++y) {
                if (!at(x, y)) is_bot = false;
                if (!at(y, x)) is_top = false;
            }
            if (is_bot) bottom = x;
            if (is_top) top = x;
        }
        if (bottom < 0 || top < 0) continue;

        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        uint64_t best = ~0ull;
        do {
            uint64_t code = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (at(a, b))
                        code |= 1ull << (perm[static_cast<size_t>(a)] * n +
                                         perm[static_cast<size_t>(b)]);
            best = std::min(best, code);
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes.insert(best);
    }
    return static_cast<int>(classes.size());
}

RawPoset diamond_raw() {
    RawPoset raw;
    raw.name = "diamond";
    raw.size = 4;
    raw.relation = {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}};
    raw.bottom = 0;
    raw.top = 3;
    return raw;
}

} // namespace

TEST_CASE("two-element chain validates") {
    RawPoset raw;
    raw.size = 2;
    raw.relation = {{0, 1}};
    raw.bottom = 0;
    raw.top = 1;
    CHECK(validate_bounded_poset(raw).pass());
}

TEST_CASE("diamond validates") { CHECK(validate_bounded_poset(diamond_raw()).pass()); }

TEST_CASE("missing transitive pair is reported with its witness") {
    RawPoset raw;
    raw.size = 3;
    raw.relation = {{0, 1}, {1, 2}}; // 0 <= 2 missing
    raw.bottom = 0;
    raw.top = 2;
    Report rep = validate_bounded_poset(raw);
    REQUIRE_FALSE(rep.pass());
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.law == "transitivity" && v.witness == std::vector<ElemId>{0, 1, 2}) found = true;
    CHECK(found);
}

TEST_CASE("antisymmetry violation is reported") {
    RawPoset raw;
    raw.size = 3;
    raw.relation = {{0, 1}, {1, 0}, {0, 2}, {1, 2}};
    raw.bottom = 0;
    raw.top = 2;
    Report rep = validate_bounded_poset(raw);
    REQUIRE_FALSE(rep.pass());
    CHECK(rep.violations.front().law == "antisymmetry");
}

TEST_CASE("out-of-range ids are malformed input, not law violations") {
    RawPoset raw;
    raw.size = 2;
    raw.relation = {{0, 5}};
    raw.bottom = 0;
    raw.top = 1;
    CHECK_THROWS_AS(validate_bounded_poset(raw), MalformedInput);
}

TEST_CASE("identity map on the diamond passes") {
    auto d = diamond_poset();
    CHECK(check_poset_map(identity_map(d)).pass());
}

TEST_CASE("3-chain to 2-chain collapsing the middle down passes") {
    PosetMap f{chain_poset(3), chain_poset(2), {0, 0, 1}};
    CHECK(check_poset_map(f).pass());
}

TEST_CASE("map sending top to bottom fails") {
    PosetMap f{chain_poset(2), chain_poset(2), {0, 0}};
    Report rep = check_poset_map(f);
    REQUIRE_FALSE(rep.pass());
    CHECK(rep.violations.front().law == "top-preserved");
}

TEST_CASE("non-monotone map fails with a witness pair") {
    // 0 < m < 1 mapped to 0, 1, 0 in the target chain breaks m <= top.
    PosetMap f{chain_poset(3), chain_poset(3), {0, 2, 2}};
    CHECK(check_poset_map(f).pass());
    PosetMap g{chain_poset(3), chain_poset(3), {0, 2, 1}};
    Report rep = check_poset_map(g);
    REQUIRE_FALSE(rep.pass());
    CHECK(rep.violations.front().law == "monotone");
}

TEST_CASE("assignment length mismatch is malformed") {
    PosetMap f{chain_poset(3), chain_poset(2), {0, 1}};
    CHECK_THROWS_AS(check_poset_map(f), MalformedInput);
}

TEST_CASE("product of two 2-chains is the diamond") {
    auto prod = product_poset(chain_poset(2), chain_poset(2));
    CHECK(prod.poset.size() == 4);
    CHECK(find_order_iso(prod.poset, diamond_poset()).has_value());
    CHECK(check_poset_map(prod.proj_left).pass());
    CHECK(check_poset_map(prod.proj_right).pass());
}

TEST_CASE("product with the one-point poset is isomorphic to the other factor") {
    BoundedPoset one(1, {1}, 0, 0);
    auto d = diamond_poset();
    CHECK(find_order_iso(product_poset(d, one).poset, d).has_value());
    CHECK(find_order_iso(product_poset(one, d).poset, d).has_value());
}

TEST_CASE("2-chain times 3-chain is the six-element grid") {
    auto prod = product_poset(chain_poset(2), chain_poset(3));
    const auto& g = prod.poset;
    CHECK(g.size() == 6);
    CHECK(hasse_covers(g).size() == 7);
    CHECK(longest_chain_elems(g) == 4);
    CHECK(count_maximal_chains(g) == 3);
}

TEST_CASE("projections commute with pairs") {
    auto prod = product_poset(chain_poset(3), diamond_poset());
    for (int i = 0; i < prod.poset.size(); ++i) {
        CHECK(prod.proj_left(i) == prod.pairs[static_cast<size_t>(i)].first);
        CHECK(prod.proj_right(i) == prod.pairs[static_cast<size_t>(i)].second);
    }
}

TEST_CASE("equalizer of equal maps is the whole source") {
    auto d = diamond_poset();
    auto id = identity_map(d);
    auto eq = equalizer_sub(id, id);
    CHECK(eq.sub.size() == d.size());
    CHECK(eq.sub.same_order(d));
}

TEST_CASE("equalizer drops the one disagreement point") {
    auto d = diamond_poset();
    auto c2 = chain_poset(2);
    PosetMap f{d, c2, {0, 1, 0, 1}};
    PosetMap g{d, c2, {0, 0, 0, 1}};
    REQUIRE(check_poset_map(f).pass());
    REQUIRE(check_poset_map(g).pass());
    auto eq = equalizer_sub(f, g);
    CHECK(eq.members == std::vector<ElemId>{0, 2, 3});
    CHECK(check_poset_map(eq.inclusion).pass());
}

TEST_CASE("maps agreeing only on bounds equalize to the 2-chain") {
    auto c3 = chain_poset(3);
    PosetMap f{c3, c3, {0, 1, 2}};
    PosetMap g{c3, c3, {0, 0, 2}};
    auto eq = equalizer_sub(f, g);
    CHECK(eq.sub.size() == 2);
    CHECK(find_order_iso(eq.sub, chain_poset(2)).has_value());
}

TEST_CASE("equalizer universal property at small sizes") {
    auto d = diamond_poset();
    auto c2 = chain_poset(2);
    PosetMap f{d, c2, {0, 1, 0, 1}};
    PosetMap g{d, c2, {0, 0, 0, 1}};
    auto eq = equalizer_sub(f, g);
    for (const auto& src : enumerate_bounded_posets(4)) {
        for (const auto& h : all_poset_maps(src, d)) {
            bool equalizes = true;
            for (int x = 0; x < src.size(); ++x)
                if (f(h(x)) != g(h(x))) equalizes = false;
            if (!equalizes) continue;
            int factorizations = 0;
            for (const auto& k : all_poset_maps(src, eq.sub)) {
                bool match = true;
                for (int x = 0; x < src.size(); ++x)
                    if (eq.inclusion(k(x)) != h(x)) match = false;
                if (match) ++factorizations;
            }
            CHECK(factorizations == 1);
        }
    }
}

TEST_CASE("3-chain covers") {
    auto covers = hasse_covers(chain_poset(3));
    CHECK(covers == std::vector<std::pair<ElemId, ElemId>>{{0, 1}, {1, 2}});
}

TEST_CASE("diamond has four covers") { CHECK(hasse_covers(diamond_poset()).size() == 4); }

TEST_CASE("cover closure reproduces the order on every enumerated poset") {
    for (const auto& p : enumerate_bounded_posets(5)) {
        auto closure = reflexive_transitive_closure(p.size(), hasse_covers(p));
        CHECK(closure == p.matrix());
    }
}

TEST_CASE("enumeration counts at tiny sizes match the all-relations oracle") {
    // cumulative counts: 1, 2, 3, 5 for size bounds 1..4
    CHECK(oracle_bounded_poset_count(1) == 1);
    CHECK(oracle_bounded_poset_count(2) == 1);
    CHECK(oracle_bounded_poset_count(3) == 1);
    CHECK(oracle_bounded_poset_count(4) == 2);
    CHECK(enumerate_bounded_posets(1).size() == 1);
    CHECK(enumerate_bounded_posets(2).size() == 2);
    CHECK(enumerate_bounded_posets(3).size() == 3);
    CHECK(enumerate_bounded_posets(4).size() == 5);
}

TEST_CASE("enumeration counts per size through the default budget") {
    auto all = enumerate_bounded_posets(6);
    std::vector<int> per_size(7, 0);
    for (const auto& p : all) ++per_size[static_cast<size_t>(p.size())];
    CHECK(per_size[1] == 1);
    CHECK(per_size[2] == 1);
    CHECK(per_size[3] == 1);
    CHECK(per_size[4] == 2);
    CHECK(per_size[5] == 5);
    CHECK(per_size[6] == 16);
    CHECK(all.size() == 26);
}

TEST_CASE("enumerated posets validate, are pairwise non-isomorphic, and order deterministically") {
    auto all = enumerate_bounded_posets(5);
    for (const auto& p : all) {
        RawPoset raw;
        raw.size = p.size();
        raw.bottom = p.bottom();
        raw.top = p.top();
        for (int a = 0; a < p.size(); ++a)
            for (int b = 0; b < p.size(); ++b)
                if (p.leq(a, b)) raw.relation.emplace_back(a, b);
        CHECK(validate_bounded_poset(raw).pass());
    }
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            CHECK_FALSE(find_order_iso(all[i], all[j]).has_value());
    auto again = enumerate_bounded_posets(5);
    REQUIRE(again.size() == all.size());
    for (size_t i = 0; i < all.size(); ++i) CHECK(again[i].same_order(all[i]));
}

TEST_CASE("enumeration refuses beyond the size budget") {
    CHECK_THROWS_AS(enumerate_bounded_posets(7), BudgetExceeded);
    Budget loose;
    loose.max_enum_size = 7;
    CHECK(enumerate_bounded_posets(7, loose).size() == 26 + 63);
}

TEST_CASE("product is commutative and associative up to isomorphism") {
    auto posets = enumerate_bounded_posets(3);
    auto c2 = chain_poset(2), c3 = chain_poset(3), d = diamond_poset();
    CHECK(find_order_iso(product_poset(c2, c3).poset, product_poset(c3, c2).poset).has_value());
    CHECK(find_order_iso(product_poset(product_poset(c2, c3).poset, d).poset,
                         product_poset(c2, product_poset(c3, d).poset).poset)
              .has_value());
}

TEST_CASE("meet and join on the diamond") {
    auto d = diamond_poset();
    CHECK(poset_meet(d, 1, 2) == 0);
    CHECK(poset_join(d, 1, 2) == 3);
    CHECK(poset_meet(d, 1, 3) == 1);
}

TEST_CASE("meet can be missing") {
    // Two minimal-above-bottom elements with two incomparable upper bounds.
    RawPoset raw;
    raw.size = 6;
    raw.relation = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
                    {2, 3}, {2, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}};
    raw.bottom = 0;
    raw.top = 5;
    REQUIRE(validate_bounded_poset(raw).pass());
    auto p = poset_from_raw(raw);
    CHECK_FALSE(poset_join(p, 1, 2).has_value());
    CHECK_FALSE(poset_meet(p, 3, 4).has_value());
}

TEST_CASE("map counting") {
    CHECK(all_poset_maps(chain_poset(3), chain_poset(2)).size() == 2);
    CHECK(all_poset_maps(diamond_poset(), chain_poset(2)).size() == 4);
    for (const auto& f : all_poset_maps(diamond_poset(), diamond_poset()))
        CHECK(check_poset_map(f).pass());
}
