#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ewb/effect_algebra.hpp"
#include "ewb/kalmbach.hpp"
#include "ewb/ortho.hpp"
#include "ewb/poset.hpp"

using namespace ewb;

namespace {

bool same_assign(const PosetMap& f, const PosetMap& g) { return f.assign == g.assign; }

} // namespace

TEST_CASE("chain order over a rational-valued grid of points") {
    // ids 0..4 stand for 0 < 1/4 < 1/3 < 1/2 < 1
    auto base = chain_poset(5);
    EvenChain s1{3, 4};          // [1/2 < 1]
    EvenChain s2{1, 2, 3, 4};    // [1/4 < 1/3 < 1/2 < 1]
    CHECK(chain_leq(s1, s2, base));
    CHECK_FALSE(chain_leq(s2, s1, base));
}

TEST_CASE("everything sits below the full interval") {
    auto d = diamond_poset();
    CHECK(chain_leq({0, 1}, {0, 3}, d));
    CHECK(chain_leq({0, 2}, {0, 3}, d));
    CHECK(chain_leq({}, {0, 3}, d));
}

TEST_CASE("shifted intervals of the 4-chain are incomparable") {
    auto c4 = chain_poset(4);
    CHECK_FALSE(chain_leq({1, 2}, {0, 1}, c4));
    CHECK_FALSE(chain_leq({0, 1}, {1, 2}, c4));
}

TEST_CASE("chain point validation") {
    auto c3 = chain_poset(3);
    CHECK(valid_even_chain({0, 2}, c3));
    CHECK_FALSE(valid_even_chain({0}, c3));
    CHECK_FALSE(valid_even_chain({2, 0}, c3));
    CHECK_THROWS_AS(chain_leq({0, 7}, {}, c3), MalformedInput);
}

TEST_CASE("complement is symmetric difference with the bounds") {
    auto c4 = chain_poset(4);
    CHECK(chain_perp({}, c4) == EvenChain{0, 3});
    CHECK(chain_perp({0, 1}, c4) == EvenChain{1, 3});
    CHECK(chain_perp({1, 2}, c4) == EvenChain{0, 1, 2, 3});
}

TEST_CASE("complement is an involution and reverses the order") {
    for (const auto& p : enumerate_bounded_posets(4)) {
        if (p.degenerate()) continue;
        auto k = kalmbach_extension(p);
        for (const auto& s : k.elements) {
            CHECK(chain_perp(chain_perp(s, p), p) == s);
            CHECK(valid_even_chain(chain_perp(s, p), p));
        }
        for (const auto& s : k.elements)
            for (const auto& t : k.elements)
                CHECK(chain_leq(s, t, p) == chain_leq(chain_perp(t, p), chain_perp(s, p), p));
    }
}

TEST_CASE("extension sizes at the smallest bases") {
    CHECK(kalmbach_extension(chain_poset(2)).elements.size() == 2);
    CHECK(kalmbach_extension(chain_poset(3)).elements.size() == 4);
    auto kd = kalmbach_extension(diamond_poset());
    REQUIRE(kd.elements.size() == 6);
    // 0,a,b,1 are ids 0,1,2,3; incomparability of a,b kills longer chains
    std::vector<EvenChain> expect{{}, {0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}};
    CHECK(kd.elements == expect);
}

TEST_CASE("extension is an orthocomplemented bounded poset with the stated bounds") {
    for (const auto& p : enumerate_bounded_posets(4)) {
        if (p.degenerate()) continue;
        auto k = kalmbach_extension(p);
        CHECK(k.elements[static_cast<size_t>(k.poset.bottom())].empty());
        CHECK(k.elements[static_cast<size_t>(k.poset.top())] == EvenChain{p.bottom(), p.top()});
        RawPoset raw;
        raw.size = k.poset.size();
        raw.bottom = k.poset.bottom();
        raw.top = k.poset.top();
        for (int i = 0; i < k.poset.size(); ++i)
            for (int j = 0; j < k.poset.size(); ++j)
                if (k.poset.leq(i, j)) raw.relation.emplace_back(i, j);
        CHECK(validate_bounded_poset(raw).pass());
        CHECK(check_omp(omp_of(k)).pass());
    }
}

TEST_CASE("degenerate base collapses to the single empty chain") {
    BoundedPoset one(1, {1}, 0, 0);
    auto k = kalmbach_extension(one);
    CHECK(k.degenerate);
    CHECK(k.elements.size() == 1);
    CHECK(k.elements[0].empty());
}

TEST_CASE("chain counting matches the powers of two on chains") {
    for (int n = 2; n <= 6; ++n)
        CHECK(count_even_chains(chain_poset(n)) == (1ull << (n - 1)));
}

TEST_CASE("budget refusal reports the computed count") {
    Budget tight;
    tight.max_chains = 3;
    try {
        kalmbach_extension(chain_poset(3), tight);
        FAIL("expected refusal");
    } catch (const BudgetExceeded& e) {
        CHECK(e.estimate == 4);
    }
}

TEST_CASE("extensions of chains are Boolean") {
    for (int n = 2; n <= 5; ++n) {
        auto k = kalmbach_extension(chain_poset(n));
        REQUIRE(k.elements.size() == (1u << (n - 1)));
        CHECK(find_omp_iso(omp_of(k), boolean_omp(n - 1)).has_value());
    }
}

TEST_CASE("map action collapses and cancels interval endpoints") {
    auto c3 = chain_poset(3), c2 = chain_poset(2);
    auto k3 = kalmbach_extension(c3), k2 = kalmbach_extension(c2);
    PosetMap f{c3, c2, {0, 0, 1}};
    auto kf = kalmbach_map(f, k3, k2);
    CHECK(kf(k3.id_of({0, 1})) == k2.id_of({}));     // both endpoints land on 0
    CHECK(kf(k3.id_of({1, 2})) == k2.id_of({0, 1})); // 0 and 1 survive
    CHECK(kf(k3.id_of({0, 2})) == k2.id_of({0, 1}));
    CHECK(check_poset_map(kf).pass());
    CHECK(check_omp_morphism(omp_of(k3), omp_of(k2), kf.assign).pass());
}

TEST_CASE("functor laws on all small map pairs") {
    auto posets = enumerate_bounded_posets(3);
    for (const auto& p : posets) {
        if (p.degenerate()) continue;
        auto kp = kalmbach_extension(p);
        auto kid = kalmbach_map(identity_map(p), kp, kp);
        CHECK(same_assign(kid, identity_map(kp.poset)));
    }
    for (const auto& p : posets)
        for (const auto& q : posets)
            for (const auto& r : posets) {
                if (p.degenerate() || q.degenerate() || r.degenerate()) continue;
                auto kp = kalmbach_extension(p), kq = kalmbach_extension(q),
                     kr = kalmbach_extension(r);
                for (const auto& f : all_poset_maps(p, q))
                    for (const auto& g : all_poset_maps(q, r)) {
                        auto lhs = kalmbach_map(compose(g, f), kp, kr);
                        auto rhs = compose(kalmbach_map(g, kq, kr), kalmbach_map(f, kp, kq));
                        CHECK(same_assign(lhs, rhs));
                    }
            }
}

TEST_CASE("unit embedding formula and order-embedding property") {
    auto c3 = chain_poset(3);
    auto k = kalmbach_extension(c3);
    auto unit = unit_embedding(c3, k);
    CHECK(unit(0) == k.id_of({}));
    CHECK(unit(1) == k.id_of({0, 1}));
    CHECK(unit(2) == k.id_of({0, 2}));
    CHECK(k.poset.leq(unit(1), unit(2)));
    CHECK(check_poset_map(unit).pass());

    for (const auto& p : enumerate_bounded_posets(4)) {
        if (p.degenerate()) continue;
        auto kp = kalmbach_extension(p);
        auto u = unit_embedding(p, kp);
        CHECK(check_poset_map(u).pass());
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y)
                CHECK(p.leq(x, y) == kp.poset.leq(u(x), u(y)));
    }
}

TEST_CASE("collapse of the double extension obeys the monad laws") {
    for (int n = 2; n <= 3; ++n) {
        auto p = chain_poset(n);
        auto kp = kalmbach_extension(p);
        auto kkp = kalmbach_extension(kp.poset);
        auto mu = monad_mult(p, kp, kkp);
        CHECK(check_poset_map(mu).pass());

        auto left = compose(mu, unit_embedding(kp.poset, kkp));
        CHECK(same_assign(left, identity_map(kp.poset)));

        auto right = compose(mu, kalmbach_map(unit_embedding(p, kp), kp, kkp));
        CHECK(same_assign(right, identity_map(kp.poset)));

        auto kkkp = kalmbach_extension(kkp.poset);
        auto mu_k = monad_mult(kp.poset, kkp, kkkp);
        auto k_mu = kalmbach_map(mu, kkkp, kkp);
        CHECK(same_assign(compose(mu, k_mu), compose(mu, mu_k)));
    }
}

TEST_CASE("two-element base forces the unique collapse") {
    auto p = chain_poset(2);
    auto kp = kalmbach_extension(p);
    auto kkp = kalmbach_extension(kp.poset);
    REQUIRE(kkp.elements.size() == 2);
    auto mu = monad_mult(p, kp, kkp);
    CHECK(mu.assign == std::vector<ElemId>{0, kp.poset.top()});
}

TEST_CASE("labels read as interval chains") {
    auto c3 = chain_poset(3);
    auto k = kalmbach_extension(c3);
    CHECK(chain_label({}, c3) == "[]");
    CHECK(chain_label({0, 2}, c3) == "[e0<e2]");
    CHECK(k.poset.label(k.poset.bottom()) == "[]");
}
