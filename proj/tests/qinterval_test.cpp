#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ewb/qinterval.hpp"

using namespace ewb;

namespace {

UnitRational q(long long n, long long d) { return UnitRational(n, d); }

RationalChain chain_of(std::vector<UnitRational> pts) {
    RationalChain c;
    c.points = std::move(pts);
    return c;
}

} // namespace

TEST_CASE("exact arithmetic on the unit interval") {
    CHECK(*q_sum(q(1, 3), q(1, 3)) == q(2, 3));
    CHECK(q_perp(q(3, 4)) == q(1, 4));
    CHECK(q_mul(q(2, 3), q(3, 4)) == q(1, 2));
    CHECK_FALSE(q_sum(q(3, 4), q(3, 4)).has_value());
    CHECK(q(2, 4) == q(1, 2)); // canonical lowest terms
    CHECK(q(1, 2).str() == "1/2");
    CHECK(q(0, 5).str() == "0");
    CHECK(q(3, 3).str() == "1");
}

TEST_CASE("values outside the interval are rejected") {
    CHECK_THROWS_AS(q(3, 2), MalformedInput);
    CHECK_THROWS_AS(q(-1, 2), MalformedInput);
    CHECK_THROWS_AS(q(1, 0), MalformedInput);
}

TEST_CASE("difference recovers the sum the long way round") {
    // 1 - ((1 - a) - b) = a + b whenever a + b <= 1
    UnitRational a = q(1, 3), b = q(1, 3);
    auto inner = q_diff(q_perp(a), b);
    REQUIRE(inner.has_value());
    CHECK(q_perp(*inner) == *q_sum(a, b));

    // and when a + b escapes, the inner difference is already undefined
    CHECK_FALSE(q_diff(q_perp(q(3, 4)), q(3, 4)).has_value());
}

TEST_CASE("multiplication distributes over difference, exactly") {
    // (1/2)(3/4 - 1/4) = 1/4 = (1/2)(3/4) - (1/2)(1/4)
    auto d = q_diff(q(3, 4), q(1, 4));
    REQUIRE(d.has_value());
    CHECK(q_mul(q(1, 2), *d) == q(1, 4));
    auto rhs = q_diff(q_mul(q(1, 2), q(3, 4)), q_mul(q(1, 2), q(1, 4)));
    REQUIRE(rhs.has_value());
    CHECK(*rhs == q(1, 4));
}

TEST_CASE("the ladder chains have the stated points and lengths") {
    RationalChain s1 = s_chain(1);
    CHECK(s1.points == std::vector<UnitRational>{q(1, 2), q(1, 1)});
    RationalChain s2 = s_chain(2);
    CHECK(s2.points == std::vector<UnitRational>{q(1, 4), q(1, 3), q(1, 2), q(1, 1)});
    CHECK(s_chain(5).points.size() == 10);
    CHECK_THROWS_AS(s_chain(0), MalformedInput);
}

TEST_CASE("ladder rungs ascend and containment is exact") {
    CHECK(rchain_leq(s_chain(1), s_chain(2)));
    for (int n = 1; n <= 50; ++n) CHECK(rchain_leq(s_chain(n), s_chain(n + 1)));
    CHECK_FALSE(rchain_leq(chain_of({q(1, 4), q(1, 1)}), chain_of({q(1, 2), q(1, 1)})));
    CHECK(rchain_leq(chain_of({}), s_chain(3)));
    CHECK(rchain_leq(s_chain(7), s_chain(7)));
}

TEST_CASE("upper-bound decision: the top, a floating start, a punctured cover") {
    CHECK(is_upper_bound_all(chain_of({q(0, 1), q(1, 1)})));
    CHECK_FALSE(is_upper_bound_all(chain_of({q(1, 4), q(1, 1)})));
    // [0,1/5) u [1/2,1) misses the rung [1/4,1/3)
    CHECK_FALSE(is_upper_bound_all(chain_of({q(0, 1), q(1, 5), q(1, 2), q(1, 1)})));
    CHECK(is_upper_bound_all(chain_of({q(0, 1), q(1, 3), q(1, 2), q(1, 1)})));
    CHECK_FALSE(is_upper_bound_all(chain_of({})));
}

TEST_CASE("the decision procedure agrees with rung-by-rung containment") {
    std::vector<RationalChain> yes = no_lub_witness(5);
    for (const auto& c : yes) {
        REQUIRE(is_upper_bound_all(c));
        for (int n = 1; n <= 100; ++n) CHECK(rchain_leq(s_chain(n), c));
    }
    std::vector<RationalChain> no = {
        chain_of({q(1, 4), q(1, 1)}),
        chain_of({q(0, 1), q(1, 5), q(1, 2), q(1, 1)}),
    };
    for (const auto& c : no) {
        REQUIRE_FALSE(is_upper_bound_all(c));
        bool some_rung_escapes = false;
        for (int n = 1; n <= 100 && !some_rung_escapes; ++n)
            if (!rchain_leq(s_chain(n), c)) some_rung_escapes = true;
        CHECK(some_rung_escapes);
    }
}

TEST_CASE("descending from the top splits off the stated points") {
    RationalChain top = chain_of({q(0, 1), q(1, 1)});
    RationalChain d1 = descend(top);
    CHECK(d1.points == std::vector<UnitRational>{q(0, 1), q(1, 3), q(1, 2), q(1, 1)});
    RationalChain d2 = descend(d1);
    CHECK(d2.points ==
          std::vector<UnitRational>{q(0, 1), q(1, 5), q(1, 4), q(1, 3), q(1, 2), q(1, 1)});
}

TEST_CASE("descending from a non-upper-bound is refused") {
    CHECK_THROWS_AS(descend(chain_of({q(1, 4), q(1, 1)})), PreconditionFailure);
}

TEST_CASE("the witness list descends strictly forever, two points a step") {
    auto chains = no_lub_witness(3);
    REQUIRE(chains.size() == 4);
    std::vector<size_t> lengths = {2, 4, 6, 8};
    std::set<std::string> seen;
    for (size_t i = 0; i < chains.size(); ++i) {
        CHECK(chains[i].points.size() == lengths[i]);
        CHECK(is_upper_bound_all(chains[i]));
        seen.insert(rchain_text(chains[i]));
    }
    CHECK(seen.size() == 4);
    for (size_t i = 0; i + 1 < chains.size(); ++i) {
        CHECK(rchain_leq(chains[i + 1], chains[i]));
        CHECK(chains[i + 1].points != chains[i].points);
    }
}

TEST_CASE("chain rendering") {
    CHECK(rchain_text(s_chain(2)) == "[1/4 < 1/3 < 1/2 < 1]");
    CHECK(rchain_text(chain_of({})) == "[]");
}

TEST_CASE("randomized upper bounds all admit a strict descent") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> steps_dist(0, 3);
    std::uniform_int_distribution<long long> den_dist(2, 60);
    int produced = 0;
    int attempts = 0;
    while (produced < 120 && attempts < 20000) {
        ++attempts;
        RationalChain c = chain_of({q(0, 1), q(1, 1)});
        int pre = steps_dist(rng);
        for (int i = 0; i < pre; ++i) c = descend(c);
        // drop a random extra gap into a random interval, keep only if the
        // result still covers every rung
        long long d1 = den_dist(rng), d2 = den_dist(rng);
        UnitRational x(1, std::max(d1, d2) + 1);
        UnitRational y(1, std::min(d1, d2));
        RationalChain cand = c;
        cand.points.push_back(x);
        cand.points.push_back(y);
        std::sort(cand.points.begin(), cand.points.end(),
                  [](const UnitRational& a, const UnitRational& b) { return a < b; });
        bool strict = true;
        for (size_t i = 0; i + 1 < cand.points.size(); ++i)
            if (!(cand.points[i] < cand.points[i + 1])) strict = false;
        if (!strict || !is_upper_bound_all(cand)) continue;
        ++produced;
        RationalChain below = descend(cand);
        CHECK(rchain_leq(below, cand));
        CHECK(below.points != cand.points);
        CHECK(is_upper_bound_all(below));
    }
    CHECK(produced == 120);
}

TEST_CASE("squaring fixes only the endpoints among small denominators") {
    int fixed = 0;
    for (long long den = 1; den <= 20; ++den)
        for (long long num = 0; num <= den; ++num) {
            if (std::gcd(num, den) != 1) continue;
            UnitRational a(num, den);
            if (q_mul(a, a) == a) ++fixed;
        }
    CHECK(fixed == 2);
}

TEST_CASE("algebra laws hold on randomized exact triples") {
    std::mt19937 rng(987654321);
    std::uniform_int_distribution<long long> den_dist(1, 48);
    auto draw = [&]() {
        long long d = den_dist(rng);
        std::uniform_int_distribution<long long> num_dist(0, d);
        return UnitRational(num_dist(rng), d);
    };
    for (int trial = 0; trial < 2000; ++trial) {
        UnitRational a = draw(), b = draw(), c = draw();
        // commutativity with symmetric definedness
        auto ab = q_sum(a, b), ba = q_sum(b, a);
        CHECK(ab.has_value() == ba.has_value());
        if (ab) CHECK(*ab == *ba);
        // conditional associativity
        auto bc = q_sum(b, c);
        if (bc) {
            auto a_bc = q_sum(a, *bc);
            if (a_bc) {
                REQUIRE(ab.has_value());
                auto ab_c = q_sum(*ab, c);
                REQUIRE(ab_c.has_value());
                CHECK(*a_bc == *ab_c);
            }
        }
        // the complement is the unique partner summing to 1
        auto to_one = q_sum(a, q_perp(a));
        REQUIRE(to_one.has_value());
        CHECK(*to_one == UnitRational(1, 1));
        if (ab && *ab == UnitRational(1, 1)) CHECK(b == q_perp(a));
        // positivity
        if (ab && *ab == UnitRational(0, 1)) {
            CHECK(a == UnitRational(0, 1));
            CHECK(b == UnitRational(0, 1));
        }
        // unit and annihilator for multiplication
        CHECK(q_mul(a, UnitRational(1, 1)) == a);
        CHECK(q_mul(a, UnitRational(0, 1)) == UnitRational(0, 1));
        // multiplication distributes over defined sums on both sides
        if (bc) {
            CHECK(q_mul(a, *bc) == *q_sum(q_mul(a, b), q_mul(a, c)));
            CHECK(q_mul(*bc, a) == *q_sum(q_mul(b, a), q_mul(c, a)));
        }
    }
}
