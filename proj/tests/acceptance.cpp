// End-to-end gate: eight suites, one verdict line each, exit 0 only if all
// pass. Each suite re-derives its expectations instead of trusting the
// module tests.
#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "ewb/effect_algebra.hpp"
#include "ewb/effect_monoid.hpp"
#include "ewb/enumerate.hpp"
#include "ewb/kalmbach.hpp"
#include "ewb/omega.hpp"
#include "ewb/ortho.hpp"
#include "ewb/poset.hpp"
#include "ewb/qinterval.hpp"

using namespace ewb;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

// 1. Every chain extension of a small poset is an orthomodular poset.
Verdict omp_laws_suite() {
    Verdict v;
    auto posets = enumerate_bounded_posets(5);
    for (const auto& p : posets) {
        Report r = check_omp(omp_of(kalmbach_extension(p)));
        v.require(r.pass(), "omp laws fail over a base of size " + std::to_string(p.size()));
    }
    v.detail = std::to_string(posets.size()) + " posets, zero violations";
    return v;
}

// 2. Extensions of chains are the Boolean algebras 2^(n-1).
Verdict chain_boolean_suite() {
    Verdict v;
    for (int n = 2; n <= 6; ++n) {
        auto k = kalmbach_extension(chain_poset(n));
        v.require(k.elements.size() == (1u << (n - 1)),
                  "chain_" + std::to_string(n) + " extension has size " +
                      std::to_string(k.elements.size()));
        v.require(find_omp_iso(omp_of(k), boolean_omp(n - 1)).has_value(),
                  "chain_" + std::to_string(n) + " extension is not Boolean");
    }
    if (v.ok) v.detail = "sizes 2,4,8,16,32 and Boolean via isomorphism search";
    return v;
}

// 3. The collapse action: unit law on all algebras of size <= 4, the
// multiplication square exhaustively below size 4 and under budget at 4,
// and the difference round trip a+b = 1-((1-a)-b) up to size 6.
Verdict action_suite() {
    Verdict v;
    int squares = 0, skipped = 0;
    for (const auto& e : enumerate_effect_algebras(4)) {
        BoundedPoset order = induced_order(e);
        KalmbachExtension k = kalmbach_extension(order);
        PosetMap act = algebra_action(e, k);
        v.require(compose(act, unit_embedding(order, k)).assign == identity_map(order).assign,
                  e.name + " action after unit is not the identity");
        try {
            KalmbachExtension kk = kalmbach_extension(k.poset);
            PosetMap k_act = kalmbach_map(act, kk, k);
            PosetMap mu = monad_mult(order, k, kk);
            v.require(compose(act, k_act).assign == compose(act, mu).assign,
                      e.name + " multiplication square does not commute");
            ++squares;
        } catch (const BudgetExceeded&) {
            ++skipped;
            v.require(e.size >= 4, e.name + " square must run exhaustively below size 4");
        }
    }
    v.require(squares > 0, "no multiplication square was verified");

    int roundtrips = 0;
    for (const auto& e : enumerate_effect_algebras(6)) {
        v.require(dposet_sum(e) == e.sum, e.name + " difference round trip changes the sum");
        ++roundtrips;
    }
    if (v.ok)
        v.detail = std::to_string(squares) + " squares verified, " + std::to_string(skipped) +
                   " budget-skipped, " + std::to_string(roundtrips) + " difference round trips";
    return v;
}

// 4. Free extension: every bound-preserving map from a poset of size <= 3
// into an orthomodular poset of size <= 6 factors uniquely.
Verdict free_extension_suite() {
    Verdict v;
    long triples = 0;
    for (const auto& p : enumerate_bounded_posets(3))
        for (const auto& a : enumerate_omps(6))
            for (const auto& f : all_poset_maps(p, a.poset)) {
                ++triples;
                FreeFactorization ff = free_factorization(f, a);
                v.require(check_omp_morphism(omp_of(ff.extension), a, ff.h).pass(),
                          "extension map is not an omp morphism");
                PosetMap unit = unit_embedding(p, ff.extension);
                bool commutes = true;
                for (int x = 0; x < p.size(); ++x)
                    if (ff.h[static_cast<size_t>(unit(x))] != f(x)) commutes = false;
                v.require(commutes, "h after unit disagrees with the original map");
                v.require(ff.unique_certified, "uniqueness search was not exhaustive");
            }
    if (v.ok) v.detail = std::to_string(triples) + " maps factored, each uniquely";
    return v;
}

// 5. Classification: every monoid up to size 6 is a power of {0,1}; the
// three-point algebra and the orthomodular hexagon admit no multiplication.
Verdict classification_suite() {
    Verdict v;
    CensusReport rep = census(6);
    v.require(rep.all_boolean, "a monoid of size <= 6 is not Boolean");
    v.require(rep.all_commutative, "a monoid of size <= 6 is not commutative");
    v.require(rep.counterexample.empty(), "census recorded a counterexample");
    v.require(em_structures_on(chain_effect_algebra(2)).empty(),
              "the three-point algebra admits a multiplication");
    v.require(em_structures_on(omp_to_ea(mo2_omp())).empty(),
              "the hexagon admits a multiplication");
    int monoids = 0;
    for (size_t s = 1; s < rep.em_count.size(); ++s) monoids += rep.em_count[s];
    if (v.ok)
        v.detail = std::to_string(monoids) + " monoids classified, all Boolean powers 2^k";
    return v;
}

// 6. The bound ladder: eleven strictly decreasing upper bounds, five hundred
// randomized bounds that each descend, and rung-by-rung containment.
Verdict no_least_bound_suite() {
    Verdict v;
    auto chains = no_lub_witness(10);
    v.require(chains.size() == 11, "witness list has " + std::to_string(chains.size()) +
                                       " chains instead of 11");
    for (size_t i = 0; i < chains.size(); ++i) {
        v.require(valid_rchain(chains[i]), "witness chain " + std::to_string(i) + " malformed");
        v.require(is_upper_bound_all(chains[i]),
                  "witness chain " + std::to_string(i) + " is not an upper bound");
        if (i + 1 < chains.size()) {
            v.require(rchain_leq(chains[i + 1], chains[i]) &&
                          !rchain_leq(chains[i], chains[i + 1]),
                      "witness chain " + std::to_string(i + 1) + " does not strictly descend");
        }
    }

    std::mt19937 rng(424243);
    std::uniform_int_distribution<int> steps_dist(0, 3);
    std::uniform_int_distribution<long long> den_dist(2, 60);
    int produced = 0, attempts = 0;
    while (produced < 500 && attempts < 200000) {
        ++attempts;
        RationalChain c;
        c.points = {UnitRational(0, 1), UnitRational(1, 1)};
        for (int i = steps_dist(rng); i > 0; --i) c = descend(c);
        long long d1 = den_dist(rng), d2 = den_dist(rng);
        c.points.push_back(UnitRational(1, std::max(d1, d2) + 1));
        c.points.push_back(UnitRational(1, std::min(d1, d2)));
        std::sort(c.points.begin(), c.points.end(),
                  [](const UnitRational& a, const UnitRational& b) { return a < b; });
        bool strict = true;
        for (size_t i = 0; i + 1 < c.points.size(); ++i)
            if (!(c.points[i] < c.points[i + 1])) strict = false;
        if (!strict || !is_upper_bound_all(c)) continue;
        ++produced;
        RationalChain below = descend(c);
        v.require(rchain_leq(below, c) && !rchain_leq(c, below),
                  "randomized descent is not strictly below");
        v.require(is_upper_bound_all(below), "randomized descent left the upper bounds");
    }
    v.require(produced == 500,
              "only " + std::to_string(produced) + " randomized bounds were produced");

    for (int n = 1; n <= 50; ++n)
        v.require(rchain_leq(s_chain(n), s_chain(n + 1)),
                  "rung " + std::to_string(n) + " does not sit under its successor");
    if (v.ok) v.detail = "11 witness chains, 500 randomized descents, 50 rung containments";
    return v;
}

// 7. Naturality at finite scale: suprema, constant embeddings, the product
// collapse mu with its unit eps, and distribution over differences.
Verdict naturality_suite() {
    Verdict v;
    auto eas = enumerate_effect_algebras(5);
    for (const auto& e : eas) {
        BoundedPoset order = induced_order(e);
        v.require(seq_functor(order).certified,
                  e.name + " sequence classes are not isomorphic to the base");
        v.require(compose(sup_map(e), const_embedding(order)).assign ==
                      identity_map(order).assign,
                  e.name + " supremum after constant embedding is not the identity");
    }
    long nat_maps = 0;
    for (const auto& src : eas)
        for (const auto& dst : eas) {
            BoundedPoset ps = induced_order(src), pt = induced_order(dst);
            for (const auto& f : all_poset_maps(ps, pt)) {
                ++nat_maps;
                v.require(check_omega_normal(src, dst, f.assign),
                          "a bound-preserving map fails to preserve suprema");
                PosetMap lhs = compose(sup_map(dst), seq_map(f));
                PosetMap rhs = compose(f, sup_map(src));
                v.require(lhs.assign == rhs.assign, "the supremum square does not commute");
            }
        }

    auto ems = enumerate_effect_monoids(5);
    for (const auto& m : ems) {
        const FinEffectAlgebra& e = m.ea;
        const int n = e.size;
        BoundedPoset order = induced_order(e);

        // P2 = order x order with the componentwise order; mu(a,b) = a*b.
        std::vector<uint8_t> leq2(static_cast<size_t>(n) * n * n * n, 0);
        auto pid = [n](ElemId a, ElemId b) { return a * n + b; };
        for (ElemId a1 = 0; a1 < n; ++a1)
            for (ElemId b1 = 0; b1 < n; ++b1)
                for (ElemId a2 = 0; a2 < n; ++a2)
                    for (ElemId b2 = 0; b2 < n; ++b2)
                        leq2[static_cast<size_t>(pid(a1, b1)) * n * n + pid(a2, b2)] =
                            order.leq(a1, a2) && order.leq(b1, b2);
        BoundedPoset p2(n * n, leq2, pid(e.zero, e.zero), pid(e.one, e.one));

        PosetMap mu{p2, order, {}};
        mu.assign.resize(static_cast<size_t>(n) * n);
        for (ElemId a = 0; a < n; ++a)
            for (ElemId b = 0; b < n; ++b)
                mu.assign[static_cast<size_t>(pid(a, b))] = m.times(a, b);
        PosetMap eps{order, p2, {}};
        eps.assign.resize(static_cast<size_t>(n));
        for (ElemId a = 0; a < n; ++a)
            eps.assign[static_cast<size_t>(a)] = a == e.zero ? pid(e.zero, e.zero)
                                                             : pid(a, e.one);
        v.require(check_poset_map(mu).pass(), m.ea.name + " collapse is not a poset map");
        v.require(check_poset_map(eps).pass(), m.ea.name + " unit pairing is not a poset map");
        v.require(compose(mu, eps).assign == identity_map(order).assign,
                  m.ea.name + " collapse after unit pairing is not the identity");

        // P3 = order^3; collapsing the left pair agrees with the right pair.
        std::vector<uint8_t> leq3(static_cast<size_t>(n) * n * n * n * n * n, 0);
        auto tid = [n](ElemId a, ElemId b, ElemId c) { return (a * n + b) * n + c; };
        for (ElemId a1 = 0; a1 < n; ++a1)
            for (ElemId b1 = 0; b1 < n; ++b1)
                for (ElemId c1 = 0; c1 < n; ++c1)
                    for (ElemId a2 = 0; a2 < n; ++a2)
                        for (ElemId b2 = 0; b2 < n; ++b2)
                            for (ElemId c2 = 0; c2 < n; ++c2)
                                leq3[static_cast<size_t>(tid(a1, b1, c1)) * n * n * n +
                                     tid(a2, b2, c2)] = order.leq(a1, a2) &&
                                                        order.leq(b1, b2) && order.leq(c1, c2);
        BoundedPoset p3(n * n * n, leq3, tid(e.zero, e.zero, e.zero), tid(e.one, e.one, e.one));
        PosetMap mul_left{p3, p2, {}}, mul_right{p3, p2, {}};
        mul_left.assign.resize(static_cast<size_t>(n) * n * n);
        mul_right.assign.resize(static_cast<size_t>(n) * n * n);
        for (ElemId a = 0; a < n; ++a)
            for (ElemId b = 0; b < n; ++b)
                for (ElemId c = 0; c < n; ++c) {
                    mul_left.assign[static_cast<size_t>(tid(a, b, c))] = pid(m.times(a, b), c);
                    mul_right.assign[static_cast<size_t>(tid(a, b, c))] = pid(a, m.times(b, c));
                }
        v.require(check_poset_map(mul_left).pass() && check_poset_map(mul_right).pass(),
                  m.ea.name + " pairwise collapses are not poset maps");
        v.require(compose(mu, mul_left).assign == compose(mu, mul_right).assign,
                  m.ea.name + " left and right collapse of triples disagree");

        // a*(c-b) = (a*c)-(a*b) whenever b <= c, via the unique differences.
        auto diff = [&](ElemId hi, ElemId lo) -> ElemId {
            for (ElemId d = 0; d < n; ++d)
                if (e.defined(lo, d) && e.add(lo, d) == hi) return d;
            return -1;
        };
        for (ElemId a = 0; a < n; ++a)
            for (ElemId b = 0; b < n; ++b)
                for (ElemId c = 0; c < n; ++c) {
                    if (!order.leq(b, c)) continue;
                    ElemId whole = diff(c, b);
                    ElemId parts = diff(m.times(a, c), m.times(a, b));
                    v.require(whole >= 0 && parts >= 0 && m.times(a, whole) == parts,
                              m.ea.name + " product does not distribute over a difference");
                }
        v.require(check_monoid_naturality(m).pass(),
                  m.ea.name + " fails the full equation suite");
    }
    if (v.ok)
        v.detail = std::to_string(eas.size()) + " algebras, " + std::to_string(nat_maps) +
                   " supremum squares, " + std::to_string(ems.size()) + " monoids";
    return v;
}

// 8. Determinism: byte-identical census and streams across runs and across
// one versus several worker threads, and against the serial reference.
Verdict determinism_suite() {
    Verdict v;
    int saved = omp_get_max_threads();

    std::string first = census(6).canonical_text();
    v.require(first == census(6).canonical_text(), "census differs between two runs");

    omp_set_num_threads(1);
    std::string single = census(6).canonical_text();
    omp_set_num_threads(saved > 1 ? saved : 3);
    std::string multi = census(6).canonical_text();
    omp_set_num_threads(saved);
    v.require(single == first, "census differs on one thread");
    v.require(multi == first, "census differs on several threads");

    auto key_stream = [](const std::vector<FinEffectAlgebra>& eas) {
        std::ostringstream s;
        for (const auto& e : eas)
            for (uint8_t b : canonical_ea_key(e)) s << static_cast<int>(b) << ",";
        return s.str();
    };
    std::string parallel = key_stream(enumerate_effect_algebras(6));
    v.require(parallel == key_stream(enumerate_effect_algebras(6)),
              "enumeration differs between two runs");
    v.require(parallel == key_stream(enumerate_effect_algebras_serial(6)),
              "parallel enumeration differs from the serial reference");
    if (v.ok) v.detail = "census and streams byte-identical, serial reference agrees";
    return v;
}

} // namespace

int main() {
    struct Suite {
        const char* name;
        Verdict (*run)();
    };
    const Suite suites[] = {
        {"orthomodular laws of chain extensions (posets up to 5)", omp_laws_suite},
        {"chain extensions are Boolean 2^(n-1) (n = 2..6)", chain_boolean_suite},
        {"collapse action laws and difference round trip", action_suite},
        {"unique free extension through the chain embedding", free_extension_suite},
        {"every small effect monoid is a Boolean power", classification_suite},
        {"upper bounds of the ladder have no least element", no_least_bound_suite},
        {"naturality of suprema, collapse, and differences", naturality_suite},
        {"deterministic census and enumeration streams", determinism_suite},
    };

    int failures = 0;
    int idx = 0;
    for (const auto& s : suites) {
        ++idx;
        Verdict v;
        try {
            v = s.run();
        } catch (const std::exception& e) {
            v.ok = false;
            v.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %d %s%s%s\n", v.ok ? "PASS" : "FAIL", idx, s.name,
                    v.detail.empty() ? "" : ": ", v.detail.c_str());
        if (!v.ok) ++failures;
    }
    if (failures) std::printf("%d of 8 suites failed\n", failures);
    return failures == 0 ? 0 : 1;
}
