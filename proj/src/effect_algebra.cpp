#include "ewb/effect_algebra.hpp"

#include <algorithm>
#include <numeric>

namespace ewb {

namespace {

void require_tables(const FinEffectAlgebra& e) {
    const int n = e.size;
    if (n < 1) throw MalformedInput("effect algebra size must be >= 1");
    if (e.sum.size() != static_cast<size_t>(n) * n) throw MalformedInput("sum table size mismatch");
    for (int16_t v : e.sum)
        if (v < -1 || v >= n) throw MalformedInput("sum entry out of range");
    if (e.perp.size() != static_cast<size_t>(n)) throw MalformedInput("perp table size mismatch");
    for (ElemId v : e.perp)
        if (v < 0 || v >= n) throw MalformedInput("perp entry out of range");
    if (e.zero < 0 || e.zero >= n || e.one < 0 || e.one >= n)
        throw MalformedInput("zero/one out of range");
    if (n > 1 && e.zero == e.one) throw MalformedInput("zero equals one on a multi-point carrier");
}

// a <= b iff some c has a+c = b
std::vector<uint8_t> derived_leq(const FinEffectAlgebra& e) {
    const int n = e.size;
    std::vector<uint8_t> r(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c)
            if (e.defined(a, c)) r[static_cast<size_t>(a) * n + e.add(a, c)] = 1;
    return r;
}

} // namespace

Report check_effect_algebra(const FinEffectAlgebra& e) {
    require_tables(e);
    const int n = e.size;
    Report rep{e.name, {}};

    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            if (e.defined(a, b) != e.defined(b, a)) {
                rep.fail("commutativity", {a, b}, "definedness is one-sided");
                continue;
            }
            if (e.defined(a, b) && e.add(a, b) != e.add(b, a)) rep.fail("commutativity", {a, b});
        }
    for (int a = 0; a < n; ++a) {
        if (!e.defined(a, e.zero))
            rep.fail("zero", {a}, "sum with zero undefined");
        else if (e.add(a, e.zero) != a)
            rep.fail("zero", {a});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (!e.defined(b, c) || !e.defined(a, e.add(b, c))) continue;
                if (!e.defined(a, b) || !e.defined(e.add(a, b), c)) {
                    rep.fail("associativity", {a, b, c}, "left association undefined");
                    continue;
                }
                if (e.add(a, e.add(b, c)) != e.add(e.add(a, b), c))
                    rep.fail("associativity", {a, b, c});
            }
    for (int a = 0; a < n; ++a) {
        std::vector<ElemId> comps;
        for (int b = 0; b < n; ++b)
            if (e.defined(a, b) && e.add(a, b) == e.one) comps.push_back(b);
        if (comps.empty())
            rep.fail("unique-complement", {a}, "no complement");
        else if (comps.size() > 1)
            rep.fail("unique-complement", {a, comps[0], comps[1]}, "multiple complements");
        else if (e.comp(a) != comps[0])
            rep.fail("unique-complement", {a, e.comp(a), comps[0]}, "perp table disagrees");
    }
    for (int a = 0; a < n; ++a)
        if (e.defined(a, e.one) && a != e.zero) rep.fail("positivity", {a}, "if a⊥1 then a=0");

    auto r = derived_leq(e);
    auto leq = [&](ElemId a, ElemId b) { return r[static_cast<size_t>(a) * n + b] != 0; };
    for (int a = 0; a < n; ++a)
        if (!leq(a, a)) rep.fail("derived-order", {a}, "not reflexive");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a < b && leq(a, b) && leq(b, a)) rep.fail("derived-order", {a, b}, "not antisymmetric");
            if (!leq(a, b)) continue;
            for (int c = 0; c < n; ++c)
                if (leq(b, c) && !leq(a, c)) rep.fail("derived-order", {a, b, c}, "not transitive");
        }
    for (int a = 0; a < n; ++a) {
        if (!leq(e.zero, a)) rep.fail("derived-order", {e.zero, a}, "zero not minimum");
        if (!leq(a, e.one)) rep.fail("derived-order", {a, e.one}, "one not maximum");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (e.defined(a, b) != leq(a, e.comp(b))) rep.fail("orthogonality", {a, b});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!leq(a, b)) continue;
            int count = 0;
            for (int c = 0; c < n; ++c)
                if (e.defined(a, c) && e.add(a, c) == b) ++count;
            if (count != 1) rep.fail("unique-difference", {a, b});
        }
    for (int a = 0; a < n; ++a)
        if (e.comp(e.comp(a)) != a) rep.fail("perp-involution", {a});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (leq(a, b) != leq(e.comp(b), e.comp(a))) rep.fail("perp-antitone", {a, b});
    return rep;
}

BoundedPoset induced_order(const FinEffectAlgebra& e) {
    require_tables(e);
    RawPoset raw;
    raw.name = e.name;
    raw.size = e.size;
    raw.bottom = e.zero;
    raw.top = e.one;
    auto r = derived_leq(e);
    for (int a = 0; a < e.size; ++a)
        for (int b = 0; b < e.size; ++b)
            if (r[static_cast<size_t>(a) * e.size + b]) raw.relation.emplace_back(a, b);
    return poset_from_raw(raw);
}

std::optional<ElemId> ominus(const FinEffectAlgebra& e, ElemId b, ElemId a) {
    require_tables(e);
    for (int c = 0; c < e.size; ++c)
        if (e.defined(a, c) && e.add(a, c) == b) return c;
    return std::nullopt;
}

Report check_ea_hom(const FinEffectAlgebra& src, const FinEffectAlgebra& dst,
                    const std::vector<ElemId>& assign) {
    require_tables(src);
    require_tables(dst);
    if (assign.size() != static_cast<size_t>(src.size))
        throw MalformedInput("assignment length mismatch");
    for (ElemId y : assign)
        if (y < 0 || y >= dst.size) throw MalformedInput("assignment value out of range");
    auto f = [&](ElemId x) { return assign[static_cast<size_t>(x)]; };

    Report rep{"ea-hom", {}};
    if (f(src.one) != dst.one) rep.fail("one-preserved", {src.one});
    for (int a = 0; a < src.size; ++a)
        for (int b = 0; b < src.size; ++b) {
            if (!src.defined(a, b)) continue;
            if (!dst.defined(f(a), f(b))) {
                rep.fail("additive", {a, b}, "image sum undefined");
                continue;
            }
            if (f(src.add(a, b)) != dst.add(f(a), f(b))) rep.fail("additive", {a, b});
        }
    if (f(src.zero) != dst.zero) rep.fail("zero-preserved", {src.zero});
    for (int a = 0; a < src.size; ++a)
        if (f(src.comp(a)) != dst.comp(f(a))) rep.fail("perp-preserved", {a});
    return rep;
}

EaProduct ea_product(const FinEffectAlgebra& e, const FinEffectAlgebra& f) {
    require_tables(e);
    require_tables(f);
    const int ne = e.size, nf = f.size, n = ne * nf;
    auto id_of = [&](ElemId a, ElemId b) { return a * nf + b; };

    FinEffectAlgebra prod;
    prod.size = n;
    prod.zero = id_of(e.zero, f.zero);
    prod.one = id_of(e.one, f.one);
    prod.sum.assign(static_cast<size_t>(n) * n, -1);
    prod.perp.resize(static_cast<size_t>(n));
    prod.name = e.name + "*" + f.name;

    EaProduct out;
    out.pairs.resize(static_cast<size_t>(n));
    out.proj_left.resize(static_cast<size_t>(n));
    out.proj_right.resize(static_cast<size_t>(n));
    for (int a = 0; a < ne; ++a)
        for (int b = 0; b < nf; ++b) {
            ElemId x = id_of(a, b);
            out.pairs[static_cast<size_t>(x)] = {a, b};
            out.proj_left[static_cast<size_t>(x)] = a;
            out.proj_right[static_cast<size_t>(x)] = b;
            prod.perp[static_cast<size_t>(x)] = id_of(e.comp(a), f.comp(b));
            for (int c = 0; c < ne; ++c)
                for (int d = 0; d < nf; ++d)
                    if (e.defined(a, c) && f.defined(b, d))
                        prod.sum[static_cast<size_t>(x) * n + id_of(c, d)] =
                            static_cast<int16_t>(id_of(e.add(a, c), f.add(b, d)));
        }
    out.ea = std::move(prod);
    return out;
}

EaEqualizer ea_equalizer(const FinEffectAlgebra& src, const FinEffectAlgebra& dst,
                         const std::vector<ElemId>& f, const std::vector<ElemId>& g) {
    require_tables(src);
    require_tables(dst);
    if (f.size() != static_cast<size_t>(src.size) || g.size() != static_cast<size_t>(src.size))
        throw MalformedInput("assignment length mismatch");

    std::vector<ElemId> members;
    std::vector<ElemId> index(static_cast<size_t>(src.size), -1);
    for (int x = 0; x < src.size; ++x)
        if (f[static_cast<size_t>(x)] == g[static_cast<size_t>(x)]) {
            index[static_cast<size_t>(x)] = static_cast<ElemId>(members.size());
            members.push_back(x);
        }
    auto member_index = [&](ElemId x, const char* what) {
        if (index[static_cast<size_t>(x)] < 0)
            throw PreconditionFailure(std::string("ea_equalizer: agreement set not closed under ") +
                                      what + "; are both assignments homomorphisms?");
        return index[static_cast<size_t>(x)];
    };

    const int m = static_cast<int>(members.size());
    FinEffectAlgebra sub;
    sub.size = m;
    sub.name = src.name + "|eq";
    sub.zero = member_index(src.zero, "bounds");
    sub.one = member_index(src.one, "bounds");
    sub.sum.assign(static_cast<size_t>(m) * m, -1);
    sub.perp.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        sub.perp[static_cast<size_t>(i)] = member_index(src.comp(members[static_cast<size_t>(i)]), "complement");
        for (int j = 0; j < m; ++j) {
            ElemId a = members[static_cast<size_t>(i)], b = members[static_cast<size_t>(j)];
            if (src.defined(a, b))
                sub.sum[static_cast<size_t>(i) * m + j] =
                    static_cast<int16_t>(member_index(src.add(a, b), "addition"));
        }
    }
    return EaEqualizer{std::move(sub), std::move(members)};
}

FinEffectAlgebra omp_to_ea(const OrthoPoset& a) {
    const int n = a.poset.size();
    if (a.perp.size() != static_cast<size_t>(n))
        throw MalformedInput("perp table length does not match carrier size");
    FinEffectAlgebra e;
    e.size = n;
    e.zero = a.poset.bottom();
    e.one = a.poset.top();
    e.perp = a.perp;
    e.name = a.name;
    e.sum.assign(static_cast<size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!a.orthogonal(x, y)) continue;
            auto j = poset_join(a.poset, x, y);
            if (!j)
                throw PreconditionFailure("omp_to_ea: orthogonal join missing; run check_omp first");
            e.sum[static_cast<size_t>(x) * n + y] = static_cast<int16_t>(*j);
        }
    return e;
}

PosetMap algebra_action(const FinEffectAlgebra& e, const KalmbachExtension& k) {
    BoundedPoset order = induced_order(e);
    if (!k.base.same_order(order))
        throw PreconditionFailure("algebra_action: extension not built over this algebra's order");
    std::vector<ElemId> assign;
    assign.reserve(k.elements.size());
    for (const auto& s : k.elements) {
        ElemId acc = e.zero;
        for (size_t i = 0; i + 1 < s.size(); i += 2) {
            auto d = ominus(e, s[i + 1], s[i]);
            if (!d) throw PreconditionFailure("algebra_action: interval difference undefined");
            if (!e.defined(acc, *d))
                throw PreconditionFailure("algebra_action: interval sum undefined");
            acc = e.add(acc, *d);
        }
        assign.push_back(acc);
    }
    return PosetMap{k.poset, order, std::move(assign)};
}

std::vector<int16_t> dposet_sum(const FinEffectAlgebra& e) {
    require_tables(e);
    const int n = e.size;
    std::vector<int16_t> table(static_cast<size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a) {
        auto na = ominus(e, e.one, a); // 1 - a
        if (!na) continue;
        for (int b = 0; b < n; ++b) {
            auto d = ominus(e, *na, b); // (1 - a) - b
            if (!d) continue;
            auto s = ominus(e, e.one, *d);
            if (s) table[static_cast<size_t>(a) * n + b] = static_cast<int16_t>(*s);
        }
    }
    return table;
}

FreeFactorization free_factorization(const PosetMap& f, const OrthoPoset& a, const Budget& budget) {
    if (!f.target.same_order(a.poset))
        throw PreconditionFailure("free_factorization: map target is not the given structure");

    FreeFactorization out;
    out.extension = kalmbach_extension(f.source, budget);
    KalmbachExtension ka = kalmbach_extension(a.poset, budget);
    PosetMap act = algebra_action(omp_to_ea(a), ka);
    PosetMap kf = kalmbach_map(f, out.extension, ka);
    out.h.resize(out.extension.elements.size());
    for (size_t i = 0; i < out.h.size(); ++i)
        out.h[i] = act(kf(static_cast<ElemId>(i)));

    // pin the embedded copy of the source, then search the rest exhaustively
    PosetMap unit = unit_embedding(f.source, out.extension);
    const int nk = out.extension.poset.size();
    std::vector<ElemId> pinned(static_cast<size_t>(nk), -1);
    for (int x = 0; x < f.source.size(); ++x) {
        ElemId at = unit(x);
        if (pinned[static_cast<size_t>(at)] >= 0 && pinned[static_cast<size_t>(at)] != f(x))
            return out; // source map conflicts with itself on the embedding; nothing to certify
        pinned[static_cast<size_t>(at)] = f(x);
    }
    std::vector<int> free_slots;
    for (int i = 0; i < nk; ++i)
        if (pinned[static_cast<size_t>(i)] < 0) free_slots.push_back(i);

    unsigned long long space = 1;
    for (size_t i = 0; i < free_slots.size(); ++i) {
        if (space > budget.max_search / static_cast<unsigned long long>(a.poset.size()))
            return out; // too large to certify
        space *= static_cast<unsigned long long>(a.poset.size());
    }

    OrthoPoset komp = omp_of(out.extension);
    std::vector<ElemId> cand = pinned;
    unsigned long long matches = 0;
    bool matches_h = false;
    auto rec = [&](auto&& self, size_t slot) -> void {
        if (slot == free_slots.size()) {
            ++out.searched;
            if (!check_omp_morphism(komp, a, cand).pass()) return;
            ++matches;
            if (cand == out.h) matches_h = true;
            return;
        }
        for (int y = 0; y < a.poset.size(); ++y) {
            cand[static_cast<size_t>(free_slots[slot])] = y;
            self(self, slot + 1);
        }
        cand[static_cast<size_t>(free_slots[slot])] = -1;
    };
    rec(rec, 0);
    out.unique_certified = (matches == 1 && matches_h);
    return out;
}

std::optional<std::vector<ElemId>> find_ea_iso(const FinEffectAlgebra& e, const FinEffectAlgebra& f) {
    require_tables(e);
    require_tables(f);
    const int n = e.size;
    if (n != f.size) return std::nullopt;
    if (n == 1) return std::vector<ElemId>{0};

    auto row_profile = [](const FinEffectAlgebra& x) {
        std::vector<int> prof(static_cast<size_t>(x.size), 0);
        for (int a = 0; a < x.size; ++a)
            for (int b = 0; b < x.size; ++b)
                if (x.defined(a, b)) ++prof[static_cast<size_t>(a)];
        return prof;
    };
    auto pe = row_profile(e), pf = row_profile(f);
    {
        auto se = pe, sf = pf;
        std::sort(se.begin(), se.end());
        std::sort(sf.begin(), sf.end());
        if (se != sf) return std::nullopt;
    }

    std::vector<ElemId> assign(static_cast<size_t>(n), -1);
    std::vector<uint8_t> used(static_cast<size_t>(n), 0);
    auto consistent = [&](int x, int y) {
        if (pe[static_cast<size_t>(x)] != pf[static_cast<size_t>(y)]) return false;
        for (int z = 0; z < n; ++z) {
            if (assign[static_cast<size_t>(z)] < 0) continue;
            ElemId w = assign[static_cast<size_t>(z)];
            if (e.defined(x, z) != f.defined(y, w)) return false;
            if (e.defined(x, z)) {
                ElemId s = e.add(x, z), t = f.add(y, w);
                if (assign[static_cast<size_t>(s)] >= 0 && assign[static_cast<size_t>(s)] != t)
                    return false;
            }
            if (e.comp(x) == z && f.comp(y) != w) return false;
            if (e.comp(x) != z && f.comp(y) == w) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int x) -> bool {
        while (x < n && assign[static_cast<size_t>(x)] >= 0) ++x;
        if (x == n) {
            // full table check: partial consistency above skips unassigned sums
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    if (!e.defined(p, q)) continue;
                    if (f.add(assign[static_cast<size_t>(p)], assign[static_cast<size_t>(q)]) !=
                        assign[static_cast<size_t>(e.add(p, q))])
                        return false;
                }
            return true;
        }
        for (int y = 0; y < n; ++y) {
            if (used[static_cast<size_t>(y)] || !consistent(x, y)) continue;
            assign[static_cast<size_t>(x)] = y;
            used[static_cast<size_t>(y)] = 1;
            if (self(self, x + 1)) return true;
            assign[static_cast<size_t>(x)] = -1;
            used[static_cast<size_t>(y)] = 0;
        }
        return false;
    };
    assign[static_cast<size_t>(e.zero)] = f.zero;
    used[static_cast<size_t>(f.zero)] = 1;
    if (used[static_cast<size_t>(f.one)]) return std::nullopt;
    assign[static_cast<size_t>(e.one)] = f.one;
    used[static_cast<size_t>(f.one)] = 1;
    if (!rec(rec, 0)) return std::nullopt;
    return assign;
}

std::vector<uint8_t> canonical_ea_key(const FinEffectAlgebra& e) {
    require_tables(e);
    const int n = e.size;
    if (n == 1) return {0};
    std::vector<ElemId> mid;
    for (int x = 0; x < n; ++x)
        if (x != e.zero && x != e.one) mid.push_back(x);
    std::sort(mid.begin(), mid.end());

    std::vector<ElemId> pos(static_cast<size_t>(n));
    std::vector<uint8_t> best;
    std::vector<uint8_t> cur(static_cast<size_t>(n) * n + n);
    do {
        pos[static_cast<size_t>(e.zero)] = 0;
        pos[static_cast<size_t>(e.one)] = n - 1;
        for (size_t k = 0; k < mid.size(); ++k)
            pos[static_cast<size_t>(mid[k])] = static_cast<ElemId>(k) + 1;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                uint8_t code = 0;
                if (e.defined(a, b))
                    code = static_cast<uint8_t>(1 + pos[static_cast<size_t>(e.add(a, b))]);
                cur[static_cast<size_t>(pos[static_cast<size_t>(a)]) * n +
                    pos[static_cast<size_t>(b)]] = code;
            }
        for (int a = 0; a < n; ++a)
            cur[static_cast<size_t>(n) * n + pos[static_cast<size_t>(a)]] =
                static_cast<uint8_t>(pos[static_cast<size_t>(e.comp(a))]);
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(mid.begin(), mid.end()));
    return best;
}

FinEffectAlgebra chain_effect_algebra(int steps) {
    if (steps < 0 || steps > 250) throw MalformedInput("step count out of range");
    const int n = steps + 1;
    FinEffectAlgebra e;
    e.size = n;
    e.zero = 0;
    e.one = steps;
    e.name = "chain" + std::to_string(n);
    e.sum.assign(static_cast<size_t>(n) * n, -1);
    e.perp.resize(static_cast<size_t>(n));
    for (int a = 0; a <= steps; ++a) {
        e.perp[static_cast<size_t>(a)] = steps - a;
        for (int b = 0; a + b <= steps; ++b)
            e.sum[static_cast<size_t>(a) * n + b] = static_cast<int16_t>(a + b);
    }
    return e;
}

FinEffectAlgebra boolean_effect_algebra(int atoms) {
    if (atoms < 0 || atoms > 7) throw MalformedInput("atom count out of range");
    const int n = 1 << atoms;
    FinEffectAlgebra e;
    e.size = n;
    e.zero = 0;
    e.one = n - 1;
    e.name = "boolean" + std::to_string(atoms);
    e.sum.assign(static_cast<size_t>(n) * n, -1);
    e.perp.resize(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        e.perp[static_cast<size_t>(a)] = (n - 1) ^ a;
        for (int b = 0; b < n; ++b)
            if ((a & b) == 0) e.sum[static_cast<size_t>(a) * n + b] = static_cast<int16_t>(a | b);
    }
    return e;
}

} // namespace ewb
