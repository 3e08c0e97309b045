#include "ewb/ortho.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ewb {

namespace {

void require_perp_table(const OrthoPoset& a) {
    if (a.perp.size() != static_cast<size_t>(a.poset.size()))
        throw MalformedInput("perp table length does not match carrier size");
    for (ElemId y : a.perp)
        if (y < 0 || y >= a.poset.size())
            throw MalformedInput("perp value " + std::to_string(y) + " out of range");
}

} // namespace

Report check_omp(const OrthoPoset& a) {
    require_perp_table(a);
    const auto& p = a.poset;
    const int n = p.size();
    Report rep{a.name, {}};

    for (int x = 0; x < n; ++x)
        if (a.perp[static_cast<size_t>(a.perp[static_cast<size_t>(x)])] != x)
            rep.fail("perp-involution", {x});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (p.leq(x, y) !=
                p.leq(a.perp[static_cast<size_t>(y)], a.perp[static_cast<size_t>(x)]))
                rep.fail("perp-antitone", {x, y});
    for (int x = 0; x < n; ++x) {
        auto m = poset_meet(p, x, a.perp[static_cast<size_t>(x)]);
        if (!m)
            rep.fail("complement-meet", {x}, "meet with complement does not exist");
        else if (*m != p.bottom())
            rep.fail("complement-meet", {x, *m}, "meet with complement is not bottom");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!a.orthogonal(x, y)) continue;
            auto j = poset_join(p, x, y);
            if (!j) {
                rep.fail("orthogonal-join", {x, y}, "join of orthogonal pair does not exist");
                continue;
            }
            auto m = poset_meet(p, a.perp[static_cast<size_t>(x)], *j);
            if (!m)
                rep.fail("orthomodular", {x, y}, "complement-meet over the join does not exist");
            else if (*m != y)
                rep.fail("orthomodular", {x, y, *m});
        }
    return rep;
}

Report check_omp_morphism(const OrthoPoset& a, const OrthoPoset& b,
                          const std::vector<ElemId>& assign) {
    require_perp_table(a);
    require_perp_table(b);
    PosetMap f{a.poset, b.poset, assign};
    Report rep = check_poset_map(f);
    rep.structure = "omp-morphism";

    for (int x = 0; x < a.poset.size(); ++x)
        for (int y = 0; y < a.poset.size(); ++y) {
            if (!a.orthogonal(x, y)) continue;
            if (!b.orthogonal(f(x), f(y))) {
                rep.fail("orthogonality-preserved", {x, y});
                continue;
            }
            auto j = poset_join(a.poset, x, y);
            if (!j) continue; // source law failure; check_omp reports it
            auto jb = poset_join(b.poset, f(x), f(y));
            if (!jb)
                rep.fail("join-preserved", {x, y}, "image join does not exist");
            else if (f(*j) != *jb)
                rep.fail("join-preserved", {x, y, *j});
        }
    return rep;
}

OrthoPoset omp_of(const KalmbachExtension& k) { return OrthoPoset{k.poset, k.perp, "kalmbach"}; }

std::optional<std::vector<ElemId>> find_omp_iso(const OrthoPoset& a, const OrthoPoset& b) {
    require_perp_table(a);
    require_perp_table(b);
    const int n = a.poset.size();
    if (n != b.poset.size()) return std::nullopt;

    auto profile = [](const OrthoPoset& r) {
        std::vector<std::pair<int, int>> prof(static_cast<size_t>(r.poset.size()));
        for (int x = 0; x < r.poset.size(); ++x) {
            int down = 0, up = 0;
            for (int z = 0; z < r.poset.size(); ++z) {
                if (r.poset.leq(z, x)) ++down;
                if (r.poset.leq(x, z)) ++up;
            }
            prof[static_cast<size_t>(x)] = {down, up};
        }
        return prof;
    };
    auto pa = profile(a), pb = profile(b);
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    std::vector<ElemId> assign(static_cast<size_t>(n), -1);
    std::vector<uint8_t> used(static_cast<size_t>(n), 0);
    auto consistent = [&](int x, int y) {
        if (pa[static_cast<size_t>(x)] != pb[static_cast<size_t>(y)]) return false;
        for (int z = 0; z < n; ++z) {
            if (assign[static_cast<size_t>(z)] < 0) continue;
            ElemId w = assign[static_cast<size_t>(z)];
            if (a.poset.leq(x, z) != b.poset.leq(y, w)) return false;
            if (a.poset.leq(z, x) != b.poset.leq(w, y)) return false;
            if (a.perp[static_cast<size_t>(x)] == z && b.perp[static_cast<size_t>(y)] != w)
                return false;
            if (a.perp[static_cast<size_t>(x)] != z && b.perp[static_cast<size_t>(y)] == w)
                return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int x) -> bool {
        while (x < n && assign[static_cast<size_t>(x)] >= 0) ++x;
        if (x == n) return true;
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
    assign[static_cast<size_t>(a.poset.bottom())] = b.poset.bottom();
    used[static_cast<size_t>(b.poset.bottom())] = 1;
    if (a.poset.top() != a.poset.bottom()) {
        if (used[static_cast<size_t>(b.poset.top())]) return std::nullopt;
        assign[static_cast<size_t>(a.poset.top())] = b.poset.top();
        used[static_cast<size_t>(b.poset.top())] = 1;
    }
    if (!rec(rec, 0)) return std::nullopt;
    return assign;
}

std::vector<uint8_t> canonical_omp_key(const OrthoPoset& a) {
    require_perp_table(a);
    const int n = a.poset.size();
    if (n == 1) return {1, 0};
    std::vector<ElemId> mid;
    for (int x = 0; x < n; ++x)
        if (x != a.poset.bottom() && x != a.poset.top()) mid.push_back(x);
    std::sort(mid.begin(), mid.end());

    std::vector<ElemId> pos(static_cast<size_t>(n));
    std::vector<uint8_t> best;
    std::vector<uint8_t> cur(static_cast<size_t>(n) * n + n);
    do {
        pos[static_cast<size_t>(a.poset.bottom())] = 0;
        pos[static_cast<size_t>(a.poset.top())] = n - 1;
        for (size_t k = 0; k < mid.size(); ++k)
            pos[static_cast<size_t>(mid[k])] = static_cast<ElemId>(k) + 1;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                cur[static_cast<size_t>(pos[static_cast<size_t>(x)]) * n +
                    pos[static_cast<size_t>(y)]] = a.poset.leq(x, y) ? 1 : 0;
        for (int x = 0; x < n; ++x)
            cur[static_cast<size_t>(n) * n + pos[static_cast<size_t>(x)]] =
                static_cast<uint8_t>(pos[static_cast<size_t>(a.perp[static_cast<size_t>(x)])]);
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(mid.begin(), mid.end()));
    return best;
}

std::vector<OrthoPoset> enumerate_omps(int max_size, const Budget& budget) {
    std::vector<OrthoPoset> out;
    int counter = 0;
    for (const auto& p : enumerate_bounded_posets(max_size, budget)) {
        const int n = p.size();
        if (n == 1) {
            OrthoPoset one{p, {0}, "omp1"};
            out.push_back(one);
            continue;
        }
        std::vector<ElemId> mid;
        for (int x = 0; x < n; ++x)
            if (x != p.bottom() && x != p.top()) mid.push_back(x);

        std::vector<ElemId> perp(static_cast<size_t>(n), -1);
        perp[static_cast<size_t>(p.bottom())] = p.top();
        perp[static_cast<size_t>(p.top())] = p.bottom();

        std::map<std::vector<uint8_t>, OrthoPoset> local;
        auto rec = [&](auto&& self, size_t i) -> void {
            if (i == mid.size()) {
                OrthoPoset cand{p, perp, "omp" + std::to_string(n) + "_" + std::to_string(counter)};
                if (!check_omp(cand).pass()) return;
                auto key = canonical_omp_key(cand);
                if (local.emplace(std::move(key), cand).second) ++counter;
                return;
            }
            ElemId x = mid[i];
            if (perp[static_cast<size_t>(x)] >= 0) {
                self(self, i + 1);
                return;
            }
            for (size_t j = i; j < mid.size(); ++j) {
                ElemId y = mid[j];
                if (perp[static_cast<size_t>(y)] >= 0) continue;
                perp[static_cast<size_t>(x)] = y;
                perp[static_cast<size_t>(y)] = x;
                self(self, i + 1);
                perp[static_cast<size_t>(x)] = -1;
                perp[static_cast<size_t>(y)] = -1;
            }
        };
        rec(rec, 0);
        for (auto& [key, omp] : local) out.push_back(std::move(omp));
    }
    return out;
}

OrthoPoset boolean_omp(int atoms) {
    if (atoms < 0 || atoms > 16) throw MalformedInput("atom count out of range");
    const int n = 1 << atoms;
    std::vector<uint8_t> m(static_cast<size_t>(n) * n, 0);
    std::vector<std::string> labels(static_cast<size_t>(n));
    std::vector<ElemId> perp(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
        perp[static_cast<size_t>(x)] = (n - 1) ^ x;
        std::string l;
        for (int b = 0; b < atoms; ++b)
            if (x & (1 << b)) l += static_cast<char>('a' + b);
        labels[static_cast<size_t>(x)] = l.empty() ? "0" : l;
        for (int y = 0; y < n; ++y)
            if ((x & y) == x) m[static_cast<size_t>(x) * n + y] = 1;
    }
    if (n > 1) labels[static_cast<size_t>(n) - 1] = "1";
    return OrthoPoset{BoundedPoset(n, std::move(m), 0, n - 1, std::move(labels)), std::move(perp),
                      "boolean" + std::to_string(atoms)};
}

OrthoPoset mo2_omp() {
    RawPoset raw;
    raw.name = "MO2";
    raw.size = 6;
    raw.labels = {"0", "a", "a'", "b", "b'", "1"};
    raw.bottom = 0;
    raw.top = 5;
    for (int x = 1; x <= 4; ++x) {
        raw.relation.emplace_back(0, x);
        raw.relation.emplace_back(x, 5);
    }
    raw.relation.emplace_back(0, 5);
    return OrthoPoset{poset_from_raw(raw), {5, 2, 1, 4, 3, 0}, "MO2"};
}

} // namespace ewb
