#include "ewb/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ewb {

namespace {

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
    return out;
}

void require_id(ElemId x, int size, const char* what) {
    if (x < 0 || x >= size)
        throw MalformedInput(std::string(what) + " id " + std::to_string(x) +
                             " out of range [0," + std::to_string(size) + ")");
}

} // namespace

BoundedPoset::BoundedPoset(int size, std::vector<uint8_t> leq, ElemId bottom, ElemId top,
                           std::vector<std::string> labels)
    : size_(size), bottom_(bottom), top_(top), leq_(std::move(leq)), labels_(std::move(labels)) {
    if (size_ < 1) throw MalformedInput("poset size must be >= 1");
    if (leq_.size() != static_cast<size_t>(size_) * size_)
        throw MalformedInput("relation matrix size mismatch");
    require_id(bottom_, size_, "bottom");
    require_id(top_, size_, "top");
    if (labels_.empty()) labels_ = default_labels(size_);
    if (labels_.size() != static_cast<size_t>(size_))
        throw MalformedInput("label count mismatch");
}

Report validate_bounded_poset(const RawPoset& raw) {
    if (raw.size < 1) throw MalformedInput("poset size must be >= 1");
    for (auto [a, b] : raw.relation) {
        require_id(a, raw.size, "relation");
        require_id(b, raw.size, "relation");
    }
    require_id(raw.bottom, raw.size, "bottom");
    require_id(raw.top, raw.size, "top");
    if (!raw.labels.empty() && raw.labels.size() != static_cast<size_t>(raw.size))
        throw MalformedInput("label count mismatch");

    const int n = raw.size;
    std::vector<uint8_t> m(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1; // reflexive closure
    for (auto [a, b] : raw.relation) m[static_cast<size_t>(a) * n + b] = 1;
    auto at = [&](ElemId a, ElemId b) { return m[static_cast<size_t>(a) * n + b] != 0; };

    Report rep{raw.name.empty() ? "poset" : raw.name, {}};
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (at(a, b) && at(b, a)) rep.fail("antisymmetry", {a, b});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!at(a, b)) continue;
            for (int c = 0; c < n; ++c)
                if (at(b, c) && !at(a, c)) rep.fail("transitivity", {a, b, c});
        }
    for (int x = 0; x < n; ++x)
        if (!at(raw.bottom, x)) rep.fail("bottom", {raw.bottom, x});
    for (int x = 0; x < n; ++x)
        if (!at(x, raw.top)) rep.fail("top", {x, raw.top});
    if (n > 1 && raw.bottom == raw.top) rep.fail("bounds-distinct", {raw.bottom});
    return rep;
}

BoundedPoset poset_from_raw(const RawPoset& raw) {
    Report rep = validate_bounded_poset(raw);
    if (!rep.pass()) throw std::invalid_argument("invalid bounded poset:\n" + rep.to_text());
    const int n = raw.size;
    std::vector<uint8_t> m(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1;
    for (auto [a, b] : raw.relation) m[static_cast<size_t>(a) * n + b] = 1;
    return BoundedPoset(n, std::move(m), raw.bottom, raw.top, raw.labels);
}

Report check_poset_map(const PosetMap& f) {
    const auto& p = f.source;
    const auto& q = f.target;
    if (f.assign.size() != static_cast<size_t>(p.size()))
        throw MalformedInput("assignment length " + std::to_string(f.assign.size()) +
                             " does not match source size " + std::to_string(p.size()));
    for (ElemId y : f.assign) require_id(y, q.size(), "assignment");

    Report rep{"poset-map", {}};
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.leq(x, y) && !q.leq(f(x), f(y))) rep.fail("monotone", {x, y});
    if (f(p.bottom()) != q.bottom()) rep.fail("bottom-preserved", {p.bottom()});
    if (f(p.top()) != q.top()) rep.fail("top-preserved", {p.top()});
    return rep;
}

PosetMap identity_map(const BoundedPoset& p) {
    std::vector<ElemId> assign(static_cast<size_t>(p.size()));
    std::iota(assign.begin(), assign.end(), 0);
    return PosetMap{p, p, std::move(assign)};
}

PosetMap compose(const PosetMap& g, const PosetMap& f) {
    if (!f.target.same_order(g.source))
        throw PreconditionFailure("compose: inner target differs from outer source");
    std::vector<ElemId> assign(f.assign.size());
    for (size_t i = 0; i < assign.size(); ++i) assign[i] = g(f.assign[i]);
    return PosetMap{f.source, g.target, std::move(assign)};
}

PosetProduct product_poset(const BoundedPoset& p, const BoundedPoset& q) {
    const int np = p.size(), nq = q.size(), n = np * nq;
    auto id_of = [&](ElemId a, ElemId b) { return a * nq + b; };

    std::vector<uint8_t> m(static_cast<size_t>(n) * n, 0);
    std::vector<std::pair<ElemId, ElemId>> pairs(static_cast<size_t>(n));
    std::vector<std::string> labels(static_cast<size_t>(n));
    for (int a = 0; a < np; ++a)
        for (int b = 0; b < nq; ++b) {
            pairs[static_cast<size_t>(id_of(a, b))] = {a, b};
            labels[static_cast<size_t>(id_of(a, b))] = "(" + p.label(a) + "," + q.label(b) + ")";
        }
    for (int a = 0; a < np; ++a)
        for (int b = 0; b < nq; ++b)
            for (int c = 0; c < np; ++c)
                for (int d = 0; d < nq; ++d)
                    if (p.leq(a, c) && q.leq(b, d))
                        m[static_cast<size_t>(id_of(a, b)) * n + id_of(c, d)] = 1;

    BoundedPoset prod(n, std::move(m), id_of(p.bottom(), q.bottom()), id_of(p.top(), q.top()),
                      std::move(labels));
    std::vector<ElemId> la(static_cast<size_t>(n)), lb(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        la[static_cast<size_t>(i)] = pairs[static_cast<size_t>(i)].first;
        lb[static_cast<size_t>(i)] = pairs[static_cast<size_t>(i)].second;
    }
    PosetMap proj_left{prod, p, std::move(la)};
    PosetMap proj_right{prod, q, std::move(lb)};
    return PosetProduct{prod, std::move(proj_left), std::move(proj_right), std::move(pairs)};
}

PosetEqualizer equalizer_sub(const PosetMap& f, const PosetMap& g) {
    if (!f.source.same_order(g.source) || !f.target.same_order(g.target))
        throw PreconditionFailure("equalizer_sub: maps must share source and target");
    const auto& p = f.source;
    std::vector<ElemId> members;
    for (int x = 0; x < p.size(); ++x)
        if (f(x) == g(x)) members.push_back(x);

    const int n = static_cast<int>(members.size());
    std::vector<uint8_t> m(static_cast<size_t>(n) * n, 0);
    std::vector<std::string> labels(static_cast<size_t>(n));
    ElemId bot = -1, top = -1;
    for (int i = 0; i < n; ++i) {
        labels[static_cast<size_t>(i)] = p.label(members[static_cast<size_t>(i)]);
        if (members[static_cast<size_t>(i)] == p.bottom()) bot = i;
        if (members[static_cast<size_t>(i)] == p.top()) top = i;
        for (int j = 0; j < n; ++j)
            if (p.leq(members[static_cast<size_t>(i)], members[static_cast<size_t>(j)]))
                m[static_cast<size_t>(i) * n + j] = 1;
    }
    if (bot < 0 || top < 0)
        throw PreconditionFailure("equalizer_sub: maps disagree on a bound; check them first");

    BoundedPoset sub(n, std::move(m), bot, top, std::move(labels));
    PosetMap inclusion{sub, p, members};
    return PosetEqualizer{sub, std::move(inclusion), std::move(members)};
}

std::vector<std::pair<ElemId, ElemId>> hasse_covers(const BoundedPoset& p) {
    std::vector<std::pair<ElemId, ElemId>> covers;
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            if (!p.lt(x, y)) continue;
            bool direct = true;
            for (int z = 0; z < p.size(); ++z)
                if (p.lt(x, z) && p.lt(z, y)) {
                    direct = false;
                    break;
                }
            if (direct) covers.emplace_back(x, y);
        }
    return covers;
}

std::optional<ElemId> poset_meet(const BoundedPoset& p, ElemId a, ElemId b) {
    std::vector<ElemId> lower;
    for (int z = 0; z < p.size(); ++z)
        if (p.leq(z, a) && p.leq(z, b)) lower.push_back(z);
    for (ElemId c : lower) {
        bool greatest = true;
        for (ElemId z : lower)
            if (!p.leq(z, c)) {
                greatest = false;
                break;
            }
        if (greatest) return c;
    }
    return std::nullopt;
}

std::optional<ElemId> poset_join(const BoundedPoset& p, ElemId a, ElemId b) {
    std::vector<ElemId> upper;
    for (int z = 0; z < p.size(); ++z)
        if (p.leq(a, z) && p.leq(b, z)) upper.push_back(z);
    for (ElemId c : upper) {
        bool least = true;
        for (ElemId z : upper)
            if (!p.leq(c, z)) {
                least = false;
                break;
            }
        if (least) return c;
    }
    return std::nullopt;
}

std::vector<uint8_t> canonical_poset_key(const BoundedPoset& p) {
    const int n = p.size();
    if (n > 12) throw BudgetExceeded("canonical_poset_key: factorial search too large", n);
    if (n == 1) return {1};

    // Relabelings send bottom to 0 and top to n-1; order isomorphisms always
    // do, so restricting keeps the key an isomorphism invariant.
    std::vector<ElemId> mid;
    for (int x = 0; x < n; ++x)
        if (x != p.bottom() && x != p.top()) mid.push_back(x);
    std::sort(mid.begin(), mid.end());

    std::vector<ElemId> pos(static_cast<size_t>(n)); // pos[old id] = new id
    std::vector<uint8_t> best;
    std::vector<uint8_t> cur(static_cast<size_t>(n) * n);
    do {
        pos[static_cast<size_t>(p.bottom())] = 0;
        pos[static_cast<size_t>(p.top())] = n - 1;
        for (size_t k = 0; k < mid.size(); ++k)
            pos[static_cast<size_t>(mid[k])] = static_cast<ElemId>(k) + 1;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                cur[static_cast<size_t>(pos[static_cast<size_t>(a)]) * n +
                    pos[static_cast<size_t>(b)]] = p.leq(a, b) ? 1 : 0;
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(mid.begin(), mid.end()));
    return best;
}

std::optional<std::vector<ElemId>> find_order_iso(const BoundedPoset& p, const BoundedPoset& q) {
    const int n = p.size();
    if (n != q.size()) return std::nullopt;
    if (n == 1) return std::vector<ElemId>{0};

    auto profile = [](const BoundedPoset& r) {
        std::vector<std::pair<int, int>> prof(static_cast<size_t>(r.size()));
        for (int x = 0; x < r.size(); ++x) {
            int down = 0, up = 0;
            for (int z = 0; z < r.size(); ++z) {
                if (r.leq(z, x)) ++down;
                if (r.leq(x, z)) ++up;
            }
            prof[static_cast<size_t>(x)] = {down, up};
        }
        return prof;
    };
    auto pp = profile(p), qp = profile(q);
    {
        auto ps = pp, qs = qp;
        std::sort(ps.begin(), ps.end());
        std::sort(qs.begin(), qs.end());
        if (ps != qs) return std::nullopt;
    }

    std::vector<ElemId> assign(static_cast<size_t>(n), -1);
    std::vector<uint8_t> used(static_cast<size_t>(n), 0);
    auto consistent = [&](int x, int y) {
        if (pp[static_cast<size_t>(x)] != qp[static_cast<size_t>(y)]) return false;
        for (int z = 0; z < n; ++z) {
            if (assign[static_cast<size_t>(z)] < 0) continue;
            ElemId w = assign[static_cast<size_t>(z)];
            if (p.leq(x, z) != q.leq(y, w)) return false;
            if (p.leq(z, x) != q.leq(w, y)) return false;
        }
        return true;
    };
    assign[static_cast<size_t>(p.bottom())] = q.bottom();
    used[static_cast<size_t>(q.bottom())] = 1;
    if (p.top() != p.bottom()) {
        assign[static_cast<size_t>(p.top())] = q.top();
        used[static_cast<size_t>(q.top())] = 1;
    }
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
    if (!rec(rec, 0)) return std::nullopt;
    return assign;
}

std::vector<BoundedPoset> enumerate_bounded_posets(int max_size, const Budget& budget) {
    if (max_size < 1) throw MalformedInput("size bound must be >= 1");
    if (max_size > budget.max_enum_size) {
        unsigned long long mid = static_cast<unsigned long long>(max_size) - 2;
        unsigned long long est = 1;
        for (unsigned long long k = 0; k < mid * (mid - 1) / 2 && est < (1ull << 62); ++k) est *= 3;
        throw BudgetExceeded("enumerate_bounded_posets: size bound " + std::to_string(max_size) +
                                 " exceeds budget " + std::to_string(budget.max_enum_size),
                             est);
    }

    std::vector<BoundedPoset> out;
    out.emplace_back(1, std::vector<uint8_t>{1}, 0, 0);

    for (int n = 2; n <= max_size; ++n) {
        const int m = n - 2;
        std::set<std::vector<uint8_t>> keys;
        std::vector<std::pair<int, int>> upairs;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) upairs.emplace_back(i, j);

        // rel[i*m+j] = 1 iff middle element i is strictly below middle element j
        std::vector<uint8_t> rel(static_cast<size_t>(std::max(m * m, 1)), 0);
        auto try_commit = [&]() {
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    if (!rel[static_cast<size_t>(a) * m + b]) continue;
                    for (int c = 0; c < m; ++c)
                        if (rel[static_cast<size_t>(b) * m + c] &&
                            !rel[static_cast<size_t>(a) * m + c])
                            return;
                }
            std::vector<uint8_t> mat(static_cast<size_t>(n) * n, 0);
            auto set = [&](int a, int b) { mat[static_cast<size_t>(a) * n + b] = 1; };
            for (int x = 0; x < n; ++x) {
                set(x, x);
                set(0, x);
                set(x, n - 1);
            }
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if (rel[static_cast<size_t>(i) * m + j]) set(i + 1, j + 1);
            BoundedPoset cand(n, std::move(mat), 0, n - 1);
            keys.insert(canonical_poset_key(cand));
        };
        auto rec = [&](auto&& self, size_t k) -> void {
            if (k == upairs.size()) {
                try_commit();
                return;
            }
            auto [i, j] = upairs[k];
            self(self, k + 1); // incomparable
            rel[static_cast<size_t>(i) * m + j] = 1;
            self(self, k + 1);
            rel[static_cast<size_t>(i) * m + j] = 0;
            rel[static_cast<size_t>(j) * m + i] = 1;
            self(self, k + 1);
            rel[static_cast<size_t>(j) * m + i] = 0;
        };
        rec(rec, 0);

        for (const auto& key : keys)
            out.emplace_back(n, key, 0, n - 1);
    }
    return out;
}

std::vector<PosetMap> all_poset_maps(const BoundedPoset& p, const BoundedPoset& q) {
    std::vector<PosetMap> out;
    const int n = p.size();
    std::vector<ElemId> assign(static_cast<size_t>(n), -1);
    auto ok_so_far = [&](int x, ElemId y) {
        if (x == p.bottom() && y != q.bottom()) return false;
        if (x == p.top() && y != q.top()) return false;
        for (int z = 0; z < x; ++z) {
            ElemId w = assign[static_cast<size_t>(z)];
            if (p.leq(z, x) && !q.leq(w, y)) return false;
            if (p.leq(x, z) && !q.leq(y, w)) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int x) -> void {
        if (x == n) {
            out.push_back(PosetMap{p, q, assign});
            return;
        }
        for (int y = 0; y < q.size(); ++y) {
            if (!ok_so_far(x, y)) continue;
            assign[static_cast<size_t>(x)] = y;
            self(self, x + 1);
            assign[static_cast<size_t>(x)] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

BoundedPoset chain_poset(int n) {
    if (n < 1) throw MalformedInput("chain length must be >= 1");
    std::vector<uint8_t> m(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) m[static_cast<size_t>(a) * n + b] = 1;
    return BoundedPoset(n, std::move(m), 0, n - 1);
}

BoundedPoset diamond_poset() {
    RawPoset raw;
    raw.name = "diamond";
    raw.size = 4;
    raw.relation = {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}};
    raw.bottom = 0;
    raw.top = 3;
    raw.labels = {"0", "a", "b", "1"};
    return poset_from_raw(raw);
}

} // namespace ewb
