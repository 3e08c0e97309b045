#include "ewb/kalmbach.hpp"

#include <algorithm>
#include <map>

#include "ewb/effect_algebra.hpp"
#include "ewb/ortho.hpp"

namespace ewb {

namespace {

constexpr unsigned long long kSaturate = 1ull << 62;

unsigned long long sat_add(unsigned long long a, unsigned long long b) {
    unsigned long long s = a + b;
    return (s < a || s >= kSaturate) ? kSaturate : s;
}

void require_points(const EvenChain& s, const BoundedPoset& base) {
    for (ElemId x : s)
        if (x < 0 || x >= base.size())
            throw MalformedInput("chain point " + std::to_string(x) + " not in base poset");
}

} // namespace

bool valid_even_chain(const EvenChain& s, const BoundedPoset& base) {
    require_points(s, base);
    if (s.size() % 2 != 0) return false;
    for (size_t i = 1; i < s.size(); ++i)
        if (!base.lt(s[i - 1], s[i])) return false;
    return true;
}

bool chain_leq(const EvenChain& s, const EvenChain& t, const BoundedPoset& base) {
    require_points(s, base);
    require_points(t, base);
    for (size_t i = 0; i + 1 < s.size(); i += 2) {
        bool covered = false;
        for (size_t j = 0; j + 1 < t.size(); j += 2)
            if (base.leq(t[j], s[i]) && base.leq(s[i + 1], t[j + 1])) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

EvenChain chain_perp(const EvenChain& s, const BoundedPoset& base) {
    require_points(s, base);
    EvenChain out;
    for (ElemId x : s)
        if (x != base.bottom() && x != base.top()) out.push_back(x);
    if (std::find(s.begin(), s.end(), base.bottom()) == s.end()) out.push_back(base.bottom());
    if (base.top() != base.bottom() && std::find(s.begin(), s.end(), base.top()) == s.end())
        out.push_back(base.top());
    std::sort(out.begin(), out.end(), [&](ElemId a, ElemId b) { return base.lt(a, b); });
    return out;
}

unsigned long long count_even_chains(const BoundedPoset& p) {
    const int n = p.size();
    // chains ending at x, split by parity of length; totals saturate
    std::vector<unsigned long long> odd(static_cast<size_t>(n), 0), even(static_cast<size_t>(n), 0);
    std::vector<ElemId> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](ElemId a, ElemId b) {
        if (p.lt(a, b)) return true;
        if (p.lt(b, a)) return false;
        return a < b;
    });
    for (ElemId x : order) {
        odd[static_cast<size_t>(x)] = 1;
        for (ElemId y : order) {
            if (!p.lt(y, x)) continue;
            odd[static_cast<size_t>(x)] = sat_add(odd[static_cast<size_t>(x)], even[static_cast<size_t>(y)]);
            even[static_cast<size_t>(x)] = sat_add(even[static_cast<size_t>(x)], odd[static_cast<size_t>(y)]);
        }
    }
    unsigned long long total = 1; // empty chain
    for (int x = 0; x < n; ++x) total = sat_add(total, even[static_cast<size_t>(x)]);
    return total;
}

ElemId KalmbachExtension::id_of(const EvenChain& s) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), s,
                               [](const EvenChain& a, const EvenChain& b) {
                                   if (a.size() != b.size()) return a.size() < b.size();
                                   return a < b;
                               });
    if (it == elements.end() || *it != s)
        throw PreconditionFailure("chain is not an element of this extension");
    return static_cast<ElemId>(it - elements.begin());
}

KalmbachExtension kalmbach_extension(const BoundedPoset& p, const Budget& budget) {
    unsigned long long count = count_even_chains(p);
    if (count > budget.max_chains)
        throw BudgetExceeded("kalmbach_extension: " + std::to_string(count) +
                                 " even chains exceed the budget of " +
                                 std::to_string(budget.max_chains),
                             count);

    KalmbachExtension ext;
    ext.base = p;
    ext.degenerate = p.degenerate();

    std::vector<EvenChain> chains;
    chains.push_back({});
    EvenChain cur;
    auto rec = [&](auto&& self, ElemId last) -> void {
        for (int y = 0; y < p.size(); ++y) {
            if (!p.lt(last, y)) continue;
            cur.push_back(y);
            if (cur.size() % 2 == 0) chains.push_back(cur);
            self(self, y);
            cur.pop_back();
        }
    };
    for (int x = 0; x < p.size(); ++x) {
        cur.push_back(x);
        rec(rec, x);
        cur.pop_back();
    }
    std::sort(chains.begin(), chains.end(), [](const EvenChain& a, const EvenChain& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    ext.elements = std::move(chains);

    const int n = static_cast<int>(ext.elements.size());
    std::vector<uint8_t> mat(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (chain_leq(ext.elements[static_cast<size_t>(i)], ext.elements[static_cast<size_t>(j)], p))
                mat[static_cast<size_t>(i) * n + j] = 1;

    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(n));
    for (const auto& s : ext.elements) labels.push_back(chain_label(s, p));

    // the empty chain sorts first, so bottom is id 0
    ElemId top = ext.degenerate ? 0 : ext.id_of({p.bottom(), p.top()});
    ext.poset = BoundedPoset(n, std::move(mat), 0, top, std::move(labels));
    if (ext.degenerate) {
        ext.perp.assign(static_cast<size_t>(n), 0);
        return ext;
    }

    ext.perp.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        ext.perp[static_cast<size_t>(i)] = ext.id_of(chain_perp(ext.elements[static_cast<size_t>(i)], p));
    return ext;
}

PosetMap kalmbach_map(const PosetMap& f, const KalmbachExtension& ksource,
                      const KalmbachExtension& ktarget) {
    if (!f.source.same_order(ksource.base) || !f.target.same_order(ktarget.base))
        throw PreconditionFailure("kalmbach_map: extensions do not match the map's endpoints");
    std::vector<ElemId> assign;
    assign.reserve(ksource.elements.size());
    for (const auto& s : ksource.elements) {
        std::map<ElemId, int> count;
        for (ElemId x : s) ++count[f(x)];
        EvenChain image;
        for (auto [y, c] : count)
            if (c % 2 != 0) image.push_back(y);
        std::sort(image.begin(), image.end(),
                  [&](ElemId a, ElemId b) { return ktarget.base.lt(a, b); });
        assign.push_back(ktarget.id_of(image));
    }
    return PosetMap{ksource.poset, ktarget.poset, std::move(assign)};
}

PosetMap unit_embedding(const BoundedPoset& p, const KalmbachExtension& kp) {
    if (!p.same_order(kp.base))
        throw PreconditionFailure("unit_embedding: extension built over a different poset");
    std::vector<ElemId> assign(static_cast<size_t>(p.size()));
    for (int x = 0; x < p.size(); ++x)
        assign[static_cast<size_t>(x)] =
            (x == p.bottom()) ? kp.id_of({}) : kp.id_of({p.bottom(), x});
    return PosetMap{p, kp.poset, std::move(assign)};
}

PosetMap monad_mult(const BoundedPoset& p, const KalmbachExtension& kp,
                    const KalmbachExtension& kkp) {
    if (!p.same_order(kp.base))
        throw PreconditionFailure("monad_mult: kp built over a different poset");
    if (!kp.poset.same_order(kkp.base))
        throw PreconditionFailure("monad_mult: kkp not built over kp");
    FinEffectAlgebra ea = omp_to_ea(omp_of(kp));
    return algebra_action(ea, kkp);
}

std::string chain_label(const EvenChain& s, const BoundedPoset& base) {
    if (s.empty()) return "[]";
    std::string out = "[";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += "<";
        out += base.label(s[i]);
    }
    return out + "]";
}

} // namespace ewb
