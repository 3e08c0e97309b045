#include "ewb/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <omp.h>

namespace ewb {

namespace {

void check_enum_budget(int max_size, const Budget& budget) {
    if (max_size < 1) throw MalformedInput("size bound must be positive");
    if (max_size > static_cast<int>(budget.hard_wall))
        throw BudgetExceeded("size bound beyond the hard wall", static_cast<uint64_t>(max_size));
    if (max_size > static_cast<int>(budget.max_enum_size)) {
        int mid = max_size - 2;
        uint64_t cells = static_cast<uint64_t>(mid) * (mid + 1) / 2;
        uint64_t estimate = 1;
        for (uint64_t i = 0; i < cells; ++i) {
            if (estimate > (1ull << 62) / (static_cast<uint64_t>(max_size) + 1)) {
                estimate = 1ull << 62;
                break;
            }
            estimate *= static_cast<uint64_t>(max_size) + 1;
        }
        throw BudgetExceeded("enumeration size beyond budget", estimate);
    }
}

/// Rebuilds the canonical representative straight from its key, so the
/// chosen representative never depends on search or merge order.
FinEffectAlgebra ea_from_key(int n, const std::vector<uint8_t>& key) {
    FinEffectAlgebra e;
    e.size = n;
    e.zero = 0;
    e.one = n - 1;
    e.sum.assign(static_cast<size_t>(n) * n, -1);
    e.perp.assign(static_cast<size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            uint8_t code = key[static_cast<size_t>(a) * n + b];
            if (code != 0) e.sum[static_cast<size_t>(a) * n + b] = static_cast<int16_t>(code - 1);
        }
    for (int a = 0; a < n; ++a) e.perp[static_cast<size_t>(a)] = key[static_cast<size_t>(n) * n + a];
    return e;
}

FinEffectMonoid em_from_key(int n, const std::vector<uint8_t>& key) {
    FinEffectMonoid m;
    m.ea = ea_from_key(n, key);
    m.mul.assign(static_cast<size_t>(n) * n, 0);
    const size_t off = static_cast<size_t>(n) * n + n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            m.mul[static_cast<size_t>(a) * n + b] = key[off + static_cast<size_t>(a) * n + b];
    return m;
}

/// Exhaustive sum-table search for one exact size. Zero row and the
/// positivity column are forced; free cells range over middle pairs. Rows
/// may hold at most one complement, values 0/a/b are excluded by
/// cancellation, full laws are confirmed at each leaf.
struct EaTableSearch {
    int n;
    std::vector<std::pair<ElemId, ElemId>> cells;
    std::set<std::vector<uint8_t>> keys;

    explicit EaTableSearch(int size) : n(size) {
        for (ElemId a = 1; a <= n - 2; ++a)
            for (ElemId b = a; b <= n - 2; ++b) cells.emplace_back(a, b);
    }

    std::vector<int16_t> fresh_table() const {
        std::vector<int16_t> sum(static_cast<size_t>(n) * n, -1);
        for (ElemId x = 0; x < n; ++x) {
            sum[static_cast<size_t>(0) * n + x] = static_cast<int16_t>(x);
            sum[static_cast<size_t>(x) * n + 0] = static_cast<int16_t>(x);
        }
        return sum;
    }

    bool row_complements_ok(const std::vector<int16_t>& sum, ElemId row, bool final_check) const {
        int count = 0;
        for (ElemId b = 0; b < n; ++b)
            if (sum[static_cast<size_t>(row) * n + b] == n - 1) ++count;
        return final_check ? count == 1 : count <= 1;
    }

    void leaf(std::vector<int16_t>& sum) {
        for (ElemId a = 1; a <= n - 2; ++a)
            if (!row_complements_ok(sum, a, true)) return;
        FinEffectAlgebra e;
        e.size = n;
        e.zero = 0;
        e.one = n - 1;
        e.sum = sum;
        e.perp.assign(static_cast<size_t>(n), 0);
        e.perp[0] = n - 1;
        e.perp[static_cast<size_t>(n - 1)] = 0;
        for (ElemId a = 1; a <= n - 2; ++a)
            for (ElemId b = 0; b < n; ++b)
                if (sum[static_cast<size_t>(a) * n + b] == n - 1) e.perp[static_cast<size_t>(a)] = b;
        if (!check_effect_algebra(e).pass()) return;
        keys.insert(canonical_ea_key(e));
    }

    void dfs(std::vector<int16_t>& sum, size_t next) {
        if (next == cells.size()) {
            leaf(sum);
            return;
        }
        auto [a, b] = cells[next];
        for (int16_t v = -1; v < static_cast<int16_t>(n); ++v) {
            if (v == 0) continue;           // a+b = 0 forces a = b = 0, but a >= 1
            if (v == a || v == b) continue; // cancellation
            sum[static_cast<size_t>(a) * n + b] = v;
            sum[static_cast<size_t>(b) * n + a] = v;
            if (v != n - 1 || (row_complements_ok(sum, a, false) && row_complements_ok(sum, b, false)))
                dfs(sum, next + 1);
        }
        sum[static_cast<size_t>(a) * n + b] = -1;
        sum[static_cast<size_t>(b) * n + a] = -1;
    }
};

std::set<std::vector<uint8_t>> ea_keys_of_size(int n, bool parallel) {
    EaTableSearch probe(n);
    if (!parallel || probe.cells.size() < 2) {
        auto sum = probe.fresh_table();
        probe.dfs(sum, 0);
        return std::move(probe.keys);
    }

    // split on the first free cell; each branch runs an independent search
    auto [a0, b0] = probe.cells[0];
    std::vector<int16_t> branch_values;
    for (int16_t v = -1; v < static_cast<int16_t>(n); ++v) {
        if (v == 0 || v == a0 || v == b0) continue;
        branch_values.push_back(v);
    }

    std::set<std::vector<uint8_t>> merged;
#pragma omp parallel
    {
        EaTableSearch local(n);
#pragma omp for schedule(dynamic)
        for (size_t i = 0; i < branch_values.size(); ++i) {
            auto sum = local.fresh_table();
            int16_t v = branch_values[i];
            sum[static_cast<size_t>(a0) * n + b0] = v;
            sum[static_cast<size_t>(b0) * n + a0] = v;
            if (v != n - 1 || local.row_complements_ok(sum, a0, false))
                local.dfs(sum, 1);
        }
#pragma omp critical
        merged.insert(local.keys.begin(), local.keys.end());
    }
    return merged;
}

std::vector<FinEffectAlgebra> enumerate_eas(int max_size, const Budget& budget, bool parallel) {
    check_enum_budget(max_size, budget);
    std::vector<FinEffectAlgebra> out;
    for (int n = 2; n <= max_size; ++n) {
        auto keys = ea_keys_of_size(n, parallel);
        int idx = 0;
        for (const auto& key : keys) {
            FinEffectAlgebra e = ea_from_key(n, key);
            e.name = "ea" + std::to_string(n) + "." + std::to_string(idx++);
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<FinEffectMonoid> ems_over(const std::vector<FinEffectAlgebra>& eas,
                                      const Budget& budget, bool parallel) {
    std::vector<std::set<std::vector<uint8_t>>> keys_per_ea(eas.size());

    bool refused = false; // exceptions must not escape the parallel region
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (size_t i = 0; i < eas.size(); ++i) {
        try {
            for (const auto& mul : em_structures_on(eas[i], budget)) {
                FinEffectMonoid m;
                m.ea = eas[i];
                m.mul = mul;
                keys_per_ea[i].insert(canonical_em_key(m));
            }
        } catch (const BudgetExceeded&) {
            refused = true;
        }
    }
    if (refused) throw BudgetExceeded("multiplication search space too large", budget.max_search + 1);

    std::map<int, std::set<std::vector<uint8_t>>> by_size;
    for (size_t i = 0; i < eas.size(); ++i)
        by_size[eas[i].size].insert(keys_per_ea[i].begin(), keys_per_ea[i].end());

    std::vector<FinEffectMonoid> out;
    for (const auto& [n, keys] : by_size) {
        int idx = 0;
        for (const auto& key : keys) {
            FinEffectMonoid m = em_from_key(n, key);
            m.ea.name = "em" + std::to_string(n) + "." + std::to_string(idx++);
            out.push_back(std::move(m));
        }
    }
    return out;
}

std::vector<FinEffectMonoid> enumerate_ems(int max_size, const Budget& budget, bool parallel) {
    return ems_over(enumerate_eas(max_size, budget, parallel), budget, parallel);
}

} // namespace

std::vector<FinEffectAlgebra> enumerate_effect_algebras(int max_size, const Budget& budget) {
    return enumerate_eas(max_size, budget, true);
}

std::vector<FinEffectAlgebra> enumerate_effect_algebras_serial(int max_size,
                                                               const Budget& budget) {
    return enumerate_eas(max_size, budget, false);
}

std::vector<FinEffectMonoid> enumerate_effect_monoids(int max_size, const Budget& budget) {
    return enumerate_ems(max_size, budget, true);
}

std::vector<FinEffectMonoid> enumerate_effect_monoids_serial(int max_size, const Budget& budget) {
    return enumerate_ems(max_size, budget, false);
}

std::string em_table_text(const FinEffectMonoid& m) {
    const int n = m.ea.size;
    std::string out = "size " + std::to_string(n) + "\nsum";
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int16_t s = m.ea.sum[static_cast<size_t>(a) * n + b];
            out += " " + (s < 0 ? std::string(".") : std::to_string(s));
        }
    out += "\nperp";
    for (int a = 0; a < n; ++a) out += " " + std::to_string(m.ea.perp[static_cast<size_t>(a)]);
    out += "\nmul";
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out += " " + std::to_string(m.mul[static_cast<size_t>(a) * n + b]);
    return out + "\n";
}

std::string CensusReport::canonical_text() const {
    std::string out = "census max=" + std::to_string(max_size) + "\n";
    for (size_t s = 1; s < ea_count.size(); ++s)
        out += "ea size " + std::to_string(s) + ": " + std::to_string(ea_count[s]) + "\n";
    for (size_t s = 1; s < em_count.size(); ++s)
        out += "em size " + std::to_string(s) + ": " + std::to_string(em_count[s]) + "\n";
    for (const auto& line : classified) out += line + "\n";
    out += std::string("all-boolean: ") + (all_boolean ? "yes" : "no") + "\n";
    out += std::string("all-commutative: ") + (all_commutative ? "yes" : "no") + "\n";
    out += "counterexample: " + (counterexample.empty() ? "none" : "\n" + counterexample);
    return out + "\n";
}

CensusReport census(int max_size, const Budget& budget) {
    double t0 = omp_get_wtime();
    CensusReport rep;
    rep.max_size = max_size;
    rep.ea_count.assign(static_cast<size_t>(max_size) + 1, 0);
    rep.em_count.assign(static_cast<size_t>(max_size) + 1, 0);
    rep.all_boolean = true;
    rep.all_commutative = true;

    // the one-point structure is final, not part of the streams; account it
    // directly so the census covers every size from 1 up
    rep.ea_count[1] = 1;
    rep.em_count[1] = 1;
    rep.classified.push_back("em size 1 #0: {0}");

    auto eas = enumerate_eas(max_size, budget, true);
    for (const auto& e : eas) ++rep.ea_count[static_cast<size_t>(e.size)];

    auto ems = ems_over(eas, budget, true);
    for (const auto& m : ems) ++rep.em_count[static_cast<size_t>(m.ea.size)];

    int idx = 0, last_size = 0;
    for (const auto& m : ems) {
        if (m.ea.size != last_size) {
            last_size = m.ea.size;
            idx = 0;
        }
        EmClassification c = classify_finite_em(m);
        std::string line = "em size " + std::to_string(m.ea.size) + " #" +
                           std::to_string(idx++) + ": ";
        if (c.failed || !c.certified) {
            rep.all_boolean = false;
            line += c.descriptor.empty() ? "unclassified" : c.descriptor;
            if (rep.counterexample.empty()) rep.counterexample = em_table_text(m);
        } else {
            line += c.descriptor;
        }
        rep.classified.push_back(line);
        for (ElemId a = 0; a < m.ea.size && rep.all_commutative; ++a)
            for (ElemId b = 0; b < m.ea.size && rep.all_commutative; ++b)
                if (m.times(a, b) != m.times(b, a)) {
                    rep.all_commutative = false;
                    if (rep.counterexample.empty()) rep.counterexample = em_table_text(m);
                }
    }
    rep.seconds = omp_get_wtime() - t0;
    return rep;
}

} // namespace ewb
