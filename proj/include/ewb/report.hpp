#ifndef EWB_REPORT_HPP
#define EWB_REPORT_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace ewb {

using ElemId = int;

/// One violated law together with the elements witnessing the violation.
struct Violation {
    std::string law;
    std::vector<ElemId> witness;
    std::string detail;
};

/// Result of a law checker: empty means every law held.
struct Report {
    std::string structure;
    std::vector<Violation> violations;

    bool pass() const { return violations.empty(); }

    void fail(std::string law, std::vector<ElemId> witness, std::string detail = "") {
        violations.push_back({std::move(law), std::move(witness), std::move(detail)});
    }

    /// One finding per line: LAW, WITNESS tuple, STRUCTURE name.
    std::string to_text() const {
        if (violations.empty()) return "PASS " + structure + "\n";
        std::string out;
        for (const auto& v : violations) {
            out += "LAW=" + v.law + " WITNESS=(";
            for (size_t i = 0; i < v.witness.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(v.witness[i]);
            }
            out += ") STRUCTURE=" + structure;
            if (!v.detail.empty()) out += " DETAIL=" + v.detail;
            out += "\n";
        }
        return out;
    }
};

/// Input that is not even well-formed (ids out of range, ragged tables).
/// Distinct from a law violation: the structure cannot be interrogated at all.
struct MalformedInput : std::runtime_error {
    explicit MalformedInput(const std::string& msg) : std::runtime_error(msg) {}
};

/// A computation was refused because its size estimate exceeds the budget.
struct BudgetExceeded : std::runtime_error {
    unsigned long long estimate;
    explicit BudgetExceeded(const std::string& msg, unsigned long long est = 0)
        : std::runtime_error(msg), estimate(est) {}
};

/// An operation's precondition does not hold (e.g. descend on a non-upper-bound).
struct PreconditionFailure : std::runtime_error {
    explicit PreconditionFailure(const std::string& msg) : std::runtime_error(msg) {}
};

/// Size caps for the exponential constructions. Defaults err small.
struct Budget {
    int max_enum_size = 6;                    // enumeration streams refuse beyond this
    int hard_wall = 7;                        // never raise max_enum_size past this
    unsigned long long max_chains = 1u << 20; // Kalmbach extensions refuse beyond this
    unsigned long long max_search = 1u << 22; // uniqueness searches refuse beyond this
};

} // namespace ewb

#endif
