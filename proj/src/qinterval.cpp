#include "ewb/qinterval.hpp"

namespace ewb {

namespace {

void check_range(const BigRational& v) {
    if (v < 0 || v > 1) throw MalformedInput("rational outside [0,1]");
}

} // namespace

UnitRational::UnitRational(long long num, long long den) {
    if (den == 0) throw MalformedInput("zero denominator");
    v_ = BigRational(num, den);
    check_range(v_);
}

UnitRational::UnitRational(BigRational v) : v_(std::move(v)) { check_range(v_); }

std::string UnitRational::str() const {
    if (denominator(v_) == 1) return numerator(v_).str();
    return numerator(v_).str() + "/" + denominator(v_).str();
}

std::optional<UnitRational> q_sum(const UnitRational& a, const UnitRational& b) {
    BigRational s = a.value() + b.value();
    if (s > 1) return std::nullopt;
    return UnitRational(s);
}

UnitRational q_perp(const UnitRational& a) { return UnitRational(1 - a.value()); }

UnitRational q_mul(const UnitRational& a, const UnitRational& b) {
    return UnitRational(a.value() * b.value());
}

std::optional<UnitRational> q_diff(const UnitRational& a, const UnitRational& b) {
    if (a.value() < b.value()) return std::nullopt;
    return UnitRational(a.value() - b.value());
}

bool valid_rchain(const RationalChain& c) {
    if (c.points.size() % 2 != 0) return false;
    for (size_t i = 0; i + 1 < c.points.size(); ++i)
        if (!(c.points[i] < c.points[i + 1])) return false;
    return true;
}

RationalChain s_chain(int n) {
    if (n < 1) throw MalformedInput("ladder index must be positive");
    RationalChain c;
    for (int d = 2 * n; d >= 1; --d) c.points.emplace_back(1, d);
    return c;
}

bool rchain_leq(const RationalChain& s, const RationalChain& t) {
    if (!valid_rchain(s) || !valid_rchain(t)) throw MalformedInput("not a valid chain");
    for (size_t i = 0; i + 1 < s.points.size(); i += 2) {
        bool covered = false;
        for (size_t j = 0; j + 1 < t.points.size(); j += 2)
            if (t.points[j] <= s.points[i] && s.points[i + 1] <= t.points[j + 1]) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool is_upper_bound_all(const RationalChain& c) {
    if (!valid_rchain(c)) throw MalformedInput("not a valid chain");
    if (c.points.empty()) return false;
    if (!(c.points.front() == UnitRational(0, 1))) return false;
    const UnitRational& first_end = c.points[1];

    // rung k is [1/2k, 1/(2k-1)); once its right end drops to first_end or
    // below, this rung and every deeper one fits inside [0, first_end)
    for (long long k = 1;; ++k) {
        UnitRational hi(1, 2 * k - 1);
        if (hi <= first_end) return true;
        UnitRational lo(1, 2 * k);
        bool covered = false;
        for (size_t j = 0; j + 1 < c.points.size(); j += 2)
            if (c.points[j] <= lo && hi <= c.points[j + 1]) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
}

RationalChain descend(const RationalChain& c) {
    if (!is_upper_bound_all(c))
        throw PreconditionFailure("chain is not an upper bound of the ladder");
    const UnitRational& first_end = c.points[1];
    long long k = 1;
    while (!(UnitRational(1, 2 * k - 1) <= first_end)) ++k;

    RationalChain out;
    out.points.push_back(c.points.front());
    out.points.emplace_back(1, 2 * k + 1);
    out.points.emplace_back(1, 2 * k);
    out.points.insert(out.points.end(), c.points.begin() + 1, c.points.end());

    if (!valid_rchain(out) || !rchain_leq(out, c) || out.points == c.points ||
        !is_upper_bound_all(out))
        throw PreconditionFailure("descent certification failed");
    return out;
}

std::vector<RationalChain> no_lub_witness(int steps) {
    if (steps < 1) throw MalformedInput("step count must be positive");
    std::vector<RationalChain> out;
    RationalChain c;
    c.points = {UnitRational(0, 1), UnitRational(1, 1)};
    out.push_back(c);
    for (int i = 0; i < steps; ++i) {
        c = descend(c);
        out.push_back(c);
    }
    return out;
}

std::string rchain_text(const RationalChain& c) {
    std::string out = "[";
    for (size_t i = 0; i < c.points.size(); ++i) {
        if (i > 0) out += " < ";
        out += c.points[i].str();
    }
    return out + "]";
}

} // namespace ewb
