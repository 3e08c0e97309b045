#ifndef EWB_QINTERVAL_HPP
#define EWB_QINTERVAL_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ewb/report.hpp"

namespace ewb {

using BigRational = boost::multiprecision::cpp_rational;

/// An exact rational confined to [0,1], kept in lowest terms. No floating
/// point: chain comparisons downstream are semantic strict inequalities.
class UnitRational {
public:
    UnitRational() = default; // zero
    UnitRational(long long num, long long den);
    explicit UnitRational(BigRational v);

    const BigRational& value() const { return v_; }
    std::string str() const;

    friend bool operator==(const UnitRational& a, const UnitRational& b) {
        return a.v_ == b.v_;
    }
    friend bool operator!=(const UnitRational& a, const UnitRational& b) {
        return a.v_ != b.v_;
    }
    friend bool operator<(const UnitRational& a, const UnitRational& b) {
        return a.v_ < b.v_;
    }
    friend bool operator<=(const UnitRational& a, const UnitRational& b) {
        return a.v_ <= b.v_;
    }

private:
    BigRational v_ = 0;
};

/// a + b when it stays inside the interval; nullopt past 1.
std::optional<UnitRational> q_sum(const UnitRational& a, const UnitRational& b);
UnitRational q_perp(const UnitRational& a);
UnitRational q_mul(const UnitRational& a, const UnitRational& b);
/// a - b when b <= a; nullopt otherwise.
std::optional<UnitRational> q_diff(const UnitRational& a, const UnitRational& b);

/// An even-length strictly increasing list of rationals, read as half-open
/// intervals [p1,p2), [p3,p4), ...
struct RationalChain {
    std::vector<UnitRational> points;
};

bool valid_rchain(const RationalChain& c);

/// [1/2n < 1/(2n-1) < ... < 1/2 < 1], length 2n. Requires n >= 1.
RationalChain s_chain(int n);

/// Interval containment: every interval of s lies inside one of t. The empty
/// chain sits below everything.
bool rchain_leq(const RationalChain& s, const RationalChain& t);

/// Whether c lies above s_chain(n) for every n >= 1 at once. Decided by a
/// closed form: c must start at 0, and each of the finitely many ladder
/// intervals whose right end exceeds c's first interval must fit inside some
/// interval of c; all deeper rungs fall into [0, c_2) automatically.
bool is_upper_bound_all(const RationalChain& c);

/// A strictly smaller chain that is still above every ladder rung: splits
/// the first interval by inserting {1/(2k+1), 1/2k} for the least k with
/// 1/(2k-1) <= c's first interval end. The gap removed contains no rung.
/// Throws PreconditionFailure unless is_upper_bound_all(c).
RationalChain descend(const RationalChain& c);

/// steps+1 chains starting at [0<1], each strictly below its predecessor and
/// each above every ladder rung: no upper bound can be least.
std::vector<RationalChain> no_lub_witness(int steps);

std::string rchain_text(const RationalChain& c);

} // namespace ewb

#endif
