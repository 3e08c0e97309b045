#ifndef EWB_ENUMERATE_HPP
#define EWB_ENUMERATE_HPP

#include <string>
#include <vector>

#include "ewb/effect_algebra.hpp"
#include "ewb/effect_monoid.hpp"
#include "ewb/report.hpp"

namespace ewb {

/// All effect algebras of sizes 2..max_size, one canonical representative
/// per isomorphism class, sorted by (size, canonical key). The parallel
/// entry point splits the table search across OpenMP threads; the serial one
/// is the reference implementation kept for testing. Outputs are identical.
std::vector<FinEffectAlgebra> enumerate_effect_algebras(int max_size, const Budget& budget = {});
std::vector<FinEffectAlgebra> enumerate_effect_algebras_serial(int max_size,
                                                               const Budget& budget = {});

/// Same contract for effect monoids: every carrier algebra, every lawful
/// multiplication table, deduplicated up to multiplicative isomorphism.
std::vector<FinEffectMonoid> enumerate_effect_monoids(int max_size, const Budget& budget = {});
std::vector<FinEffectMonoid> enumerate_effect_monoids_serial(int max_size,
                                                             const Budget& budget = {});

/// Compact dump of a monoid's tables, for counterexample artifacts.
std::string em_table_text(const FinEffectMonoid& m);

struct CensusReport {
    int max_size = 0;
    std::vector<int> ea_count; // per size, index 0 unused
    std::vector<int> em_count;
    std::vector<std::string> classified; // one line per monoid
    bool all_boolean = false;
    bool all_commutative = false;
    std::string counterexample; // empty iff every classification succeeded
    double seconds = 0.0;       // wall time, excluded from canonical_text

    /// Byte-stable rendering: identical across runs and thread counts.
    std::string canonical_text() const;
};

/// Enumerates every monoid up to max_size, classifies each as a power of
/// {0,1}, and checks commutativity. A classification failure lands in the
/// counterexample slot instead of being dropped.
CensusReport census(int max_size, const Budget& budget = {});

} // namespace ewb

#endif
