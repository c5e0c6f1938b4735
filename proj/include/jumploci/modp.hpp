#pragma once

#include <cstdint>

#include "jumploci/variety.hpp"

namespace jumploci {

enum class OracleOutcome { equal, differ, inconclusive };

struct OracleReport {
    OracleOutcome outcome = OracleOutcome::inconclusive;
    std::vector<unsigned> primes_used;
    unsigned witness_prime = 0;
    std::vector<std::uint64_t> witness;  // a point separating the two sides
    std::string note;
};

inline const std::vector<unsigned> default_oracle_primes{5, 7, 11};

// Pointwise comparison of two variety descriptions over (F_p^*)^n (torus) or
// F_p^n (affine), for each prime. A mismatch yields a witness; agreement over
// all usable primes reports `equal` (a probabilistic statement by nature).
OracleReport varieties_equal_mod_p(const VarietyDescription& a, const VarietyDescription& b,
                                   const std::vector<unsigned>& primes = default_oracle_primes,
                                   std::uint64_t point_budget = 10'000'000);

// One-sided containment a ⊆ b by the same enumeration.
OracleReport variety_contained_mod_p(const VarietyDescription& a, const VarietyDescription& b,
                                     const std::vector<unsigned>& primes = default_oracle_primes,
                                     std::uint64_t point_budget = 10'000'000);

}  // namespace jumploci
