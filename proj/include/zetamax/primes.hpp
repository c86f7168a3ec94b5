#pragma once

#include <cstdint>
#include <vector>

namespace zetamax {

// Immutable, shareable list of all primes <= limit.
struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> primes;
};

/// Sieve of Eratosthenes; 2 <= limit <= 1e8.
PrimeTable sieve_primes(std::uint64_t limit);

} // namespace zetamax
