#include "zetamax/primes.hpp"

#include <stdexcept>

namespace zetamax {

PrimeTable sieve_primes(std::uint64_t limit) {
    if (limit < 2 || limit > 100'000'000ull)
        throw std::domain_error("sieve_primes: limit must be in [2, 1e8]");
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    PrimeTable table;
    table.limit = limit;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) table.primes.push_back(static_cast<std::uint32_t>(i));
    return table;
}

} // namespace zetamax
