#pragma once

#include <cstdint>
#include <optional>

namespace c4lab {

// Deterministic primality for the full 64-bit range. Trial division settles
// n below 10^6; Miller-Rabin with the first twelve prime bases covers the rest.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Largest prime <= n, or nullopt when n < 2.
std::optional<std::uint64_t> prev_prime(std::uint64_t n);

// If q = p^k with p prime and k >= 1, returns {p, k}.
struct PrimePower {
  std::uint64_t p;
  unsigned k;
};
std::optional<PrimePower> as_prime_power(std::uint64_t q);

}  // namespace c4lab
