#ifndef WHRANK_NUMTHEORY_HPP
#define WHRANK_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace whrank {

struct PrimePower {
  std::uint64_t p;
  unsigned k;
};

bool is_prime(std::uint64_t n);

// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// Returns (p, k) with n = p^k, k >= 1, or nothing.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Residues a in [1, n) with gcd(a, n) = 1; {0} is returned for n = 1 as the
// single residue class.
std::vector<std::uint64_t> units_mod(std::uint64_t n);

// Least e >= 1 with a^e = 1 mod n; requires gcd(a, n) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

// a mod n normalized into [0, n).
std::uint64_t reduce_mod(long long a, std::uint64_t n);

// Overflow-checked product; nothing on overflow.
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

}  // namespace whrank

#endif  // WHRANK_NUMTHEORY_HPP
