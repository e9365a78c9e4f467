#include "whrank/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace whrank {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t phi = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    phi = phi / p * (p - 1);
  }
  return phi;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{f[0].first, f[0].second};
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::vector<std::uint64_t> units_mod(std::uint64_t n) {
  if (n == 1) return {0};
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 1; a < n; ++a) {
    if (std::gcd(a, n) == 1) out.push_back(a);
  }
  return out;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (std::gcd(a, n) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
  if (n == 1) return 1;
  std::uint64_t x = a % n;
  std::uint64_t e = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * a % n);
    ++e;
  }
  return e;
}

std::uint64_t reduce_mod(long long a, std::uint64_t n) {
  long long m = static_cast<long long>(n);
  long long r = a % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    auto next = checked_mul(r, base);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

}  // namespace whrank
