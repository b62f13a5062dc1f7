#include "psi/arith.hpp"

#include <array>
#include <limits>

namespace psi {

BigNat pow(const BigNat& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

BigNat pow(std::uint64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigNat(base), exponent);
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw ExactDivisionError("exact_div: division by zero");
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) {
    throw ExactDivisionError("exact_div: " + to_decimal(b) + " does not divide " +
                             to_decimal(a) + " (remainder " + to_decimal(r) + ")");
  }
  return q;
}

BigNat gcd(const BigNat& a, const BigNat& b) {
  return boost::multiprecision::gcd(a, b);
}

BigNat lcm(const BigNat& a, const BigNat& b) {
  if (a == 0 && b == 0) throw std::invalid_argument("lcm(0, 0) is undefined");
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 && b == 0) throw std::invalid_argument("lcm(0, 0) is undefined");
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kSmall = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (const std::uint64_t p : kSmall) {
    if (n % p == 0) return n == p;
  }
  // Miller-Rabin with the first twelve primes as witnesses is exact below
  // 3.3 * 10^24, which covers every 64-bit input.
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (const std::uint64_t a : kSmall) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization out;
  auto strip = [&](std::uint64_t p) {
    if (n % p != 0) return;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel.
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::uint64_t multiply_out(const Factorization& f) {
  std::uint64_t n = 1;
  for (const auto& [p, e] : f) {
    for (unsigned i = 0; i < e; ++i) {
      if (n > std::numeric_limits<std::uint64_t>::max() / p) {
        throw std::overflow_error("multiply_out: product exceeds 64 bits");
      }
      n *= p;
    }
  }
  return n;
}

std::string to_decimal(const BigInt& v) { return v.str(); }

BigNat parse_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty decimal string");
  for (const char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a decimal number: " + s);
  }
  return BigNat(s);
}

}  // namespace psi
