#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace psi {

// Unbounded integer. BigNat values are kept nonnegative by every producer in
// this library; BigInt is the same representation used where signs occur
// (polynomial coefficients, intermediate differences).
using BigInt = boost::multiprecision::cpp_int;
using BigNat = boost::multiprecision::cpp_int;

// Raised when a division that must be exact leaves a remainder. Seeing one
// means a closed-form formula was transcribed wrongly.
class ExactDivisionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Strictly increasing primes, exponents >= 1. Empty for n = 1.
using Factorization = std::vector<PrimePower>;

BigNat pow(const BigNat& base, unsigned exponent);
BigNat pow(std::uint64_t base, unsigned exponent);

// a / b, throwing ExactDivisionError when b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b);

BigNat gcd(const BigNat& a, const BigNat& b);
// Requires a and b not both zero.
BigNat lcm(const BigNat& a, const BigNat& b);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

// Deterministic primality test for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Trial division up to sqrt(n). Throws std::invalid_argument for n = 0.
Factorization factorize(std::uint64_t n);

std::uint64_t multiply_out(const Factorization& f);

std::string to_decimal(const BigInt& v);

// Parses a non-empty string of decimal digits.
BigNat parse_decimal(const std::string& s);

}  // namespace psi
