#include "psi/psi_core.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace psi {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

}  // namespace

PGroupType::PGroupType(std::uint64_t p, Partition shape) : p_(p), shape_(std::move(shape)) {
  require_prime(p_);
}

AbelianGroupType::AbelianGroupType(Components components) : components_(std::move(components)) {
  for (const auto& [p, shape] : components_) require_prime(p);
}

BigNat AbelianGroupType::order() const {
  BigNat n = 1;
  for (const auto& [p, shape] : components_) n *= pow(p, shape.n());
  return n;
}

std::vector<std::uint64_t> AbelianGroupType::cyclic_moduli() const {
  std::vector<std::uint64_t> moduli;
  for (const auto& [p, shape] : components_) {
    for (const unsigned a : shape.parts()) {
      std::uint64_t m = 1;
      for (unsigned i = 0; i < a; ++i) {
        if (m > std::numeric_limits<std::uint64_t>::max() / p) {
          throw std::overflow_error("cyclic factor does not fit in 64 bits");
        }
        m *= p;
      }
      moduli.push_back(m);
    }
  }
  return moduli;
}

unsigned f_exponent(const Partition& shape, unsigned alpha) {
  const auto& a = shape.parts();
  const unsigned k = shape.k();
  unsigned prefix = 0;  // a_1 + ... + a_j
  for (unsigned j = 0; j < k; ++j) {
    if (alpha <= a[j]) return (k - 1 - j) * alpha + prefix;
    if (j + 1 < k) prefix += a[j];
  }
  // alpha > a_k: past every breakpoint, the last branch is constant.
  return prefix;
}

BigNat f_eval(const Partition& shape, std::uint64_t p, unsigned alpha) {
  return pow(p, f_exponent(shape, alpha));
}

BigNat psi_p(const PGroupType& g) {
  const Partition& shape = g.shape();
  const std::uint64_t p = g.p();
  BigInt total = 1;
  for (unsigned alpha = 1; alpha <= shape.largest(); ++alpha) {
    total += pow(p, 2 * alpha + f_exponent(shape, alpha));
    total -= pow(p, 2 * alpha - 1 + f_exponent(shape, alpha - 1));
  }
  return total;
}

BigNat psi_p_alt(const PGroupType& g) {
  const Partition& shape = g.shape();
  const std::uint64_t p = g.p();
  BigInt sum = 0;
  for (unsigned alpha = 0; alpha < shape.largest(); ++alpha) {
    sum += pow(p, 2 * alpha + f_exponent(shape, alpha));
  }
  // 2 a_k + a_{k-1} + ... + a_1 = n + a_k
  return pow(p, shape.n() + shape.largest()) - BigInt(p - 1) * sum;
}

BigNat psi_cyclic(std::uint64_t p, unsigned n) {
  require_prime(p);
  if (n < 1) throw std::invalid_argument("psi_cyclic: n must be >= 1");
  return exact_div(pow(p, 2 * n + 1) + 1, BigInt(p) + 1);
}

BigNat psi_elem_abelian(std::uint64_t p, unsigned n) {
  require_prime(p);
  if (n < 1) throw std::invalid_argument("psi_elem_abelian: n must be >= 1");
  return pow(p, n + 1) - p + 1;
}

BigNat psi_near_elem(std::uint64_t p, unsigned n) {
  require_prime(p);
  if (n < 2) throw std::invalid_argument("psi_near_elem: n must be >= 2");
  return pow(p, n + 2) - pow(p, n + 1) + pow(p, n) - p + 1;
}

BigNat psi_rank2(std::uint64_t p, unsigned a1, unsigned a2) {
  require_prime(p);
  if (a1 < 1 || a2 < a1) throw std::invalid_argument("psi_rank2: need 1 <= a1 <= a2");
  const unsigned top = 2 * a2 + a1;
  const BigInt num = pow(p, top + 3) + pow(p, top + 2) + pow(p, top + 1) + pow(p, 3 * a1 + 2) +
                     p + 1;
  const BigInt den = (BigInt(p) + 1) * (BigInt(p) * p + p + 1);
  return exact_div(num, den);
}

BigNat psi_rank3(std::uint64_t p, unsigned a1, unsigned a2, unsigned a3) {
  require_prime(p);
  if (a1 < 1 || a2 < a1 || a3 < a2) {
    throw std::invalid_argument("psi_rank3: need 1 <= a1 <= a2 <= a3");
  }
  const BigInt P(p);
  const BigInt first = exact_div(pow(p, 2 * a3 + a2 + a1 + 1) + pow(p, 3 * a2 + a1 + 2), P + 1);
  const BigInt second =
      exact_div(pow(p, 3 * a2 + a1 + 3) - pow(p, 4 * a1 + 3), P * P + P + 1);
  const BigInt third = exact_div(pow(p, 4 * a1 + 4) - 1, P * P * P + P * P + P + 1);
  return first - second - third;
}

BigNat psi_abelian(const AbelianGroupType& g) {
  BigNat total = 1;
  for (const auto& [p, shape] : g.components()) total *= psi_p(PGroupType(p, shape));
  return total;
}

std::vector<AbelianGroupType> group_types_of_order(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("group_types_of_order: n must be positive");
  const Factorization f = factorize(n);
  std::vector<std::vector<Partition>> choices;
  choices.reserve(f.size());
  for (const auto& pe : f) choices.push_back(partitions_of(pe.exponent));

  std::vector<AbelianGroupType> out;
  std::vector<std::size_t> idx(f.size(), 0);
  while (true) {
    AbelianGroupType::Components comps;
    for (std::size_t i = 0; i < f.size(); ++i) comps.emplace(f[i].prime, choices[i][idx[i]]);
    out.emplace_back(std::move(comps));
    // Odometer with the last prime varying fastest.
    std::size_t i = f.size();
    while (i > 0) {
      --i;
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (f.empty()) return out;
  }
}

}  // namespace psi
