#include "psi/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "psi/psi_core.hpp"

namespace psi {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> coeffs(degree + 1, BigInt(0));
  coeffs[degree] = c;
  return IntPoly(std::move(coeffs));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPoly::degree() const {
  if (is_zero()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigInt IntPoly::evaluate(const BigInt& at) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<BigInt> out = a.coeffs_;
  for (auto& c : out) c = -c;
  return IntPoly(std::move(out));
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  const std::size_t db = *b.degree();
  const BigInt& lead = b.coeffs().back();
  std::vector<BigInt> rem = a.coeffs();
  if (rem.size() < db + 1) {
    if (a.is_zero()) return IntPoly();
    throw ExactDivisionError("polynomial " + b.to_string() + " does not divide " + a.to_string());
  }
  std::vector<BigInt> quot(rem.size() - db, BigInt(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    const BigInt& top = rem[i + db];
    if (top == 0) continue;
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(top, lead, q, r);
    if (r != 0) {
      throw ExactDivisionError("polynomial " + b.to_string() + " does not divide " +
                               a.to_string() + " over the integers");
    }
    quot[i] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * b.coeffs()[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) {
    throw ExactDivisionError("polynomial " + b.to_string() + " does not divide " + a.to_string() +
                             " (remainder " + IntPoly(rem).to_string() + ")");
  }
  return IntPoly(std::move(quot));
}

IntPoly psi_symbolic(const Partition& shape) {
  IntPoly sum;
  for (unsigned alpha = 0; alpha < shape.largest(); ++alpha) {
    sum += IntPoly::monomial(1, 2 * alpha + f_exponent(shape, alpha));
  }
  const IntPoly x_minus_1 = IntPoly(std::vector<BigInt>{-1, 1});
  return IntPoly::monomial(1, shape.n() + shape.largest()) - x_minus_1 * sum;
}

namespace {

IntPoly xp(std::size_t d) { return IntPoly::monomial(1, d); }
const IntPoly kOne = IntPoly::constant(1);

// Numerator and denominator of each closed form, built symbolically.
IntPoly closed_2a(unsigned n) { return exact_div(xp(2 * n + 1) + kOne, xp(1) + kOne); }

IntPoly closed_2b(unsigned n) { return xp(n + 1) - xp(1) + kOne; }

IntPoly closed_2c(unsigned n) { return xp(n + 2) - xp(n + 1) + xp(n) - xp(1) + kOne; }

IntPoly closed_2d(unsigned a1, unsigned a2) {
  const unsigned top = 2 * a2 + a1;
  const IntPoly num = xp(top + 3) + xp(top + 2) + xp(top + 1) + xp(3 * a1 + 2) + xp(1) + kOne;
  const IntPoly den = (xp(1) + kOne) * (xp(2) + xp(1) + kOne);
  return exact_div(num, den);
}

IntPoly closed_2e(unsigned a1, unsigned a2, unsigned a3) {
  const IntPoly first = exact_div(xp(2 * a3 + a2 + a1 + 1) + xp(3 * a2 + a1 + 2), xp(1) + kOne);
  const IntPoly second = exact_div(xp(3 * a2 + a1 + 3) - xp(4 * a1 + 3), xp(2) + xp(1) + kOne);
  const IntPoly third = exact_div(xp(4 * a1 + 4) - kOne, xp(3) + xp(2) + xp(1) + kOne);
  return first - second - third;
}

template <typename Build>
ClosedFormCheck run_check(std::string family, const IntPoly& reference, Build&& build) {
  ClosedFormCheck check;
  check.family = std::move(family);
  try {
    check.closed_form = build();
    check.residual = reference - check.closed_form;
    check.equal = check.residual.is_zero();
  } catch (const ExactDivisionError& e) {
    check.error = e.what();
    check.equal = false;
  }
  return check;
}

}  // namespace

bool ClosedFormReport::all_equal() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.equal; });
}

ClosedFormReport verify_closed_form(const Partition& shape) {
  const IntPoly reference = psi_symbolic(shape);
  const auto& a = shape.parts();
  const unsigned n = shape.n();
  ClosedFormReport report{shape, {}};

  if (shape.k() == 1) {
    report.checks.push_back(run_check("corollary2a", reference, [&] { return closed_2a(n); }));
  }
  if (shape == Partition::elementary(n)) {
    report.checks.push_back(run_check("corollary2b", reference, [&] { return closed_2b(n); }));
  }
  const bool near_elem = shape.largest() == 2 &&
                         std::all_of(a.begin(), a.end() - 1, [](unsigned v) { return v == 1; });
  if (near_elem) {
    report.checks.push_back(run_check("corollary2c", reference, [&] { return closed_2c(n); }));
  }
  if (shape.k() == 2) {
    report.checks.push_back(
        run_check("corollary2d", reference, [&] { return closed_2d(a[0], a[1]); }));
  }
  if (shape.k() == 3) {
    report.checks.push_back(
        run_check("corollary2e", reference, [&] { return closed_2e(a[0], a[1], a[2]); }));
  }
  if (report.checks.empty()) {
    throw std::invalid_argument("no closed form applies to shape " + shape.to_string());
  }
  return report;
}

}  // namespace psi
