#include "gcp/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gcp {

BigInt to_integer(const Rational& x) {
  if (x.get_den() != 1) {
    throw std::domain_error("value " + x.get_str() + " is not an integer");
  }
  return x.get_num();
}

namespace detail {

struct CyclotomicModulus {
  int conductor;
  int degree;
  std::vector<Rational> phi;  // monic, size degree + 1
};

}  // namespace detail

namespace {

using detail::CyclotomicModulus;
using RationalPoly = std::vector<Rational>;

void trim(RationalPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Exact division of integer polynomials by a monic divisor.
std::vector<BigInt> divide_monic(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<BigInt> quotient(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const BigInt c = num[k];
    quotient[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dn; ++t) num[k - dn + t] -= c * den[t];
  }
  for (std::size_t t = 0; t < dn; ++t) {
    if (num[t] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quotient;
}

std::pair<RationalPoly, RationalPoly> divmod(RationalPoly num, const RationalPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {RationalPoly{}, num};
  RationalPoly quotient(num.size() - dn);
  const Rational lead = den.back();
  for (std::size_t k = num.size(); k-- > dn;) {
    const Rational c = num[k] / lead;
    quotient[k - dn] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t t = 0; t <= dn; ++t) num[k - dn + t] -= c * den[t];
  }
  num.resize(dn);
  trim(num);
  trim(quotient);
  return {quotient, num};
}

RationalPoly multiply(const RationalPoly& a, const RationalPoly& b) {
  if (a.empty() || b.empty()) return {};
  RationalPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RationalPoly subtract(RationalPoly a, const RationalPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

int normalize_conductor(int conductor) {
  if (conductor < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
  return conductor <= 2 ? 1 : conductor;
}

std::shared_ptr<const CyclotomicModulus> modulus_for(int conductor) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CyclotomicModulus>> cache;
  conductor = normalize_conductor(conductor);
  std::lock_guard lock(mutex);
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;
  auto modulus = std::make_shared<CyclotomicModulus>();
  modulus->conductor = conductor;
  if (conductor == 1) {
    // Q itself: reduce modulo x - 1.
    modulus->degree = 1;
    modulus->phi = {Rational(-1), Rational(1)};
  } else {
    const auto phi = cyclotomic_polynomial(conductor);
    modulus->degree = static_cast<int>(phi.size()) - 1;
    modulus->phi.assign(phi.begin(), phi.end());
  }
  cache.emplace(conductor, modulus);
  return modulus;
}

std::vector<Rational> reduce_raw(const CyclotomicModulus& m, std::vector<Rational> raw) {
  const std::size_t d = m.degree;
  for (std::size_t k = raw.size(); k-- > d;) {
    const Rational c = raw[k];
    if (sgn(c) == 0) continue;
    for (std::size_t t = 0; t < d; ++t) raw[k - d + t] -= c * m.phi[t];
    raw[k] = 0;
  }
  raw.resize(d);
  return raw;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int conductor) {
  if (conductor < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<BigInt>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(conductor); it != cache.end()) return it->second;
  }
  std::vector<BigInt> poly(conductor + 1, 0);
  poly[0] = -1;
  poly[conductor] = 1;
  for (int d = 1; d < conductor; ++d) {
    if (conductor % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  cache.emplace(conductor, poly);
  return poly;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic::Cyclotomic() : Cyclotomic(Rational(0)) {}
Cyclotomic::Cyclotomic(int value) : Cyclotomic(Rational(value)) {}
Cyclotomic::Cyclotomic(const BigInt& value) : Cyclotomic(Rational(value)) {}
Cyclotomic::Cyclotomic(const Rational& value) : modulus_(modulus_for(1)), coeffs_{value} {}

Cyclotomic::Cyclotomic(std::shared_ptr<const detail::CyclotomicModulus> modulus,
                       std::vector<Rational> coeffs)
    : modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::root_of_unity(int conductor, long exponent) {
  conductor = normalize_conductor(conductor);
  if (conductor == 1) {
    // conductor 2 collapses here as well: zeta_2 = -1
    return Cyclotomic(Rational(exponent % 2 == 0 ? 1 : -1));
  }
  long k = exponent % conductor;
  if (k < 0) k += conductor;
  std::vector<Rational> raw(conductor);
  raw[k] = 1;
  return reduce(conductor, raw);
}

Cyclotomic Cyclotomic::reduce(int conductor, std::span<const Rational> coeffs) {
  if (normalize_conductor(conductor) == 1 && conductor == 2) {
    // zeta_2 = -1
    Rational value = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) value += (k % 2 == 0) ? coeffs[k] : -coeffs[k];
    return Cyclotomic(value);
  }
  auto modulus = modulus_for(conductor);
  std::vector<Rational> raw(coeffs.begin(), coeffs.end());
  if (raw.size() < static_cast<std::size_t>(modulus->degree)) raw.resize(modulus->degree);
  auto reduced = reduce_raw(*modulus, std::move(raw));
  return Cyclotomic(std::move(modulus), std::move(reduced));
}

int Cyclotomic::conductor() const { return modulus_->conductor; }

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return false;
  }
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value " + to_string() + " is not rational");
  return coeffs_.front();
}

Cyclotomic Cyclotomic::conj() const {
  const int n = conductor();
  if (n == 1) return *this;
  std::vector<Rational> raw(n);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) raw[(n - k) % n] += coeffs_[k];
  return Cyclotomic(modulus_, reduce_raw(*modulus_, std::move(raw)));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
  if (conductor() == 1) return Cyclotomic(Rational(1) / coeffs_.front());
  // Extended Euclid in Q[x] against the irreducible modulus.
  RationalPoly r0 = modulus_->phi;
  RationalPoly r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  RationalPoly s0;
  RationalPoly s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RationalPoly next = subtract(s0, multiply(q, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  // r0 is a nonzero constant because Phi_N is irreducible.
  if (r0.size() != 1) throw std::logic_error("cyclotomic modulus is not coprime to operand");
  for (auto& c : s0) c /= r0.front();
  return Cyclotomic(modulus_, reduce_raw(*modulus_, std::move(s0)));
}

void Cyclotomic::promote_to(const std::shared_ptr<const detail::CyclotomicModulus>& modulus) {
  const Rational value = coeffs_.front();
  coeffs_.assign(modulus->degree, Rational(0));
  coeffs_[0] = value;
  modulus_ = modulus;
}

void Cyclotomic::align(Cyclotomic& other) {
  if (modulus_ == other.modulus_) return;
  if (other.conductor() == 1) {
    other.promote_to(modulus_);
  } else if (conductor() == 1) {
    promote_to(other.modulus_);
  } else {
    throw std::invalid_argument("cyclotomic conductor mismatch: " + std::to_string(conductor()) +
                                " vs " + std::to_string(other.conductor()));
  }
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  Cyclotomic rhs = other;
  align(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  Cyclotomic rhs = other;
  align(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (other.conductor() == 1) return *this *= other.coeffs_.front();
  if (conductor() == 1) {
    const Rational scale = coeffs_.front();
    *this = other;
    return *this *= scale;
  }
  Cyclotomic rhs = other;
  align(rhs);
  std::vector<Rational> raw(2 * coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      raw[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = reduce_raw(*modulus_, std::move(raw));
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& other) { return *this *= other.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.modulus_ == b.modulus_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_.front() == b.coeffs_.front();
  return false;
}

std::string Cyclotomic::to_string(bool unicode) const {
  const std::string generator = (unicode ? "ζ" : "z") + std::to_string(conductor());
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str() << '*';
    out << generator;
    if (k > 1) out << '^' << k;
  }
  if (first) out << '0';
  return out.str();
}

}  // namespace gcp
