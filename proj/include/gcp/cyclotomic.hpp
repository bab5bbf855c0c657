#pragma once

#include "gcp/numeric.hpp"

#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace gcp {

namespace detail {
struct CyclotomicModulus;
}

/// Integer coefficients of the N-th cyclotomic polynomial, constant term
/// first. Computed by dividing x^N - 1 by every Phi_d with d | N, d < N.
std::vector<BigInt> cyclotomic_polynomial(int conductor);

/// Euler's totient, i.e. deg Phi_N.
int euler_phi(int n);

/// An element of Q(zeta_N), stored in the power basis 1, z, ..., z^{d-1}
/// with d = phi(N) and kept reduced modulo Phi_N.
///
/// Conductors 1 and 2 both describe Q and are stored as conductor 1.
/// Binary operations accept two operands of equal conductor or one
/// rational operand (which is promoted); anything else throws
/// std::invalid_argument.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(int value);  // NOLINT: implicit, Eigen constructs Scalar(0)
  Cyclotomic(const BigInt& value);  // NOLINT
  Cyclotomic(const Rational& value);  // NOLINT

  /// zeta_N^exponent.
  static Cyclotomic root_of_unity(int conductor, long exponent);

  /// sum_k coeffs[k] * zeta_N^k for an arbitrary-length coefficient list,
  /// reduced modulo Phi_N.
  static Cyclotomic reduce(int conductor, std::span<const Rational> coeffs);

  int conductor() const;
  /// Power-basis coefficients, length phi(conductor).
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error unless is_rational().
  Rational rational_value() const;

  /// Complex conjugate, the Galois action zeta -> zeta^{N-1}.
  Cyclotomic conj() const;
  /// Throws std::domain_error on zero.
  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& scale);
  Cyclotomic& operator/=(const Cyclotomic& other);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Renders in the power basis with the generator written `z<N>`
  /// (or `ζ<N>` when unicode is set), e.g. "-z3 - 1".
  std::string to_string(bool unicode = false) const;

 private:
  Cyclotomic(std::shared_ptr<const detail::CyclotomicModulus> modulus,
             std::vector<Rational> coeffs);
  void promote_to(const std::shared_ptr<const detail::CyclotomicModulus>& modulus);
  void align(Cyclotomic& other);

  std::shared_ptr<const detail::CyclotomicModulus> modulus_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline std::string to_string(const Cyclotomic& x) { return x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }
inline Cyclotomic conj(const Cyclotomic& x) { return x.conj(); }

}  // namespace gcp

namespace Eigen {

template <>
struct NumTraits<gcp::Cyclotomic> : GenericNumTraits<gcp::Cyclotomic> {
  typedef gcp::Cyclotomic Real;
  typedef gcp::Cyclotomic NonInteger;
  typedef gcp::Cyclotomic Literal;
  typedef gcp::Cyclotomic Nested;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 200,
    MulCost = 1000
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
