#pragma once

// Exact scalar types and their Eigen glue.
//
// Every matrix in this library is an Eigen dense matrix templated on an
// exact scalar: BigInt for integer pencils, Rational for interpolation,
// Cyclotomic for character-weighted pencils.

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>

namespace gcp {

using BigInt = mpz_class;
using Rational = mpq_class;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = Eigen::MatrixXi;

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Exact integer value of a rational; throws std::domain_error when the
/// denominator is not 1.
BigInt to_integer(const Rational& x);

}  // namespace gcp

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Literal;
  typedef mpz_class Nested;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 50,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Literal;
  typedef mpq_class Nested;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 150
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
