#pragma once

// Exact scalar determinants and determinants of polynomial matrices by
// evaluation on an integer grid followed by bivariate interpolation.

#include "gcp/bivar_poly.hpp"
#include "gcp/cyclotomic.hpp"
#include "gcp/numeric.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace gcp {

namespace detail {

inline void exact_divide_in_place(BigInt& value, const BigInt& divisor) {
  mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
}

// Runs body(0..count-1) across hardware threads. Each index must write only
// its own output slot; the first exception thrown is rethrown here.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < count; k = next++) {
          try {
            body(k);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

/// Fraction-free (Bareiss) elimination over Z. Every intermediate entry is
/// a minor of the input, so each division is exact.
inline BigInt bareiss_determinant(Mat<BigInt> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  BigInt previous = 1;
  BigInt scratch;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && sgn(m(pivot, k)) == 0) ++pivot;
      if (pivot == n) return 0;
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        // m(i,j) = (m(i,j) m(k,k) - m(i,k) m(k,j)) / previous
        mpz_mul(scratch.get_mpz_t(), m(i, j).get_mpz_t(), m(k, k).get_mpz_t());
        mpz_submul(scratch.get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
        detail::exact_divide_in_place(scratch, previous);
        mpz_swap(m(i, j).get_mpz_t(), scratch.get_mpz_t());
      }
    }
    previous = m(k, k);
  }
  return sign < 0 ? BigInt(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

/// Gaussian elimination over a field (Rational or Cyclotomic).
template <class T>
T field_determinant(Mat<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  T det(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && is_zero(m(pivot, k))) ++pivot;
    if (pivot == n) return T(0);
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      det = -det;
    }
    det *= m(k, k);
    const T inverse = T(1) / m(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (is_zero(m(i, k))) continue;
      const T factor = m(i, k) * inverse;
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return det;
}

inline BigInt determinant(const Mat<BigInt>& m) { return bareiss_determinant(m); }
inline Rational determinant(const Mat<Rational>& m) { return field_determinant(m); }
inline Cyclotomic determinant(const Mat<Cyclotomic>& m) { return field_determinant(m); }

/// How grid values of scalar type T are interpolated and brought back.
template <class T>
struct InterpolationTraits;

template <>
struct InterpolationTraits<BigInt> {
  using Field = Rational;
  static Field lift(const BigInt& v) { return Rational(v); }
  /// Integrality assertion: every interpolated coefficient has denominator 1.
  static BivarPoly<BigInt> finish(const BivarPoly<Rational>& p) { return to_integer_poly(p); }
};

template <>
struct InterpolationTraits<Rational> {
  using Field = Rational;
  static Field lift(const Rational& v) { return v; }
  static BivarPoly<Rational> finish(BivarPoly<Rational> p) { return p; }
};

template <>
struct InterpolationTraits<Cyclotomic> {
  using Field = Cyclotomic;
  static Field lift(const Cyclotomic& v) { return v; }
  static BivarPoly<Cyclotomic> finish(BivarPoly<Cyclotomic> p) { return p; }
};

/// Monomial coefficients of the unique polynomial of degree <= d taking
/// values[k] at x = origin + k, k = 0..d (Newton forward differences).
template <class F>
std::vector<F> interpolate_uniform(std::vector<F> values, long origin) {
  const std::size_t d = values.empty() ? 0 : values.size() - 1;
  for (std::size_t k = 1; k <= d; ++k) {
    const Rational step(1, static_cast<long>(k));
    for (std::size_t i = d; i >= k; --i) values[i] = (values[i] - values[i - 1]) * step;
  }
  std::vector<F> coeffs(d + 1, F(0));
  if (values.empty()) return coeffs;
  coeffs[0] = values[d];
  for (std::size_t k = d; k-- > 0;) {
    const Rational node(origin + static_cast<long>(k));
    // coeffs <- coeffs * (x - node) + values[k]
    for (std::size_t j = d; j > 0; --j) coeffs[j] = coeffs[j - 1] - coeffs[j] * node;
    coeffs[0] = values[k] - coeffs[0] * node;
  }
  return coeffs;
}

/// Lower-left corner of the interpolation grid.
struct GridOrigin {
  long x = 0;
  long y = 0;
};

/// det M(x, y) for a matrix whose determinant has degree <= deg_x in x and
/// <= deg_y in y. evaluate(x, y) must return the scalar matrix M(x, y);
/// it is called once per node of the (deg_x+1) x (deg_y+1) grid starting at
/// origin, possibly from several threads.
template <class T, class Evaluate>
BivarPoly<T> det_interpolate(Evaluate&& evaluate, int deg_x, int deg_y, Variables vars,
                             GridOrigin origin = {}) {
  using Traits = InterpolationTraits<T>;
  using F = typename Traits::Field;
  if (deg_x < 0 || deg_y < 0) throw std::invalid_argument("negative degree bound");
  const std::size_t nx = deg_x + 1;
  const std::size_t ny = deg_y + 1;
  std::vector<F> values(nx * ny, F(0));
  detail::parallel_for(nx * ny, [&](std::size_t k) {
    const long a = origin.x + static_cast<long>(k / ny);
    const long b = origin.y + static_cast<long>(k % ny);
    values[k] = Traits::lift(determinant(evaluate(a, b)));
  });

  // Interpolate along x for each fixed y, then along y per x-power.
  std::vector<std::vector<F>> by_y(ny);
  for (std::size_t b = 0; b < ny; ++b) {
    std::vector<F> column(nx, F(0));
    for (std::size_t a = 0; a < nx; ++a) column[a] = values[a * ny + b];
    by_y[b] = interpolate_uniform(std::move(column), origin.x);
  }
  BivarPoly<F> result(vars);
  for (std::size_t i = 0; i < nx; ++i) {
    std::vector<F> row(ny, F(0));
    for (std::size_t b = 0; b < ny; ++b) row[b] = by_y[b][i];
    const auto coeffs = interpolate_uniform(std::move(row), origin.y);
    for (std::size_t j = 0; j < ny; ++j) result.add_term(static_cast<int>(i), static_cast<int>(j), coeffs[j]);
  }
  return Traits::finish(result);
}

/// Square matrix with entries affine in (λ, μ):
/// entry(i,j) = constant(i,j) + λ·lambda(i,j) + μ·mu(i,j).
template <class T>
struct Pencil {
  Mat<T> constant;
  Mat<T> lambda;
  Mat<T> mu;

  Eigen::Index size() const { return constant.rows(); }

  Mat<T> at(long l, long m) const {
    Mat<T> out = constant;
    const T lv(l);
    const T mv(m);
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) {
        if (!is_zero(lambda(i, j))) out(i, j) += lv * lambda(i, j);
        if (!is_zero(mu(i, j))) out(i, j) += mv * mu(i, j);
      }
    }
    return out;
  }
};

/// Exact det of a pencil as a polynomial in (λ, μ), on the grid
/// {origin.x..origin.x+n} x {origin.y..origin.y+n}.
template <class T>
BivarPoly<T> det_pencil(const Pencil<T>& pencil, GridOrigin origin = {}) {
  const Eigen::Index n = pencil.size();
  if (pencil.constant.cols() != n || pencil.lambda.rows() != n || pencil.lambda.cols() != n ||
      pencil.mu.rows() != n || pencil.mu.cols() != n) {
    throw std::invalid_argument("pencil matrices must be square and of equal size");
  }
  const int degree = static_cast<int>(n);
  return det_interpolate<T>([&](long l, long m) { return pencil.at(l, m); }, degree, degree,
                            Variables::lambda_mu, origin);
}

}  // namespace gcp
