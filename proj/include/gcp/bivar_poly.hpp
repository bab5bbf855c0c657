#pragma once

#include "gcp/cyclotomic.hpp"
#include "gcp/numeric.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace gcp {

/// Which pair of indeterminates a polynomial is written in.
enum class Variables { lambda_mu, u_t };

inline std::pair<std::string, std::string> variable_names(Variables vars, bool unicode = false) {
  if (vars == Variables::u_t) return {"u", "t"};
  if (unicode) return {"λ", "μ"};
  return {"l", "m"};
}

/// Exponent pair (i, j) of the monomial x^i y^j.
using Exponent = std::pair<int, int>;

/// Graded-lex, descending: higher total degree first, then higher power of
/// the first variable. Iterating a BivarPoly's terms yields canonical order.
struct GradedLexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = a.first + a.second;
    const int db = b.first + b.second;
    if (da != db) return da > db;
    return a.first > b.first;
  }
};

/// One term of the structured polynomial form.
struct TermRecord {
  int i;
  int j;
  std::string coefficient;
};

/// Sparse polynomial in two variables with exact coefficients of type C
/// (BigInt, Rational or Cyclotomic). Zero coefficients are never stored.
template <class C>
class BivarPoly {
 public:
  using Coefficient = C;
  using TermMap = std::map<Exponent, C, GradedLexDescending>;

  explicit BivarPoly(Variables vars = Variables::lambda_mu) : vars_(vars) {}

  static BivarPoly constant(const C& c, Variables vars = Variables::lambda_mu) {
    return monomial(c, 0, 0, vars);
  }
  static BivarPoly monomial(const C& c, int i, int j, Variables vars = Variables::lambda_mu) {
    BivarPoly p(vars);
    p.add_term(i, j, c);
    return p;
  }
  /// The first variable (λ or u).
  static BivarPoly x(Variables vars = Variables::lambda_mu) { return monomial(C(1), 1, 0, vars); }
  /// The second variable (μ or t).
  static BivarPoly y(Variables vars = Variables::lambda_mu) { return monomial(C(1), 0, 1, vars); }

  Variables variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(int i, int j, const C& c) {
    if (i < 0 || j < 0) throw std::invalid_argument("negative exponent in polynomial term");
    if (gcp::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (inserted) return;
    it->second += c;
    if (gcp::is_zero(it->second)) terms_.erase(it);
  }

  int degree_x() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
  }
  int degree_y() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
  }
  int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.first + terms_.begin()->first.second; }

  BivarPoly operator-() const {
    BivarPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  BivarPoly& operator+=(const BivarPoly& other) {
    check_vars(other);
    for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
    return *this;
  }
  BivarPoly& operator-=(const BivarPoly& other) {
    check_vars(other);
    for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, -c);
    return *this;
  }
  BivarPoly& operator*=(const BivarPoly& other) { return *this = *this * other; }

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    a.check_vars(b);
    BivarPoly out(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
      }
    }
    return out;
  }
  friend BivarPoly operator*(const BivarPoly& a, const C& s) {
    BivarPoly out(a.vars_);
    for (const auto& [e, c] : a.terms_) out.add_term(e.first, e.second, c * s);
    return out;
  }
  friend BivarPoly operator*(const C& s, const BivarPoly& a) { return a * s; }

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
    if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (e != it->first || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }

 private:
  void check_vars(const BivarPoly& other) const {
    if (vars_ != other.vars_) throw std::invalid_argument("polynomial variable mismatch");
  }

  Variables vars_;
  TermMap terms_;
};

template <class C>
BivarPoly<C> pow(const BivarPoly<C>& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative polynomial power");
  BivarPoly<C> result = BivarPoly<C>::constant(C(1), base.variables());
  BivarPoly<C> square = base;
  while (exponent > 0) {
    if (exponent & 1) result *= square;
    exponent >>= 1;
    if (exponent > 0) square *= square;
  }
  return result;
}

/// d/dx (d/dλ).
template <class C>
BivarPoly<C> partial_x(const BivarPoly<C>& p) {
  BivarPoly<C> out(p.variables());
  for (const auto& [e, c] : p.terms()) {
    if (e.first > 0) out.add_term(e.first - 1, e.second, c * C(e.first));
  }
  return out;
}

/// d/dy (d/dμ).
template <class C>
BivarPoly<C> partial_y(const BivarPoly<C>& p) {
  BivarPoly<C> out(p.variables());
  for (const auto& [e, c] : p.terms()) {
    if (e.second > 0) out.add_term(e.first, e.second - 1, c * C(e.second));
  }
  return out;
}

template <class C>
BivarPoly<C> partial_mu(const BivarPoly<C>& p) {
  return partial_y(p);
}

/// Exact value at (x, y). V must be constructible from C and closed under
/// + and *; for integer polynomials use Rational points.
template <class V, class C>
V evaluate(const BivarPoly<C>& p, const V& x, const V& y) {
  const int dx = std::max(p.degree_x(), 0);
  const int dy = std::max(p.degree_y(), 0);
  std::vector<V> xs(dx + 1, V(1));
  std::vector<V> ys(dy + 1, V(1));
  for (int k = 1; k <= dx; ++k) xs[k] = xs[k - 1] * x;
  for (int k = 1; k <= dy; ++k) ys[k] = ys[k - 1] * y;
  V sum(0);
  for (const auto& [e, c] : p.terms()) sum += V(c) * xs[e.first] * ys[e.second];
  return sum;
}

inline Rational evaluate(const BivarPoly<BigInt>& p, const Rational& x, const Rational& y) {
  return evaluate<Rational, BigInt>(p, x, y);
}

/// p(X, Y) for polynomial arguments X, Y; the result is written in the
/// variables of X and Y.
template <class C>
BivarPoly<C> compose(const BivarPoly<C>& p, const BivarPoly<C>& x, const BivarPoly<C>& y) {
  const Variables vars = x.variables();
  const int dx = std::max(p.degree_x(), 0);
  const int dy = std::max(p.degree_y(), 0);
  std::vector<BivarPoly<C>> xs{BivarPoly<C>::constant(C(1), vars)};
  std::vector<BivarPoly<C>> ys{BivarPoly<C>::constant(C(1), vars)};
  for (int k = 1; k <= dx; ++k) xs.push_back(xs.back() * x);
  for (int k = 1; k <= dy; ++k) ys.push_back(ys.back() * y);
  BivarPoly<C> out(vars);
  for (const auto& [e, c] : p.terms()) out += (xs[e.first] * ys[e.second]) * c;
  return out;
}

/// λ -> λ + mu_coeff·μ + constant.
template <class C>
BivarPoly<C> substitute_lambda(const BivarPoly<C>& p, const C& mu_coeff, const C& constant) {
  const Variables vars = p.variables();
  BivarPoly<C> shifted = BivarPoly<C>::x(vars);
  shifted.add_term(0, 1, mu_coeff);
  shifted.add_term(0, 0, constant);
  return compose(p, shifted, BivarPoly<C>::y(vars));
}

/// Converts coefficients through f (e.g. BigInt -> Cyclotomic, or
/// Rational -> BigInt with an integrality check inside f).
template <class D, class C, class F>
BivarPoly<D> map_coefficients(const BivarPoly<C>& p, F&& f) {
  BivarPoly<D> out(p.variables());
  for (const auto& [e, c] : p.terms()) out.add_term(e.first, e.second, f(c));
  return out;
}

inline BivarPoly<Cyclotomic> to_cyclotomic(const BivarPoly<BigInt>& p) {
  return map_coefficients<Cyclotomic>(p, [](const BigInt& c) { return Cyclotomic(c); });
}

/// Throws std::domain_error if any coefficient is not a rational integer.
inline BivarPoly<BigInt> to_integer_poly(const BivarPoly<Cyclotomic>& p) {
  return map_coefficients<BigInt>(p, [](const Cyclotomic& c) { return to_integer(c.rational_value()); });
}

inline BivarPoly<BigInt> to_integer_poly(const BivarPoly<Rational>& p) {
  return map_coefficients<BigInt>(p, [](const Rational& c) { return to_integer(c); });
}

/// Coefficient-wise complex conjugate.
inline BivarPoly<Cyclotomic> conj(const BivarPoly<Cyclotomic>& p) {
  return map_coefficients<Cyclotomic>(p, [](const Cyclotomic& c) { return c.conj(); });
}

namespace detail {

struct SignedCoefficient {
  bool negative;
  bool is_one;
  std::string magnitude;  // already parenthesized when compound
};

inline SignedCoefficient split_sign(const BigInt& c, bool) {
  return {sgn(c) < 0, abs(c) == 1, BigInt(abs(c)).get_str()};
}
inline SignedCoefficient split_sign(const Rational& c, bool) {
  return {sgn(c) < 0, abs(c) == 1, Rational(abs(c)).get_str()};
}
inline SignedCoefficient split_sign(const Cyclotomic& c, bool unicode) {
  if (c.is_rational()) return split_sign(c.rational_value(), unicode);
  return {false, false, "(" + c.to_string(unicode) + ")"};
}

}  // namespace detail

/// Canonical text: terms in graded-lex descending order, explicit `^`
/// exponents, `*` between factors, e.g. "l^2 + 2*l*m + m^2 - 1".
template <class C>
std::string to_string(const BivarPoly<C>& p, bool unicode = false) {
  if (p.is_zero()) return "0";
  const auto [xname, yname] = variable_names(p.variables(), unicode);
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const auto coeff = detail::split_sign(c, unicode);
    if (first) {
      if (coeff.negative) out << '-';
    } else {
      out << (coeff.negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    const bool constant_term = e.first == 0 && e.second == 0;
    if (!coeff.is_one || constant_term) factors.push_back(coeff.magnitude);
    if (e.first > 0) factors.push_back(e.first == 1 ? xname : xname + "^" + std::to_string(e.first));
    if (e.second > 0) factors.push_back(e.second == 1 ? yname : yname + "^" + std::to_string(e.second));
    for (std::size_t k = 0; k < factors.size(); ++k) out << (k ? "*" : "") << factors[k];
  }
  return out.str();
}

/// Structured form: one record per stored term, in canonical order.
template <class C>
std::vector<TermRecord> term_records(const BivarPoly<C>& p, bool unicode = false) {
  std::vector<TermRecord> out;
  for (const auto& [e, c] : p.terms()) {
    std::string text;
    if constexpr (std::is_same_v<C, Cyclotomic>) {
      text = c.to_string(unicode);
    } else {
      text = c.get_str();
    }
    out.push_back({e.first, e.second, std::move(text)});
  }
  return out;
}

/// Exact quotient num / den when den divides num in Z[x, y]; empty if the
/// division leaves a remainder. The leading coefficient of den (graded-lex)
/// must divide every leading coefficient encountered.
std::optional<BivarPoly<BigInt>> divide_exact(const BivarPoly<BigInt>& num, const BivarPoly<BigInt>& den);

}  // namespace gcp
