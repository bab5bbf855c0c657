#include "gcp/closed_forms.hpp"

#include <stdexcept>

namespace gcp {

namespace {

using P = BivarPoly<BigInt>;

// λ + aμ + b
P linear(long a, long b) {
  P p = P::x();
  p.add_term(0, 1, a);
  p.add_term(0, 0, b);
  return p;
}

BigInt power(long base, long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
  return out;
}

}  // namespace

BivarPoly<BigInt> gcp_Kst(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("K_{s,t} needs s, t >= 1");
  const P a = linear(t, 0);
  const P b = linear(s, 0);
  return pow(a, s - 1) * pow(b, t - 1) * (b * a - P::constant(BigInt(s) * t));
}

BivarPoly<BigInt> gcp_star_times_Kn(int m, int n) {
  if (m < 1 || n < 2) throw std::invalid_argument("K_{1,m} x K_n needs m >= 1, n >= 2");
  const P low = linear(n, -(n - 1));
  const P low_hub = linear(m + n - 1, -(n - 1));
  const P high = linear(n, 1);
  const P high_hub = linear(m + n - 1, 1);
  const P m_const = P::constant(m);
  return pow(low, m - 1) * (low * low_hub - m_const) * pow(high, (m - 1) * (n - 1)) *
         pow(high * high_hub - m_const, n - 1);
}

StarTimesKnTreeCount tree_count_star_times_Kn(int m, int n) {
  if (m < 1 || n < 2) throw std::invalid_argument("K_{1,m} x K_n needs m >= 1, n >= 2");
  const BigInt common = power(n, n - 2) * power(n + 1, static_cast<long>(m - 1) * (n - 1));
  return {common * power(m + n + 1, n - 1), common * power(m + n + 1, n + 1)};
}

long star_times_Kn_edges(int m, int n) {
  return static_cast<long>(m) * n + static_cast<long>(m + 1) * n * (n - 1) / 2;
}

}  // namespace gcp
