#include "rlab/poly/cyclotomic.hpp"

#include <stdexcept>

namespace rlab {

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

UniPoly cyclotomic_polynomial(unsigned long m, const std::string& var) {
  if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  std::vector<BigRational> c(m + 1, BigRational(0));
  c[0] = -1;
  c[m] = 1;
  UniPoly acc(var, std::move(c));
  for (unsigned long d = 1; d < m; ++d)
    if (m % d == 0) acc = acc.divmod(cyclotomic_polynomial(d, var)).first;
  return acc;
}

UniPoly chebyshev_two_cos(unsigned long k, const std::string& var) {
  UniPoly prev(var, {2}), cur = UniPoly::x(var);
  if (k == 0) return prev;
  for (unsigned long i = 1; i < k; ++i) {
    UniPoly next = UniPoly::x(var) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

UniPoly minpoly_two_cos_pi_over(unsigned long n, const std::string& var) {
  if (n < 3) throw std::invalid_argument("minpoly_two_cos_pi_over: n must be at least 3");
  // Phi_{2n}(z) = z^h * Psi(z + 1/z) with h = phi(2n)/2; peel off the
  // palindromic coefficients from the top using z^j + z^-j = V_j(u).
  UniPoly phi = cyclotomic_polynomial(2 * n, var);
  const int h = phi.degree() / 2;
  std::vector<BigRational> sym(static_cast<std::size_t>(h) + 1);
  for (int j = 0; j <= h; ++j) sym[static_cast<std::size_t>(j)] = phi.coeff(static_cast<std::size_t>(h + j));
  // phi(z)/z^h = sym[0] + sum_j sym[j] (z^j + z^-j)
  UniPoly psi(var, {sym[0]});
  for (int j = 1; j <= h; ++j)
    psi = psi + UniPoly(var, {sym[static_cast<std::size_t>(j)]}) * chebyshev_two_cos(static_cast<unsigned long>(j), var);
  return psi.primitive();
}

}  // namespace rlab
