#include "rlab/repvar/gamma4.hpp"

#include <algorithm>
#include <future>

#include "rlab/poly/factor.hpp"
#include "rlab/repvar/representation.hpp"

namespace rlab {

namespace {

const std::vector<std::string> kVars{"x", "y", "r"};

std::pair<MultiPoly, int> normalize_with_sign(const MultiPoly& p) {
  MultiPoly n = p.normalized();
  int sign = (p.leading_coeff() > 0) == (n.leading_coeff() > 0) ? 1 : -1;
  return {n, sign};
}

UniPoly to_uni(const MultiPoly& p, const std::string& var) {
  return UniPoly::from_multi(p, var).primitive();
}

MultiPoly to_multi_xyr(const UniPoly& p) { return p.to_multi().with_vars(kVars); }

bool is_spurious(const UniPoly& f, const std::vector<UniPoly>& spurious) {
  return std::find(spurious.begin(), spurious.end(), f) != spurious.end();
}

std::vector<FactorRecord> factor_records(const UniPoly& f, const std::vector<UniPoly>& spurious) {
  std::vector<FactorRecord> out;
  for (const auto& [g, e] : factor_univariate(f).factors)
    out.push_back({g, e, is_spurious(g, spurious)});
  return out;
}

template <class F>
auto launch(bool parallel, F&& f) {
  return std::async(parallel ? std::launch::async : std::launch::deferred, std::forward<F>(f));
}

// Resultant that tolerates a side of degree zero in `var`: Res(c, g) = c^deg g.
MultiPoly resultant_or_power(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
  if (f.degree(var) <= 0) return f.pow(static_cast<unsigned>(std::max(g.degree(var), 0)));
  if (g.degree(var) <= 0) return g.pow(static_cast<unsigned>(std::max(f.degree(var), 0)));
  return resultant(f, g, var);
}

// Product of the distinct non-spurious irreducible factors.
UniPoly nonspurious_radical(const std::vector<FactorRecord>& factors, const std::string& var) {
  UniPoly out(var, {1});
  for (const auto& f : factors)
    if (!f.spurious) out = out * f.factor;
  return out.primitive();
}

UniPoly positive(UniPoly p) {
  if (!p.is_zero() && p.lc() < 0) p = -p;
  return p;
}

}  // namespace

Gamma4Options Gamma4Options::defaults() {
  Gamma4Options o;
  o.first = {parse_word("b a^-2 b a^-1 b^2 a b^2 a^-1"), 5};
  o.second = {parse_word("a^2 b a b^2 a b a^2 b^-1"), 4};
  for (const char* s : {"x", "x^2 + 1", "x^2 + x + 1", "x^2 - x + 1"})
    o.spurious.push_back(UniPoly::parse(s, "x"));
  return o;
}

UniPoly palindromic_trace_polynomial(const UniPoly& f, const std::string& var) {
  int n = f.degree();
  if (n < 0 || n % 2 != 0 || !is_palindromic(f))
    throw std::invalid_argument("trace polynomial needs a palindromic polynomial of even degree");
  int m = n / 2;
  UniPoly rem = f;
  UniPoly x2p1(f.var(), {1, 0, 1});
  std::vector<BigRational> q(m + 1);
  for (int k = m; k >= 0; --k) {
    BigRational c = rem.coeff(m + k);
    q[k] = c;
    if (c == 0) continue;
    UniPoly term(f.var(), {1});
    for (int i = 0; i < k; ++i) term = term * x2p1;
    std::vector<BigRational> shift(m - k + 1);
    shift.back() = c;
    rem = rem - UniPoly(f.var(), shift) * term;
  }
  if (!rem.is_zero()) throw std::logic_error("palindromic reduction left a remainder");
  return UniPoly(var, q);
}

RigidityCertificate gamma4_pipeline(const Gamma4Options& options) {
  RigidityCertificate cert;
  const bool par = options.parallel;
  std::vector<UniPoly> spurious;
  for (const auto& s : options.spurious) spurious.push_back(positive(s.primitive().with_var("x")));

  Assignment rho = standard_assignment();

  // R and the solved parameter.
  ResidualMatrix first;
  try {
    first = relation_residual(options.first.relator, options.first.split, rho);
  } catch (const std::exception& e) {
    throw PipelineError("R", e.what());
  }
  cert.R = first.matrix;
  std::tie(cert.r12_numerator, cert.r12_sign) = normalize_with_sign(first.numerators[1]);
  try {
    cert.r_solution = solve_linear_parameter(first, 1, 2, "r");
  } catch (const std::exception& e) {
    throw PipelineError("solve-r", e.what());
  }

  // R1 and the constraint C(x, y).
  cert.R1 = cert.R.substitute("r", cert.r_solution);
  if (!cert.R1.at(1, 2).is_zero()) throw PipelineError("R1", "entry (1,2) does not vanish");
  MultiPoly c22 = cert.R1.at(2, 2).num();
  for (const auto& g : spurious) {
    auto [q, k] = divide_out(c22, to_multi_xyr(g));
    if (k > 0) cert.r1_22_discarded.push_back({g, k, true});
    c22 = q;
  }
  cert.constraint = c22.normalized();
  if (!cert.constraint.involves("y") || !cert.constraint.involves("x"))
    throw PipelineError("R1", "constraint from entry (2,2) does not involve both x and y: " +
                                  cert.constraint.to_string());

  // S.
  ResidualMatrix second;
  try {
    second = relation_residual(options.second.relator, options.second.split, rho);
  } catch (const std::exception& e) {
    throw PipelineError("S", e.what());
  }
  SymMat2 S = second.matrix.substitute("r", cert.r_solution);
  for (int k = 0; k < 4; ++k) {
    std::tie(cert.s[k], cert.s_signs[k]) = normalize_with_sign(S.entries()[k].num());
    cert.s_denominators[k] = S.entries()[k].den().normalized();
    if (cert.s[k].degree("y") <= 0)
      throw PipelineError("S", "numerator s" + std::to_string(k + 1) + " does not involve y");
  }

  // Eliminate y: Res_y(C, s_i).
  {
    std::vector<std::future<UniPoly>> jobs;
    for (int k = 0; k < 4; ++k)
      jobs.push_back(launch(par, [&cert, k] {
        return positive(to_uni(resultant(cert.constraint, cert.s[k], "y"), "x"));
      }));
    for (int k = 0; k < 4; ++k) cert.x_eliminants[k] = jobs[k].get();
  }
  UniPoly g = cert.x_eliminants[0];
  for (int k = 0; k < 4; ++k) {
    if (cert.x_eliminants[k].is_zero())
      throw PipelineError("eliminate-y", "Res_y(C, s" + std::to_string(k + 1) + ") vanishes");
    cert.x_eliminant_factors[k] = factor_records(cert.x_eliminants[k], spurious);
    if (k > 0) g = gcd(g, cert.x_eliminants[k]);
  }
  cert.x_gcd = positive(g.primitive());
  cert.x_gcd_factors = factor_records(cert.x_gcd, spurious);
  cert.x_poly_by_gcd = nonspurious_radical(cert.x_gcd_factors, "x");

  std::vector<FactorRecord> common;
  for (const auto& f : cert.x_eliminant_factors[0]) {
    bool everywhere = true;
    for (int k = 1; k < 4 && everywhere; ++k)
      everywhere = std::any_of(cert.x_eliminant_factors[k].begin(), cert.x_eliminant_factors[k].end(),
                               [&](const FactorRecord& h) { return h.factor == f.factor; });
    if (everywhere) common.push_back(f);
  }
  cert.x_poly_by_intersection = nonspurious_radical(common, "x");
  if (!(cert.x_poly_by_gcd == cert.x_poly_by_intersection))
    throw PipelineError("eliminate-y", "gcd route gives " + cert.x_poly_by_gcd.to_string() +
                                           " but factor intersection gives " +
                                           cert.x_poly_by_intersection.to_string());
  cert.x_poly = cert.x_poly_by_gcd;
  if (cert.x_poly.degree() < 1) {
    std::string left;
    for (const auto& f : cert.x_gcd_factors) left += " " + f.factor.to_string();
    throw PipelineError("eliminate-y", "no common non-spurious factor; gcd factors:" + left);
  }
  if (common.size() - std::count_if(common.begin(), common.end(),
                                    [](const FactorRecord& f) { return f.spurious; }) > 1) {
    std::string list;
    for (const auto& f : common)
      if (!f.spurious) list += " (" + f.factor.to_string() + ")";
    throw PipelineError("eliminate-y", "several non-spurious common factors:" + list);
  }
  cert.x_poly_palindromic = is_palindromic(cert.x_poly);
  if (!cert.x_poly_palindromic)
    throw PipelineError("eliminate-y", "x-polynomial " + cert.x_poly.to_string() + " is not palindromic");

  // Eliminate x: Res_x(p, C).
  MultiPoly p_xyr = to_multi_xyr(cert.x_poly);
  cert.y_eliminant = positive(to_uni(resultant(p_xyr, cert.constraint, "x"), "y"));
  cert.y_eliminant_factors = factor_records(cert.y_eliminant, {});
  for (const auto& f : cert.y_eliminant_factors) cert.y_polys.push_back(f.factor);
  if (cert.y_polys.size() == 2) {
    UniPoly flipped = positive(cert.y_polys[0].compose(UniPoly("y", {0, -1})).primitive());
    cert.y_polys_related_by_sign = flipped == cert.y_polys[1];
  }
  UniPoly p_in_y = cert.x_poly.with_var("y");
  if (std::find(cert.y_polys.begin(), cert.y_polys.end(), p_in_y) == cert.y_polys.end())
    throw PipelineError("eliminate-x", "the x-polynomial is not among the y-polynomials");

  // Eliminate against the entries of R to constrain r.
  {
    std::vector<std::future<MultiPoly>> stage1;
    for (int k = 0; k < 4; ++k)
      stage1.push_back(launch(par, [&first, &p_xyr, k] {
        return resultant_or_power(first.numerators[k], p_xyr, "x");
      }));
    std::vector<MultiPoly> in_yr;
    for (auto& f : stage1) in_yr.push_back(f.get());
    std::vector<std::future<UniPoly>> stage2;
    for (int k = 0; k < 4; ++k)
      for (const auto& q : cert.y_polys) {
        MultiPoly qm = to_multi_xyr(q);
        stage2.push_back(launch(par, [&in_yr, qm, k] {
          MultiPoly e = resultant_or_power(in_yr[k], qm, "y");
          return e.is_zero() ? UniPoly("r") : positive(to_uni(e, "r"));
        }));
      }
    for (auto& f : stage2) cert.r_eliminants.push_back(f.get());
  }
  UniPoly rg("r");
  for (const auto& e : cert.r_eliminants) rg = rg.is_zero() ? e : gcd(rg, e);
  cert.r_gcd = positive(rg.primitive());
  if (cert.r_gcd.degree() < 1) throw PipelineError("eliminate-r", "entry eliminants have no common factor");
  cert.r_poly = UniPoly("r", {1});
  for (const auto& g2 : irreducible_factors(cert.r_gcd)) cert.r_poly = cert.r_poly * g2;
  cert.r_poly = positive(cert.r_poly.primitive());

  // Character polynomial and the identity p(x) = x^m q(x + 1/x).
  UniPoly q0 = palindromic_trace_polynomial(cert.x_poly, "X");
  cert.character_poly = positive(q0.primitive());
  {
    auto xr = RationalFunction::variable({"x"}, "x");
    RationalFunction s = xr + xr.inverse();
    RationalFunction acc = RationalFunction::constant({"x"}, 0);
    const auto& qc = q0.coeffs();
    for (auto it = qc.rbegin(); it != qc.rend(); ++it)
      acc = acc * s + RationalFunction::constant({"x"}, *it);
    int m = cert.x_poly.degree() / 2;
    for (int i = 0; i < m; ++i) acc = acc * xr;
    RationalFunction target(cert.x_poly.to_multi());
    cert.character_identity = acc == target;
    if (!cert.character_identity)
      throw PipelineError("character", "p(x) is not x^m q(x + 1/x)");
  }
  return cert;
}

}  // namespace rlab
