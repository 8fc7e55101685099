#pragma once

#include "rlab/poly/unipoly.hpp"

namespace rlab {

unsigned long euler_phi(unsigned long n);

/// The m-th cyclotomic polynomial in `var`.
UniPoly cyclotomic_polynomial(unsigned long m, const std::string& var = "x");

/// Minimal polynomial of 2cos(pi/n) over Q, degree phi(2n)/2. Requires n >= 3.
UniPoly minpoly_two_cos_pi_over(unsigned long n, const std::string& var = "x");

/// Value of 2cos(k*theta) as a polynomial in u = 2cos(theta).
UniPoly chebyshev_two_cos(unsigned long k, const std::string& var = "x");

}  // namespace rlab
