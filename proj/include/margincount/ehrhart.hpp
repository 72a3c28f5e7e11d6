#ifndef MARGINCOUNT_EHRHART_HPP
#define MARGINCOUNT_EHRHART_HPP

#include <vector>

#include <gmpxx.h>

#include "margincount/enumerate.hpp"

namespace margincount {

using Rational = mpq_class;

// Exact-rational polynomial, coefficients in ascending degree.
struct RationalPoly {
    std::vector<Rational> coeffs;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Number of n x n N-valued matrices with every row and column sum r.
BigCount h_value(int n, int r);

/* Interpolation values (H_n(-n-k+1), ..., H_n(k)) with k = C(n-1,2): the
 * directly computed H_n(0..k), the n-1 interior zeros, and the reflected
 * values H_n(-n-r) = (-1)^((n-1)^2) H_n(r). */
std::vector<BigCount> stanley_vector(int n);

/* Solve the Vandermonde system on the nodes -n-k+1..k for the polynomial
 * coefficients, by fraction-free elimination over exact integers. */
RationalPoly solve_coefficients(int n, const std::vector<BigCount>& v);

// Exact Horner evaluation at an integer argument.
Rational evaluate(const RationalPoly& poly, long r);

// stanley_vector + solve_coefficients for the Birkhoff polytope of order n.
RationalPoly birkhoff_polynomial(int n);

}  // namespace margincount

#endif
