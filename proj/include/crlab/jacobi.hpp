#pragma once

#include <string>
#include <vector>

namespace crlab {

struct JacobiParams {
    int n = 0;
    double alpha = 0.0;
    double beta = 0.0;
};

// Value of the Jacobi polynomial P_n^{(alpha,beta)} at x in [-1,1] via the
// standard three-term recurrence in the degree.
double jacobi_eval(const JacobiParams& p, double x);
double jacobi_eval(int n, double alpha, double beta, double x);

// First derivative d/dx P_n^{(alpha,beta)}(x), reduced to a degree n-1
// Jacobi polynomial with both parameters raised by one.
double jacobi_deriv(const JacobiParams& p, double x);
double jacobi_deriv(int n, double alpha, double beta, double x);

// Monomial coefficients c_k of the shifted polynomial
//   P_n^{(alpha,beta)}(1 - 2 t) = sum_k c_k t^k,
// computed from the hypergeometric expansion around x = 1; the coefficients
// are exact integers for the (alpha,beta) pairs used here and n <= 20.
std::vector<double> jacobi_shifted_coeffs(int n, double alpha, double beta);

// Closed-form values of the one-dimensional Jacobi integrals used by the
// kernel computations.  Defining integrands over [-1,1]:
//   I: (1+t) P_n^{(0,2)}         -> 4 (-1)^n / ((n+1)(n+2))
//   J: (1+t) (P_n^{(0,2)})^2     -> 2
//   S: P_n^{(0,2)}               -> 2 (-1)^n
//   L: (1-t) P_n^{(1,1)}         -> 4 (-1)^n / (n+2)
//   H: P_n^{(0,1)}               -> 2 (-1)^n / (n+1)
//   T: (1-t) P_n^{(0,2)} P_n^{(1,1)} -> 2 (n+1)
//   G: (1-t) P_n^{(2,0)} P_n^{(1,1)} -> 4 / (n+2)
enum class JacobiIntegralId { I, J, S, L, H, T, G };

double closed_form_integral(JacobiIntegralId id, int n);
JacobiIntegralId jacobi_integral_id_from_string(const std::string& name);
std::string to_string(JacobiIntegralId id);

struct GaussRule1D {
    std::vector<double> points;   // in [-1,1]
    std::vector<double> weights;
};

// Gauss-Legendre rule, exact for polynomials of degree 2n-1.
GaussRule1D gauss_legendre(int n);

// Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on [-1,1].
GaussRule1D gauss_jacobi(int n, double alpha, double beta);

}  // namespace crlab
