#include "crlab/jacobi.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace crlab {

namespace {

void check_params(const JacobiParams& p, double x) {
    if (p.n < 0) throw std::invalid_argument("jacobi: degree must be >= 0");
    if (p.alpha <= -1.0 || p.beta <= -1.0)
        throw std::invalid_argument("jacobi: parameters must be > -1");
    if (std::abs(x) > 1.0 + 1e-12)
        throw std::domain_error("jacobi: argument outside [-1,1]");
}

}  // namespace

double jacobi_eval(const JacobiParams& p, double x) {
    check_params(p, x);
    const double a = p.alpha, b = p.beta;
    if (p.n == 0) return 1.0;
    double pm1 = 1.0;
    double pc = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for (int n = 2; n <= p.n; ++n) {
        // 2n(n+a+b)(2n+a+b-2) P_n = (2n+a+b-1)[(2n+a+b)(2n+a+b-2)x + a^2-b^2] P_{n-1}
        //                           - 2(n+a-1)(n+b-1)(2n+a+b) P_{n-2}
        const double s = 2.0 * n + a + b;
        const double c1 = 2.0 * n * (n + a + b) * (s - 2.0);
        const double c2 = (s - 1.0) * (a * a - b * b);
        const double c3 = (s - 1.0) * s * (s - 2.0);
        const double c4 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * s;
        const double pn = ((c2 + c3 * x) * pc - c4 * pm1) / c1;
        pm1 = pc;
        pc = pn;
    }
    return pc;
}

double jacobi_eval(int n, double alpha, double beta, double x) {
    return jacobi_eval(JacobiParams{n, alpha, beta}, x);
}

double jacobi_deriv(const JacobiParams& p, double x) {
    check_params(p, x);
    if (p.n == 0) return 0.0;
    const double factor = 0.5 * (p.n + p.alpha + p.beta + 1.0);
    return factor * jacobi_eval(JacobiParams{p.n - 1, p.alpha + 1.0, p.beta + 1.0}, x);
}

double jacobi_deriv(int n, double alpha, double beta, double x) {
    return jacobi_deriv(JacobiParams{n, alpha, beta}, x);
}

std::vector<double> jacobi_shifted_coeffs(int n, double alpha, double beta) {
    if (n < 0) throw std::invalid_argument("jacobi_shifted_coeffs: degree must be >= 0");
    // P_n^{(a,b)}(x) = sum_l (n+a+b+1)_l (a+l+1)_{n-l} / (l! (n-l)!) ((x-1)/2)^l
    // with x = 1-2t, so ((x-1)/2)^l = (-t)^l.
    std::vector<double> c(static_cast<size_t>(n) + 1, 0.0);
    for (int l = 0; l <= n; ++l) {
        double term = 1.0;
        for (int j = 0; j < l; ++j) term *= (n + alpha + beta + 1.0 + j);
        for (int j = 0; j < n - l; ++j) term *= (alpha + l + 1.0 + j);
        for (int j = 2; j <= l; ++j) term /= j;
        for (int j = 2; j <= n - l; ++j) term /= j;
        c[static_cast<size_t>(l)] = (l % 2 == 0 ? term : -term);
    }
    return c;
}

double closed_form_integral(JacobiIntegralId id, int n) {
    if (n < 0) throw std::invalid_argument("closed_form_integral: n must be >= 0");
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    const double dn = n;
    switch (id) {
        case JacobiIntegralId::I: return 4.0 * sgn / ((dn + 1.0) * (dn + 2.0));
        case JacobiIntegralId::J: return 2.0;
        case JacobiIntegralId::S: return 2.0 * sgn;
        case JacobiIntegralId::L: return 4.0 * sgn / (dn + 2.0);
        case JacobiIntegralId::H: return 2.0 * sgn / (dn + 1.0);
        case JacobiIntegralId::T: return 2.0 * (dn + 1.0);
        case JacobiIntegralId::G: return 4.0 / (dn + 2.0);
    }
    throw std::logic_error("closed_form_integral: unknown id");
}

JacobiIntegralId jacobi_integral_id_from_string(const std::string& name) {
    if (name == "I") return JacobiIntegralId::I;
    if (name == "J") return JacobiIntegralId::J;
    if (name == "S") return JacobiIntegralId::S;
    if (name == "L") return JacobiIntegralId::L;
    if (name == "H") return JacobiIntegralId::H;
    if (name == "T") return JacobiIntegralId::T;
    if (name == "G") return JacobiIntegralId::G;
    throw std::invalid_argument("unknown integral id: " + name);
}

std::string to_string(JacobiIntegralId id) {
    switch (id) {
        case JacobiIntegralId::I: return "I";
        case JacobiIntegralId::J: return "J";
        case JacobiIntegralId::S: return "S";
        case JacobiIntegralId::L: return "L";
        case JacobiIntegralId::H: return "H";
        case JacobiIntegralId::T: return "T";
        case JacobiIntegralId::G: return "G";
    }
    return "?";
}

namespace {

// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal matrix
// built from the recurrence coefficients of the monic orthogonal polynomials,
// weights come from the first components of the eigenvectors.
GaussRule1D golub_welsch(int n, double alpha, double beta) {
    if (n < 1) throw std::invalid_argument("gauss rule needs n >= 1");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    const double ab = alpha + beta;
    const double mu0 = std::pow(2.0, ab + 1.0) * std::tgamma(alpha + 1.0) *
                       std::tgamma(beta + 1.0) / std::tgamma(ab + 2.0);
    for (int k = 0; k < n; ++k) {
        double ak;
        if (k == 0) {
            ak = (ab + 2.0 == 0.0) ? 0.0 : (beta - alpha) / (ab + 2.0);
        } else {
            const double d = 2.0 * k + ab;
            ak = (beta * beta - alpha * alpha) / (d * (d + 2.0));
        }
        J(k, k) = ak;
        if (k >= 1) {
            const double d = 2.0 * k + ab;
            const double bk = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                              (d * d * (d + 1.0) * (d - 1.0));
            const double off = std::sqrt(bk);
            J(k, k - 1) = off;
            J(k - 1, k) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("gauss rule: eigensolver failed");
    GaussRule1D rule;
    rule.points.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.points[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

}  // namespace

GaussRule1D gauss_legendre(int n) { return golub_welsch(n, 0.0, 0.0); }

GaussRule1D gauss_jacobi(int n, double alpha, double beta) {
    if (alpha <= -1.0 || beta <= -1.0)
        throw std::invalid_argument("gauss_jacobi: parameters must be > -1");
    return golub_welsch(n, alpha, beta);
}

}  // namespace crlab
