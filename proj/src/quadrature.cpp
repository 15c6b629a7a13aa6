#include "rkhs/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace rkhs {

std::string to_string(QuadKind q) {
    switch (q) {
        case QuadKind::trapezoid: return "trapezoid";
        case QuadKind::gauss_legendre: return "gauss_legendre";
        case QuadKind::gauss_hermite: return "gauss_hermite";
    }
    throw std::logic_error("unreachable quad kind");
}

QuadKind quad_kind_from_string(const std::string& name) {
    if (name == "trapezoid") return QuadKind::trapezoid;
    if (name == "gauss_legendre") return QuadKind::gauss_legendre;
    if (name == "gauss_hermite") return QuadKind::gauss_hermite;
    throw std::invalid_argument("unknown quadrature rule: " + name);
}

QuadRule trapezoid_rule(double a, double b, std::size_t n) {
    if (n < 2) throw std::invalid_argument("trapezoid_rule: need n >= 2");
    if (!(b > a)) throw std::invalid_argument("trapezoid_rule: need b > a");
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double h = (b - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        rule.nodes[i] = a + h * static_cast<double>(i);
        rule.weights[i] = (i == 0 || i == n - 1) ? h / 2.0 : h;
    }
    return rule;
}

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights are
// mu0 * (first eigenvector component)^2.
static QuadRule golub_welsch(const Eigen::VectorXd& offdiag, double mu0) {
    const Eigen::Index n = offdiag.size() + 1;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        J(i, i + 1) = offdiag[i];
        J(i + 1, i) = offdiag[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    QuadRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()[i];
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
    }
    return rule;
}

QuadRule gauss_legendre_rule(std::size_t n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_rule: need n >= 1");
    if (!(b > a)) throw std::invalid_argument("gauss_legendre_rule: need b > a");
    Eigen::VectorXd off(static_cast<Eigen::Index>(n) - 1);
    for (std::size_t k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        off[static_cast<Eigen::Index>(k - 1)] = kk / std::sqrt(4.0 * kk * kk - 1.0);
    }
    QuadRule rule = golub_welsch(off, 2.0);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < n; ++i) {
        rule.nodes[i] = mid + half * rule.nodes[i];
        rule.weights[i] *= half;
    }
    return rule;
}

QuadRule gauss_hermite_rule(std::size_t n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite_rule: need n >= 1");
    Eigen::VectorXd off(static_cast<Eigen::Index>(n) - 1);
    for (std::size_t k = 1; k < n; ++k)
        off[static_cast<Eigen::Index>(k - 1)] = std::sqrt(static_cast<double>(k) / 2.0);
    return golub_welsch(off, std::sqrt(M_PI));
}

}  // namespace rkhs
