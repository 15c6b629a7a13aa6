#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rkhs {

enum class QuadKind { trapezoid, gauss_legendre, gauss_hermite };

std::string to_string(QuadKind q);
QuadKind quad_kind_from_string(const std::string& name);

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Composite trapezoid on [a,b] with n >= 2 equispaced nodes.
QuadRule trapezoid_rule(double a, double b, std::size_t n);

/// n-point Gauss-Legendre on [a,b] (Golub-Welsch).
QuadRule gauss_legendre_rule(std::size_t n, double a, double b);

/// n-point Gauss-Hermite for the weight e^{-x^2}: sum w_i g(x_i) ~ int e^{-x^2} g.
QuadRule gauss_hermite_rule(std::size_t n);

}  // namespace rkhs
