#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "rkhs/measures.hpp"

namespace rkhs {

/// A random variable on a finite probability space, X : Omega -> S.
struct DiscreteRandomVariable {
    Eigen::VectorXd probabilities;  // nonnegative, sums to 1 within 1e-12
    PointSet values;                // X(omega_i), in the kernel domain

    std::size_t omega_size() const { return values.size(); }
    void validate() const;
};

/// The distribution W_X(P) = P o X^{-1}: atoms at the distinct values of X
/// (exact coordinate equality, first-occurrence order), weights summed over
/// preimages.
SignedMeasure pushforward(const DiscreteRandomVariable& rv);

struct IsometryReport {
    double lhs;  // double integral of k(X(u),X(v)) over Omega x Omega
    double rhs;  // pairing of the pushforward with itself
    double gap;
};

IsometryReport isometry_check(const Kernel& k, const DiscreteRandomVariable& rv);

/// d_{H(k)}(mu,nu) = sqrt(<mu-nu, mu-nu>_k) via bilinear expansion.
double rkhs_distance(const Kernel& k, const SignedMeasure& mu, const SignedMeasure& nu);

struct LipschitzReport {
    double max_ratio;  // max over probes of |f(t)-f(s)| / d_k(t,s)
    double bound;      // ||f||_k
    bool pass;         // max_ratio <= bound + 1e-9
};

/// Certificate that f is ||f||_k-Lipschitz with respect to d_k on the given
/// probe pairs. Probes at zero d_k distance are errors.
LipschitzReport lipschitz_certificate(const Kernel& k, const RkhsFunction& f,
                                      const std::vector<std::pair<Point, Point>>& probe_pairs);

struct HausdorffReport {
    double best_witness_gap;  // max over witnesses of |int f dmu - int f dnu|
    double rkhs_dist;
    bool pass;  // best_witness_gap <= rkhs_dist + 1e-9
};

/// Certified lower bound on the Hausdorff distance from unit-ball RKHS
/// witnesses (norm <= 1 + 1e-9; larger norms are rejected). Such witnesses
/// are 1-Lipschitz for d_k, so every gap is a valid lower bound, and the
/// bound itself never exceeds the RKHS distance.
HausdorffReport hausdorff_lower_bound(const Kernel& k, const SignedMeasure& mu,
                                      const SignedMeasure& nu,
                                      const std::vector<RkhsFunction>& witnesses);

/// int f dmu for a finite kernel expansion f: exact for atomic mu,
/// quadrature for grid densities.
double integrate_against(const Kernel& k, const RkhsFunction& f, const SignedMeasure& mu);

}  // namespace rkhs
