#pragma once

#include <vector>

#include "rkhs/measures.hpp"
#include "rkhs/projection.hpp"

namespace rkhs {

/// Centered Gaussian measure with standard deviation h_norm, together with
/// the Gauss-Hermite order used when it is materialized as a grid measure.
struct GaussianMeasureSpec {
    double h_norm = 1.0;
    std::size_t gh_order = 40;
};

/// E W^{2n} = (2n)! / (2^n n!) * h_norm^{2n}, evaluated in the log domain.
/// Throws std::overflow_error when the value exceeds double range and
/// std::invalid_argument for n > 150.
double gaussian_even_moment(int n, double h_norm);

/// n-th raw moment of N(0, h_norm^2): zero for odd n.
double gaussian_moment(int n, double h_norm);

struct MomentMembershipReport {
    std::vector<double> partial_sums;  // partial_sums[n] = sum_{m<=n} |int t^m dmu|^2/(m!)^2
    TraceVerdict verdict = TraceVerdict::inconclusive;
};

/// The moment-series membership test for the entire-series kernel
/// sum_n (ts)^n/(n!)^2: partial sums of sum_n |int t^n dmu|^2/(n!)^2 up to
/// N. Verdict bounded when the tail increments fall below 1e-14 relative.
MomentMembershipReport moment_membership(const SignedMeasure& mu, int N);

/// Closed-form pairing of two centered Gaussian measures under the series
/// kernel: k(h1^2/2, h2^2/2).
double bessel_pairing_closed_form(double h1_norm, double h2_norm, int series_truncation = 60);

/// Materialize the centered Gaussian as a grid measure on rescaled
/// Gauss-Hermite nodes. The quadrature weights absorb the e^{x^2} factor so
/// the weight function matches the density exactly; the result integrates
/// to 1 to machine precision.
SignedMeasure materialize_gaussian(const GaussianMeasureSpec& spec);

}  // namespace rkhs
