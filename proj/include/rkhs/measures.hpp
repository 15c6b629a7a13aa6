#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "rkhs/kernels.hpp"
#include "rkhs/point.hpp"
#include "rkhs/projection.hpp"
#include "rkhs/quadrature.hpp"

namespace rkhs {

/// A signed measure in one of the two representation classes the library
/// works with: finitely many weighted atoms, or a density sampled on a grid
/// with strictly positive quadrature weights. Arbitrary Borel measures
/// (e.g. singular continuous ones) are outside both classes by construction.
struct SignedMeasure {
    enum class Form { atomic, grid_density };
    Form form = Form::atomic;

    // atomic
    PointSet points;
    Eigen::VectorXd weights;

    // grid_density
    PointSet nodes;
    Eigen::VectorXd density;
    Eigen::VectorXd quad_weights;
    QuadKind rule = QuadKind::trapezoid;

    static SignedMeasure dirac(const Point& at, double weight = 1.0);
    static SignedMeasure atomic(PointSet pts, const std::vector<double>& w);
    static SignedMeasure grid(PointSet nodes, const std::vector<double>& density,
                              const std::vector<double>& quad_weights, QuadKind rule);
    /// density(t) sampled on an n-node trapezoid grid over [a,b].
    static SignedMeasure on_trapezoid_grid(double a, double b, std::size_t n,
                                           const std::function<double(double)>& density);

    /// sum |w_i| (atomic) or sum quad_i |density_i| (grid).
    double total_variation_proxy() const;

    void validate() const;
    std::size_t support_size() const { return form == Form::atomic ? points.size() : nodes.size(); }
};

struct PairingResult {
    double value = 0.0;
    bool finiteness_flag = true;          // false when refinement keeps doubling the value
    double quadrature_error_estimate = 0.0;  // grid paths only
};

/// The pairing <xi, eta>_k: an exact double sum for atomic measures, tensor
/// quadrature when a grid density is involved. Symmetric in its arguments.
/// Diagonal-singular kernels require the supports to stay away from the
/// diagonal (disjoint grids / no atom collisions); overlapping supports are
/// an error, with the fbm energy operations as the sanctioned route.
PairingResult measure_pair(const Kernel& k, const SignedMeasure& xi, const SignedMeasure& eta);

/// Serial reference for the pairing double sum.
PairingResult measure_pair_serial(const Kernel& k, const SignedMeasure& xi,
                                  const SignedMeasure& eta);

/// The embedding T_k: mu -> (t -> int k(t,s) dmu(s)).
FunctionSource embed(const Kernel& k, const SignedMeasure& mu);

/// True iff <xi1-xi2, xi1-xi2>_k <= tol * (1 + <xi1,xi1> + <xi2,xi2>).
bool measures_equivalent(const Kernel& k, const SignedMeasure& xi1, const SignedMeasure& xi2,
                         double tol = 1e-9);

struct DualNormReport {
    double sup_over_candidates;
    double self_value;  // sqrt(<xi,xi>)
    double gap;         // self_value - sup_over_candidates
};

/// Dual-norm probe: sup over unit-ball candidates of |<eta, xi>_k| against
/// sqrt(<xi,xi>_k). Candidates with norm above 1 are rescaled onto the unit
/// sphere before pairing. Throws on a zero measure.
DualNormReport dual_norm_check(const Kernel& k, const SignedMeasure& xi,
                               const std::vector<SignedMeasure>& candidates);

/// Squared distance from mu to its best atomic approximation supported on F:
/// solve K_F c = (<mu, delta_{s_j}>)_j and return <mu,mu> - b^T c (clamped
/// at zero). Nonincreasing under refinement of F.
double delta_span_residual(const Kernel& k, const SignedMeasure& mu, const PointSet& F);

}  // namespace rkhs
