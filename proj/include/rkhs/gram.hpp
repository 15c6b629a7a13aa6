#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "rkhs/kernels.hpp"
#include "rkhs/point.hpp"

namespace rkhs {

/// Dense Gram matrix K[i][j] = k(F[i], F[j]). Entry evaluation runs in
/// parallel over rows; gram_matrix_serial is the reference path.
Eigen::MatrixXd gram_matrix(const Kernel& k, const PointSet& F);
Eigen::MatrixXd gram_matrix_serial(const Kernel& k, const PointSet& F);

enum class FactorKind { cholesky, eigen_pinv };

/// Gram matrix of a finite point set together with a rank-revealing pivoted
/// Cholesky factorization and, when the matrix is numerically
/// rank-deficient, an eigendecomposition-based Moore-Penrose inverse.
///
/// At full numerical rank pinv_apply is an exact-inverse action through the
/// pivoted factor; otherwise it applies the pseudo-inverse, which satisfies
/// K P K = K and P K P = P to rank_tol * ||K||.
class GramFactor {
public:
    GramFactor(const Kernel& k, const PointSet& F, double rank_tol_rel = 1e-11);

    const Eigen::MatrixXd& matrix() const { return matrix_; }
    const PointSet& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    int numerical_rank() const { return rank_; }
    double rank_tol() const { return rank_tol_abs_; }
    FactorKind factor_kind() const { return kind_; }

    /// Selection order of the pivoted Cholesky: pivot_order()[0..rank-1] are
    /// the retained original indices in selection order, the rest follow.
    const std::vector<int>& pivot_order() const { return pivot_order_; }

    /// K^[-1] v (exact solve at full rank, Moore-Penrose action otherwise).
    Eigen::VectorXd pinv_apply(const Eigen::VectorXd& v) const;

    /// v^T K^[-1] v computed as a sum of squares, hence >= 0.
    double quadratic_form(const Eigen::VectorXd& v) const;

    /// Largest/smallest retained pivot ratio; crude condition proxy.
    double condition_estimate() const;

private:
    PointSet points_;
    Eigen::MatrixXd matrix_;
    double rank_tol_abs_ = 0.0;
    int rank_ = 0;
    FactorKind kind_ = FactorKind::cholesky;
    std::vector<int> pivot_order_;
    Eigen::MatrixXd chol_l_;          // permuted lower factor, full-rank path
    Eigen::VectorXd eig_values_;      // pinv path
    Eigen::MatrixXd eig_vectors_;
    double pivot_max_ = 0.0, pivot_min_ = 0.0;
};

GramFactor build_gram(const Kernel& k, const PointSet& F, double rank_tol_rel = 1e-11);
GramFactor build_gram(const KernelSpec& spec, const PointSet& F, double rank_tol_rel = 1e-11);

Eigen::VectorXd pinv_apply(const GramFactor& G, const Eigen::VectorXd& v);

/// The S_0 extraction: greedy pivoted selection (largest Schur-complement
/// diagonal first, ties to the lowest original index) of a subset whose
/// kernel sections are linearly independent at tolerance tol. tol is
/// relative to the largest pivot; dropped sections have squared residual
/// distance from the retained span <= tol * (largest pivot). The returned
/// subset keeps the original ordering.
PointSet select_independent(const Kernel& k, const PointSet& F, double tol = 1e-11);

/// Row-major full matrix, shortest round-trip decimals.
void write_gram_csv(std::ostream& out, const Eigen::MatrixXd& K);

}  // namespace rkhs
