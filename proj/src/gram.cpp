#include "rkhs/gram.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "rkhs/csv.hpp"
#include "rkhs/parallel.hpp"

namespace rkhs {

static void require_usable(const Kernel& k, const PointSet& F) {
    if (F.empty()) throw std::invalid_argument("gram: empty point set");
    for (const auto& p : F.points) k.require_in_domain(p);
    if (k.diagonal_singular())
        throw std::domain_error("gram: kernel " + k.name() + " has a singular diagonal");
}

Eigen::MatrixXd gram_matrix(const Kernel& k, const PointSet& F) {
    require_usable(k, F);
    const std::size_t m = F.size();
    Eigen::MatrixXd K(m, m);
    par::parallel_for(m, [&](std::size_t i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double v = k(F[i], F[j]);
            K(i, j) = v;
            K(j, i) = v;
        }
    });
    return K;
}

Eigen::MatrixXd gram_matrix_serial(const Kernel& k, const PointSet& F) {
    require_usable(k, F);
    const std::size_t m = F.size();
    Eigen::MatrixXd K(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const double v = k(F[i], F[j]);
            K(i, j) = v;
            K(j, i) = v;
        }
    return K;
}

namespace {

struct PivotedCholesky {
    std::vector<int> order;   // selection order, then the dropped indices
    Eigen::MatrixXd l;        // m x rank, rows in original index order
    int rank = 0;
    double pivot_max = 0.0;
    double pivot_min = 0.0;
    double tol_abs = 0.0;
};

// Left-looking pivoted Cholesky on an SPD(-ish) matrix. Stops when the
// largest remaining Schur-complement diagonal falls to tol_rel times the
// first pivot. Ties break to the lowest original index for determinism.
PivotedCholesky pivoted_cholesky(const Eigen::MatrixXd& K, double tol_rel) {
    const int m = static_cast<int>(K.rows());
    PivotedCholesky out;
    out.order.resize(m);
    for (int i = 0; i < m; ++i) out.order[i] = i;
    Eigen::VectorXd diag = K.diagonal();
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(m, m);

    for (int j = 0; j < m; ++j) {
        int best = j;
        for (int i = j + 1; i < m; ++i) {
            // strict > keeps the earliest original index among ties
            if (diag[out.order[i]] > diag[out.order[best]]) best = i;
        }
        std::swap(out.order[j], out.order[best]);
        const int p = out.order[j];
        const double d = diag[p];
        if (j == 0) {
            out.tol_abs = tol_rel * std::max(d, 0.0);
            out.pivot_max = d;
        }
        if (!(d > out.tol_abs) || d <= 0.0) break;
        out.pivot_min = d;
        const double ljj = std::sqrt(d);
        L(p, j) = ljj;
        for (int i = j + 1; i < m; ++i) {
            const int q = out.order[i];
            double v = K(q, p);
            for (int c = 0; c < j; ++c) v -= L(q, c) * L(p, c);
            L(q, j) = v / ljj;
            diag[q] -= L(q, j) * L(q, j);
        }
        out.rank = j + 1;
    }
    out.l = L.leftCols(std::max(out.rank, 1));
    if (out.rank == 0) out.l.setZero();
    return out;
}

}  // namespace

GramFactor::GramFactor(const Kernel& k, const PointSet& F, double rank_tol_rel)
    : points_(F), matrix_(gram_matrix(k, F)) {
    const int m = static_cast<int>(F.size());
    PivotedCholesky pc = pivoted_cholesky(matrix_, rank_tol_rel);
    rank_ = pc.rank;
    rank_tol_abs_ = pc.tol_abs;
    pivot_order_ = pc.order;
    pivot_max_ = pc.pivot_max;
    pivot_min_ = pc.pivot_min;
    if (rank_ == m) {
        kind_ = FactorKind::cholesky;
        // rows of the factor in selection order: K = P L L^T P^T
        chol_l_.resize(m, m);
        for (int i = 0; i < m; ++i) chol_l_.row(i) = pc.l.row(pc.order[i]);
    } else {
        kind_ = FactorKind::eigen_pinv;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(matrix_);
        eig_values_ = es.eigenvalues();
        eig_vectors_ = es.eigenvectors();
    }
}

Eigen::VectorXd GramFactor::pinv_apply(const Eigen::VectorXd& v) const {
    const int m = static_cast<int>(size());
    if (v.size() != m)
        throw std::invalid_argument("pinv_apply: vector length " + std::to_string(v.size()) +
                                    " does not match set size " + std::to_string(m));
    if (kind_ == FactorKind::cholesky) {
        Eigen::VectorXd pv(m);
        for (int i = 0; i < m; ++i) pv[i] = v[pivot_order_[i]];
        chol_l_.triangularView<Eigen::Lower>().solveInPlace(pv);
        chol_l_.triangularView<Eigen::Lower>().transpose().solveInPlace(pv);
        Eigen::VectorXd out(m);
        for (int i = 0; i < m; ++i) out[pivot_order_[i]] = pv[i];
        return out;
    }
    const double eig_max = eig_values_.size() ? eig_values_.cwiseAbs().maxCoeff() : 0.0;
    const double cut = std::max(rank_tol_abs_, 1e-14 * eig_max);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(m);
    for (int i = 0; i < m; ++i) {
        if (eig_values_[i] > cut)
            out += (eig_vectors_.col(i).dot(v) / eig_values_[i]) * eig_vectors_.col(i);
    }
    return out;
}

double GramFactor::quadratic_form(const Eigen::VectorXd& v) const {
    const int m = static_cast<int>(size());
    if (v.size() != m) throw std::invalid_argument("quadratic_form: dimension mismatch");
    if (kind_ == FactorKind::cholesky) {
        Eigen::VectorXd pv(m);
        for (int i = 0; i < m; ++i) pv[i] = v[pivot_order_[i]];
        chol_l_.triangularView<Eigen::Lower>().solveInPlace(pv);
        return pv.squaredNorm();
    }
    const double eig_max = eig_values_.size() ? eig_values_.cwiseAbs().maxCoeff() : 0.0;
    const double cut = std::max(rank_tol_abs_, 1e-14 * eig_max);
    double q = 0.0;
    for (int i = 0; i < m; ++i) {
        if (eig_values_[i] > cut) {
            const double c = eig_vectors_.col(i).dot(v);
            q += c * c / eig_values_[i];
        }
    }
    return q;
}

double GramFactor::condition_estimate() const {
    if (rank_ == 0 || pivot_min_ <= 0.0) return std::numeric_limits<double>::infinity();
    return pivot_max_ / pivot_min_;
}

GramFactor build_gram(const Kernel& k, const PointSet& F, double rank_tol_rel) {
    return GramFactor(k, F, rank_tol_rel);
}

GramFactor build_gram(const KernelSpec& spec, const PointSet& F, double rank_tol_rel) {
    return GramFactor(Kernel::from_spec(spec), F, rank_tol_rel);
}

Eigen::VectorXd pinv_apply(const GramFactor& G, const Eigen::VectorXd& v) {
    return G.pinv_apply(v);
}

PointSet select_independent(const Kernel& k, const PointSet& F, double tol) {
    const Eigen::MatrixXd K = gram_matrix(k, F);
    PivotedCholesky pc = pivoted_cholesky(K, tol);
    std::vector<bool> keep(F.size(), false);
    for (int j = 0; j < pc.rank; ++j) keep[static_cast<std::size_t>(pc.order[j])] = true;
    PointSet out;
    for (std::size_t i = 0; i < F.size(); ++i) {
        if (!keep[i]) continue;
        out.points.push_back(F[i]);
        if (i < F.labels.size()) out.labels.push_back(F.labels[i]);
    }
    if (out.empty()) out.points.push_back(F[0]);  // rank-0 Gram: keep one representative
    return out;
}

void write_gram_csv(std::ostream& out, const Eigen::MatrixXd& K) {
    for (Eigen::Index i = 0; i < K.rows(); ++i) {
        for (Eigen::Index j = 0; j < K.cols(); ++j) {
            if (j) out << ',';
            out << format_double(K(i, j));
        }
        out << '\n';
    }
}

}  // namespace rkhs
