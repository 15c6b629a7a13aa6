#include "rkhs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "rkhs/applications.hpp"
#include "rkhs/csv.hpp"
#include "rkhs/fbm.hpp"
#include "rkhs/gaussian.hpp"
#include "rkhs/gram.hpp"
#include "rkhs/measures.hpp"
#include "rkhs/projection.hpp"

namespace rkhs {

void sampling_box(KernelKind kind, double& lo, double& hi, double& min_sep) {
    switch (kind) {
        case KernelKind::brownian_min: lo = 0.05; hi = 10.0; min_sep = 0.05; return;
        case KernelKind::gauss_rbf: lo = -10.0; hi = 10.0; min_sep = 0.5; return;
        case KernelKind::bessel_series: lo = 0.0; hi = 2.0; min_sep = 0.25; return;
        case KernelKind::fbm_singular: lo = 0.0; hi = 1.0; min_sep = 0.01; return;
    }
    throw std::logic_error("unreachable kernel kind");
}

PointSet sample_points(Rng& rng, KernelKind kind, std::size_t n) {
    double lo, hi, sep;
    sampling_box(kind, lo, hi, sep);
    std::vector<double> ts;
    std::size_t attempts = 0;
    while (ts.size() < n && attempts < 10000) {
        ++attempts;
        const double t = rng.uniform(lo, hi);
        bool ok = true;
        for (double u : ts)
            if (std::abs(u - t) < sep) {
                ok = false;
                break;
            }
        if (ok) ts.push_back(t);
    }
    if (ts.size() < n) throw std::runtime_error("sample_points: box too crowded");
    return PointSet::scalars(ts);
}

namespace {

struct Battery {
    Rng rng;
    std::vector<PropertyResult> results;

    explicit Battery(std::uint64_t seed) : rng(seed) {}

    void record(const std::string& name, std::size_t trials, double max_violation,
                double tolerance) {
        results.push_back({name, trials, max_violation, tolerance,
                           max_violation <= tolerance});
    }

    Kernel kernel_for(KernelKind kind) {
        switch (kind) {
            case KernelKind::brownian_min: return Kernel::from_spec(KernelSpec::brownian());
            case KernelKind::bessel_series: return Kernel::from_spec(KernelSpec::bessel());
            case KernelKind::gauss_rbf: return Kernel::from_spec(KernelSpec::rbf());
            case KernelKind::fbm_singular: return Kernel::from_spec(KernelSpec::fbm(0.75));
        }
        throw std::logic_error("unreachable kernel kind");
    }

    static const std::vector<KernelKind>& regular_kinds() {
        static const std::vector<KernelKind> kinds{
            KernelKind::brownian_min, KernelKind::bessel_series, KernelKind::gauss_rbf};
        return kinds;
    }

    std::size_t max_set(KernelKind kind, std::size_t wanted) const {
        return kind == KernelKind::bessel_series ? std::min<std::size_t>(wanted, 6) : wanted;
    }

    SignedMeasure random_atomic(KernelKind kind, std::size_t max_atoms) {
        const std::size_t n = 1 + rng.index(max_set(kind, max_atoms));
        PointSet pts = sample_points(rng, kind, n);
        std::vector<double> w(n);
        for (auto& wi : w) wi = rng.uniform(-1.0, 1.0);
        return SignedMeasure::atomic(std::move(pts), w);
    }

    // --- kernel_core ------------------------------------------------------

    void kernel_symmetry(std::size_t trials) {
        double worst = 0.0;
        for (KernelKind kind : regular_kinds()) {
            const Kernel k = kernel_for(kind);
            for (std::size_t i = 0; i < trials; ++i) {
                const PointSet p = sample_points(rng, kind, 2);
                worst = std::max(worst, std::abs(k(p[0], p[1]) - k(p[1], p[0])));
            }
        }
        record("kernel-symmetry", trials * regular_kinds().size(), worst, 0.0);
    }

    void metric_axioms(std::size_t trials) {
        double worst = 0.0;
        for (KernelKind kind : regular_kinds()) {
            const Kernel k = kernel_for(kind);
            for (std::size_t i = 0; i < trials; ++i) {
                const PointSet p = sample_points(rng, kind, 3);
                const double dts = dk_metric(k, p[0], p[1]);
                const double dtu = dk_metric(k, p[0], p[2]);
                const double dus = dk_metric(k, p[2], p[1]);
                worst = std::max(worst, -dts);                       // nonnegativity
                worst = std::max(worst, dk_metric(k, p[0], p[0]));   // identity
                worst = std::max(worst, dts - dtu - dus - 1e-12);    // triangle slack
            }
        }
        record("metric-axioms", trials * regular_kinds().size(), worst, 1e-12);
    }

    void continuity_bounds(std::size_t trials) {
        double worst_diag = 0.0, worst_joint = 0.0;
        for (KernelKind kind : regular_kinds()) {
            const Kernel k = kernel_for(kind);
            for (std::size_t i = 0; i < trials; ++i) {
                const PointSet p = sample_points(rng, kind, 4);
                const double diag = std::abs(std::sqrt(k(p[0], p[0])) - std::sqrt(k(p[1], p[1]))) -
                                    dk_metric(k, p[0], p[1]);
                worst_diag = std::max(worst_diag, diag);
                const double joint =
                    std::abs(k(p[0], p[1]) - k(p[2], p[3])) -
                    (std::sqrt(k(p[0], p[0])) * dk_metric(k, p[1], p[3]) +
                     std::sqrt(k(p[3], p[3])) * dk_metric(k, p[0], p[2]));
                worst_joint = std::max(worst_joint, joint);
            }
        }
        record("diagonal-continuity", trials * regular_kinds().size(), worst_diag, 1e-12);
        record("joint-continuity", trials * regular_kinds().size(), worst_joint, 1e-10);
    }

    void brownian_closed_form() {
        const Kernel k = kernel_for(KernelKind::brownian_min);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double t = rng.uniform(0.0, 10.0);
            const double s = rng.uniform(0.0, 10.0);
            const double d = dk_metric(k, Point::scalar(t), Point::scalar(s));
            worst = std::max(worst, std::abs(d * d - std::abs(t - s)));
        }
        record("brownian-metric-closed-form", 100, worst, 1e-12);
    }

    // --- gram_factor ------------------------------------------------------

    void penrose_identities(std::size_t trials) {
        double worst = 0.0;
        for (KernelKind kind : regular_kinds()) {
            const Kernel k = kernel_for(kind);
            for (std::size_t i = 0; i < trials; ++i) {
                std::size_t n = 2 + rng.index(max_set(kind, 10));
                PointSet pts = sample_points(rng, kind, n);
                if (rng.uniform() < 0.4) pts.points.push_back(pts[0]);  // force deficiency
                GramFactor G(k, pts);
                const Eigen::MatrixXd& K = G.matrix();
                const Eigen::Index mm = K.rows();
                Eigen::MatrixXd P(mm, mm);
                for (Eigen::Index c = 0; c < mm; ++c)
                    P.col(c) = G.pinv_apply(Eigen::VectorXd::Unit(mm, c));
                const double scale = G.rank_tol() * std::max(1.0, K.norm());
                worst = std::max(worst, (K * P * K - K).cwiseAbs().maxCoeff() / scale);
                worst = std::max(worst, (P * K * P - P).cwiseAbs().maxCoeff() / scale);
            }
        }
        // violation measured relative to rank_tol * ||K||
        record("penrose-identities", trials * regular_kinds().size(), worst, 1.0);
    }

    void select_independent_idempotent(std::size_t trials) {
        double worst = 0.0;
        for (KernelKind kind : regular_kinds()) {
            const Kernel k = kernel_for(kind);
            for (std::size_t i = 0; i < trials; ++i) {
                PointSet pts = sample_points(rng, kind, 2 + rng.index(max_set(kind, 8)));
                pts.points.push_back(pts[rng.index(pts.size())]);  // duplicate
                const PointSet s1 = select_independent(k, pts);
                const PointSet s2 = select_independent(k, s1);
                if (!(s1.subset_of(s2) && s2.subset_of(s1) && s1.size() == s2.size()))
                    worst = 1.0;
            }
        }
        record("select-independent-idempotent", trials * regular_kinds().size(), worst, 0.0);
    }

    void fullrank_roundtrip(std::size_t trials) {
        double worst = 0.0;
        for (KernelKind kind : regular_kinds()) {
            const Kernel k = kernel_for(kind);
            for (std::size_t i = 0; i < trials; ++i) {
                const PointSet pts = sample_points(rng, kind, 2 + rng.index(max_set(kind, 8)));
                GramFactor G(k, pts);
                Eigen::VectorXd v(static_cast<Eigen::Index>(pts.size()));
                for (Eigen::Index j = 0; j < v.size(); ++j) v[j] = rng.uniform(-1.0, 1.0);
                const Eigen::VectorXd round = G.pinv_apply(G.matrix() * v);
                worst = std::max(worst, (round - v).norm() / std::max(v.norm(), 1e-300));
            }
        }
        record("fullrank-inverse-roundtrip", trials * regular_kinds().size(), worst, 1e-10);
    }

    // --- projective_limit -------------------------------------------------

    FunctionSource random_source(const Kernel& k, KernelKind kind) {
        const std::size_t n = 1 + rng.index(4);
        PointSet anchors = sample_points(rng, kind, n);
        Eigen::VectorXd coeffs(static_cast<Eigen::Index>(n));
        for (Eigen::Index j = 0; j < coeffs.size(); ++j) coeffs[j] = rng.uniform(-1.0, 1.0);
        return RkhsFunction{k, std::move(anchors), coeffs}.as_source();
    }

    void projection_laws(std::size_t trials) {
        double worst_idem = 0.0, worst_nest = 0.0, worst_mono = 0.0;
        for (std::size_t i = 0; i < trials; ++i) {
            const KernelKind kind = regular_kinds()[rng.index(regular_kinds().size())];
            const Kernel k = kernel_for(kind);
            const std::size_t n2 = 3 + rng.index(max_set(kind, 8) - 2);
            const PointSet f2 = sample_points(rng, kind, n2);
            PointSet f1;
            f1.points.assign(f2.points.begin(), f2.points.begin() + 2 + rng.index(n2 - 2));
            const FunctionSource f = random_source(k, kind);

            const RkhsFunction p2 = qf_project(k, f2, f);
            const RkhsFunction p2_again = qf_project(k, f2, p2.as_source());
            worst_idem = std::max(worst_idem,
                                  (p2.coeffs - p2_again.coeffs).cwiseAbs().maxCoeff());

            const RkhsFunction p1 = qf_project(k, f1, f);
            const RkhsFunction p21 = qf_project(k, f1, p2.as_source());
            for (int probe = 0; probe < 50; ++probe) {
                double lo, hi, sep;
                sampling_box(kind, lo, hi, sep);
                const Point t = Point::scalar(rng.uniform(lo, hi));
                worst_nest = std::max(worst_nest, std::abs(p1(t) - p21(t)));
            }
            worst_mono = std::max(worst_mono, qf_norm_sq(k, f1, f) - qf_norm_sq(k, f2, f));
        }
        record("projection-idempotence", trials, worst_idem, 1e-10);
        record("projection-nesting", trials, worst_nest, 1e-9);
        record("projection-norm-monotone", trials, worst_mono, 1e-10);
    }

    void norm_consistency(std::size_t trials) {
        double worst = 0.0;
        for (std::size_t i = 0; i < trials; ++i) {
            const KernelKind kind = regular_kinds()[rng.index(regular_kinds().size())];
            const Kernel k = kernel_for(kind);
            const std::size_t n = 4 + rng.index(max_set(kind, 8) - 3);
            const PointSet base = sample_points(rng, kind, n);
            PointSet f0;
            f0.points.assign(base.points.begin(), base.points.begin() + 2);
            Eigen::VectorXd coeffs(2);
            coeffs << rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0);
            RkhsFunction f{k, f0, coeffs};
            const double expected = f.norm_sq();
            const auto chain = prefix_chain(base, {2, 3, n});
            const NormTrace trace = norm_sup_estimate(k, chain, f.as_source());
            for (const auto& st : trace.stages)
                worst = std::max(worst, std::abs(st.norm_sq - expected));
        }
        record("norm-consistency-in-span", trials, worst, 1e-8);
    }

    void pointwise_stability(std::size_t trials) {
        double worst = 0.0;
        for (std::size_t i = 0; i < trials; ++i) {
            const KernelKind kind = regular_kinds()[rng.index(regular_kinds().size())];
            const Kernel k = kernel_for(kind);
            const std::size_t n = 5 + rng.index(3);
            const PointSet base = sample_points(rng, kind, max_set(kind, n));
            PointSet anchors;
            anchors.points = {base[0], base[1]};
            Eigen::VectorXd coeffs(2);
            coeffs << rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0);
            const RkhsFunction f{k, anchors, coeffs};
            double lo, hi, sep;
            sampling_box(kind, lo, hi, sep);
            const Point probe = Point::scalar(rng.uniform(lo, hi));
            // once the chain contains the anchors the projection reproduces f
            std::vector<std::size_t> sizes;
            for (std::size_t s = 2; s <= base.size(); ++s) sizes.push_back(s);
            const auto chain = prefix_chain(base, sizes);
            const double limit = f(probe);
            const RkhsFunction last = qf_project(k, chain.back(), f.as_source());
            worst = std::max(worst, std::abs(last(probe) - limit));
        }
        record("pointwise-stability", trials, worst, 1e-8);
    }

    // --- measure_space ----------------------------------------------------

    void cauchy_schwarz(std::size_t trials) {
        double worst = 0.0;
        for (std::size_t i = 0; i < trials; ++i) {
            const KernelKind kind = regular_kinds()[rng.index(regular_kinds().size())];
            const Kernel k = kernel_for(kind);
            const SignedMeasure xi = random_atomic(kind, 5);
            const SignedMeasure eta = random_atomic(kind, 5);
            const double pxe = measure_pair(k, xi, eta).value;
            const double pxx = measure_pair(k, xi, xi).value;
            const double pee = measure_pair(k, eta, eta).value;
            worst = std::max(worst, pxe * pxe - pxx * pee);
        }
        record("cauchy-schwarz", trials, worst, 1e-10);
    }

    void bilinearity(std::size_t trials) {
        double worst = 0.0;
        for (std::size_t i = 0; i < trials; ++i) {
            const KernelKind kind = regular_kinds()[rng.index(regular_kinds().size())];
            const Kernel k = kernel_for(kind);
            const SignedMeasure x1 = random_atomic(kind, 4);
            const SignedMeasure x2 = random_atomic(kind, 4);
            const SignedMeasure eta = random_atomic(kind, 4);
            const double a = rng.uniform(-2.0, 2.0), b = rng.uniform(-2.0, 2.0);
            SignedMeasure combo;
            {
                PointSet pts = x1.points;
                std::vector<double> w;
                for (Eigen::Index j = 0; j < x1.weights.size(); ++j) w.push_back(a * x1.weights[j]);
                for (std::size_t j = 0; j < x2.points.size(); ++j) {
                    pts.points.push_back(x2.points[j]);
                    w.push_back(b * x2.weights[static_cast<Eigen::Index>(j)]);
                }
                combo = SignedMeasure::atomic(std::move(pts), w);
            }
            const double lhs = measure_pair(k, combo, eta).value;
            const double rhs = a * measure_pair(k, x1, eta).value +
                               b * measure_pair(k, x2, eta).value;
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
        }
        record("pairing-bilinearity", trials, worst, 1e-10);
    }

    void embed_pairing_consistency(std::size_t trials) {
        double worst = 0.0;
        for (std::size_t i = 0; i < trials; ++i) {
            const KernelKind kind = regular_kinds()[rng.index(regular_kinds().size())];
            const Kernel k = kernel_for(kind);
            const SignedMeasure mu = random_atomic(kind, 4);
            const SignedMeasure nu = random_atomic(kind, 4);
            const FunctionSource tmu = embed(k, mu);
            double rhs = 0.0;
            for (std::size_t j = 0; j < nu.points.size(); ++j)
                rhs += nu.weights[static_cast<Eigen::Index>(j)] * tmu(nu.points[j]);
            worst = std::max(worst,
                             std::abs(measure_pair(k, mu, nu).value - rhs));
        }
        record("embed-pairing-consistency", trials, worst, 1e-12);
    }

    void fubini_order(std::size_t trials) {
        double worst = 0.0;
        const Kernel k = kernel_for(KernelKind::brownian_min);
        for (std::size_t i = 0; i < trials; ++i) {
            const double a = rng.uniform(0.0, 1.0);
            const SignedMeasure g1 = SignedMeasure::on_trapezoid_grid(
                a, a + 1.0, 33, [](double t) { return std::sin(3.0 * t) + 1.1; });
            const SignedMeasure g2 = SignedMeasure::on_trapezoid_grid(
                a + 0.25, a + 1.5, 41, [](double t) { return std::cos(2.0 * t); });
            worst = std::max(worst, std::abs(measure_pair(k, g1, g2).value -
                                             measure_pair(k, g2, g1).value));
        }
        record("fubini-order-swap", trials, worst, 1e-12);
    }

    void delta_span_trend() {
        const Kernel k = kernel_for(KernelKind::brownian_min);
        const SignedMeasure uniform =
            SignedMeasure::on_trapezoid_grid(0.0, 1.0, 513, [](double) { return 1.0; });
        double prev = std::numeric_limits<double>::infinity();
        double worst = 0.0;
        for (int level = 1; level <= 6; ++level) {
            std::vector<double> ts;
            const int n = 1 << level;
            for (int j = 1; j <= n; ++j) ts.push_back(static_cast<double>(j) / n);
            const double r = delta_span_residual(k, uniform, PointSet::scalars(ts));
            worst = std::max(worst, r - prev);  // must not increase
            prev = r;
        }
        record("delta-span-monotone", 6, worst, 1e-12);
    }

    // --- gaussian_moments ---------------------------------------------------

    void gaussian_closed_form() {
        const std::vector<double> norms{0.5, 1.0, std::sqrt(2.0), 2.0};
        const Kernel k = kernel_for(KernelKind::bessel_series);
        double worst = 0.0;
        for (double h1 : norms) {
            const SignedMeasure m1 = materialize_gaussian({h1, 40});
            for (double h2 : norms) {
                const SignedMeasure m2 = materialize_gaussian({h2, 40});
                const double closed = bessel_pairing_closed_form(h1, h2);
                const double quad = measure_pair(k, m1, m2).value;
                worst = std::max(worst, std::abs(closed - quad) / std::abs(closed));
            }
        }
        record("gaussian-closed-form-vs-quadrature", norms.size() * norms.size(), worst, 1e-6);
    }

    void gaussian_moment_identity() {
        double worst = 0.0;
        for (double h : {0.5, 1.0, 2.0}) {
            const SignedMeasure m = materialize_gaussian({h, 40});
            for (int n = 0; n <= 10; ++n) {
                double quad = 0.0;
                for (std::size_t i = 0; i < m.nodes.size(); ++i)
                    quad += m.quad_weights[static_cast<Eigen::Index>(i)] *
                            m.density[static_cast<Eigen::Index>(i)] *
                            std::pow(m.nodes[i][0], 2 * n);
                const double exact = gaussian_even_moment(n, h);
                worst = std::max(worst, std::abs(quad - exact) / exact);
            }
        }
        record("gaussian-moment-identity", 33, worst, 1e-8);
    }

    // --- fbm_spectral -------------------------------------------------------

    void fbm_two_routes() {
        const DensityOnGrid bump = DensityOnGrid::gaussian_bump(-8.0, 8.0, 2048);
        double worst = 0.0;
        for (double H : {0.6, 0.75, 0.9}) {
            const double spatial = fbm_energy_spatial(bump, H);
            const double spectral = fbm_energy_spectral(bump, H);
            worst = std::max(worst, std::abs(spatial - spectral) / spatial);
        }
        record("fbm-spatial-spectral-agreement", 3, worst, 0.01);

        double worst_pos = 0.0, worst_refl = 0.0, worst_scale = 0.0;
        for (int i = 0; i < 5; ++i) {
            DensityOnGrid g;
            g.origin = rng.uniform(-2.0, 0.0);
            g.spacing = 1.0 / 256.0;
            g.values.resize(512);
            for (auto& v : g.values) v = rng.uniform(-1.0, 1.0);
            const double H = 0.55 + 0.4 * rng.uniform();
            const double e = fbm_energy_spatial(g, H);
            worst_pos = std::max(worst_pos, -e);

            DensityOnGrid refl = g;
            std::reverse(refl.values.begin(), refl.values.end());
            refl.origin = -(g.origin + g.spacing * static_cast<double>(g.values.size() - 1));
            worst_refl = std::max(worst_refl, std::abs(fbm_energy_spatial(refl, H) - e));

            // f(t/2)/2 multiplies the energy by 2^{2H-2}
            DensityOnGrid wide = g;
            wide.origin = 2.0 * g.origin;
            wide.spacing = 2.0 * g.spacing;
            for (auto& v : wide.values) v *= 0.5;
            const double scaled = fbm_energy_spatial(wide, H);
            const double expected = std::pow(2.0, 2.0 * H - 2.0) * e;
            worst_scale = std::max(worst_scale,
                                   std::abs(scaled - expected) / std::max(1e-12, std::abs(expected)));
        }
        record("fbm-positivity", 5, worst_pos, 0.0);
        record("fbm-reflection-invariance", 5, worst_refl, 1e-10);
        record("fbm-scaling-law", 5, worst_scale, 1e-10);
    }

    // --- applications -------------------------------------------------------

    void isometry(std::size_t trials) {
        double worst = 0.0;
        for (std::size_t i = 0; i < trials; ++i) {
            const KernelKind kind = regular_kinds()[rng.index(regular_kinds().size())];
            const Kernel k = kernel_for(kind);
            const std::size_t m = 1 + rng.index(20);
            DiscreteRandomVariable rv;
            rv.probabilities.resize(static_cast<Eigen::Index>(m));
            double sum = 0.0;
            for (Eigen::Index j = 0; j < rv.probabilities.size(); ++j) {
                rv.probabilities[j] = rng.uniform(0.01, 1.0);
                sum += rv.probabilities[j];
            }
            rv.probabilities /= sum;
            double lo, hi, sep;
            sampling_box(kind, lo, hi, sep);
            // repeated values exercise the preimage merge
            const PointSet pool = sample_points(rng, kind, std::min<std::size_t>(m, 6));
            for (std::size_t j = 0; j < m; ++j)
                rv.values.points.push_back(pool[rng.index(pool.size())]);
            worst = std::max(worst, isometry_check(k, rv).gap);
        }
        record("pushforward-isometry", trials, worst, 1e-12);
    }

    void distance_triangle(std::size_t trials) {
        double worst = 0.0;
        for (std::size_t i = 0; i < trials; ++i) {
            const KernelKind kind = regular_kinds()[rng.index(regular_kinds().size())];
            const Kernel k = kernel_for(kind);
            const SignedMeasure a = random_atomic(kind, 4);
            const SignedMeasure b = random_atomic(kind, 4);
            const SignedMeasure c = random_atomic(kind, 4);
            worst = std::max(worst, rkhs_distance(k, a, b) - rkhs_distance(k, a, c) -
                                        rkhs_distance(k, c, b));
        }
        record("rkhs-distance-triangle", trials, worst, 1e-10);
    }

    RkhsFunction random_unit_witness(const Kernel& k, KernelKind kind) {
        const std::size_t n = 1 + rng.index(4);
        PointSet sup = sample_points(rng, kind, n);
        Eigen::VectorXd c(static_cast<Eigen::Index>(n));
        for (Eigen::Index j = 0; j < c.size(); ++j) c[j] = rng.uniform(-1.0, 1.0);
        RkhsFunction f{k, std::move(sup), c};
        const double norm = std::sqrt(f.norm_sq());
        if (norm > 1e-12) f.coeffs /= norm;
        return f;
    }

    void hausdorff_and_lipschitz(std::size_t trials) {
        double worst_h = 0.0, worst_l = 0.0;
        for (std::size_t i = 0; i < trials; ++i) {
            const KernelKind kind = regular_kinds()[rng.index(regular_kinds().size())];
            const Kernel k = kernel_for(kind);
            const SignedMeasure mu = random_atomic(kind, 4);
            const SignedMeasure nu = random_atomic(kind, 4);
            std::vector<RkhsFunction> witnesses;
            for (int w = 0; w < 4; ++w) witnesses.push_back(random_unit_witness(k, kind));
            const HausdorffReport rep = hausdorff_lower_bound(k, mu, nu, witnesses);
            worst_h = std::max(worst_h, rep.best_witness_gap - rep.rkhs_dist);

            std::vector<std::pair<Point, Point>> probes;
            while (probes.size() < 20) {
                const PointSet p = sample_points(rng, kind, 2);
                probes.emplace_back(p[0], p[1]);
            }
            const LipschitzReport lip = lipschitz_certificate(k, witnesses[0], probes);
            worst_l = std::max(worst_l, lip.max_ratio - lip.bound);
        }
        record("hausdorff-lower-bound", trials, worst_h, 1e-9);
        record("lipschitz-unit-bound", trials, worst_l, 1e-9);
    }
};

}  // namespace

std::vector<PropertyResult> run_verify_suite(std::uint64_t seed) {
    Battery b(seed);
    b.kernel_symmetry(60);
    b.metric_axioms(60);
    b.continuity_bounds(60);
    b.brownian_closed_form();
    b.penrose_identities(12);
    b.select_independent_idempotent(12);
    b.fullrank_roundtrip(12);
    b.projection_laws(40);
    b.norm_consistency(12);
    b.pointwise_stability(12);
    b.cauchy_schwarz(200);
    b.bilinearity(100);
    b.embed_pairing_consistency(60);
    b.fubini_order(5);
    b.delta_span_trend();
    b.gaussian_closed_form();
    b.gaussian_moment_identity();
    b.fbm_two_routes();
    b.isometry(100);
    b.distance_triangle(60);
    b.hausdorff_and_lipschitz(60);
    return b.results;
}

bool all_pass(const std::vector<PropertyResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

void write_verify_csv(std::ostream& out, const std::vector<PropertyResult>& results) {
    out << "property,trials,max_violation,tolerance,pass\n";
    for (const auto& r : results) {
        out << r.name << ',' << r.trials << ',' << format_double(r.max_violation) << ','
            << format_double(r.tolerance) << ',' << (r.pass ? 1 : 0) << '\n';
    }
}

}  // namespace rkhs
