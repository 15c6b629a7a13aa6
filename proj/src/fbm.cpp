#include "rkhs/fbm.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <istream>
#include <stdexcept>

#include "rkhs/csv.hpp"
#include "rkhs/parallel.hpp"

namespace rkhs {

void DensityOnGrid::validate() const {
    if (values.size() < 2) throw std::invalid_argument("DensityOnGrid: need at least 2 nodes");
    if (!(spacing > 0.0)) throw std::invalid_argument("DensityOnGrid: spacing must be positive");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("DensityOnGrid: non-finite value");
}

DensityOnGrid DensityOnGrid::from_csv(std::istream& in) {
    const auto rows = read_numeric_csv(in);
    if (rows.size() < 2) throw std::invalid_argument("DensityOnGrid: need at least 2 CSV rows");
    DensityOnGrid g;
    for (const auto& row : rows) {
        if (row.size() != 2)
            throw std::invalid_argument("DensityOnGrid: expected two columns (t, f)");
        g.values.push_back(row[1]);
    }
    g.origin = rows[0][0];
    g.spacing = rows[1][0] - rows[0][0];
    if (!(g.spacing > 0.0))
        throw std::invalid_argument("DensityOnGrid: grid abscissae must increase");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double step = rows[i][0] - rows[i - 1][0];
        if (std::abs(step - g.spacing) > 1e-9 * std::max(1.0, std::abs(g.spacing)))
            throw std::invalid_argument("DensityOnGrid: non-uniform spacing at row " +
                                        std::to_string(i));
    }
    g.validate();
    return g;
}

DensityOnGrid DensityOnGrid::gaussian_bump(double a, double b, std::size_t n) {
    if (n < 2 || !(b > a)) throw std::invalid_argument("gaussian_bump: bad grid");
    DensityOnGrid g;
    g.origin = a;
    g.spacing = (b - a) / static_cast<double>(n - 1);
    g.values.resize(n);
    const double inv = 1.0 / std::sqrt(2.0 * M_PI);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = g.node(j);
        g.values[j] = inv * std::exp(-0.5 * t * t);
    }
    return g;
}

static void require_hurst(double H) {
    if (!(H > 0.5 && H < 1.0))
        throw std::domain_error("Hurst parameter must lie in (1/2, 1); got " + std::to_string(H));
}

double c_h_constant(double H) {
    require_hurst(H);
    return 2.0 * std::tgamma(2.0 * H - 1.0) * std::sin((1.0 - H) * M_PI);
}

// Second antiderivative of |x|^{2H-2}; C^1 across 0 since 2H > 1.
static double power_primitive2(double x, double H) {
    return std::pow(std::abs(x), 2.0 * H) / ((2.0 * H - 1.0) * 2.0 * H);
}

namespace {

struct CellModel {
    std::vector<double> v;   // cell values, piecewise-constant density
    std::vector<double> w;   // w[m] = integral of |t-s|^{2H-2} over a cell pair at lag m
};

CellModel cell_model(const DensityOnGrid& f, double H) {
    f.validate();
    require_hurst(H);
    const std::size_t ncells = f.size() - 1;
    CellModel m;
    m.v.resize(ncells);
    for (std::size_t i = 0; i < ncells; ++i) m.v[i] = 0.5 * (f.values[i] + f.values[i + 1]);
    m.w.resize(ncells);
    const double d = f.spacing;
    for (std::size_t lag = 0; lag < ncells; ++lag) {
        const double x = d * static_cast<double>(lag);
        m.w[lag] = power_primitive2(x + d, H) - 2.0 * power_primitive2(x, H) +
                   power_primitive2(x - d, H);
    }
    return m;
}

}  // namespace

double fbm_energy_spatial(const DensityOnGrid& f, double H) {
    const CellModel m = cell_model(f, H);
    const std::size_t ncells = m.v.size();
    std::vector<double> lag_energy(ncells, 0.0);
    par::parallel_for(ncells, [&](std::size_t lag) {
        double corr = 0.0;
        for (std::size_t i = 0; i + lag < ncells; ++i) corr += m.v[i] * m.v[i + lag];
        lag_energy[lag] = m.w[lag] * corr * (lag == 0 ? 1.0 : 2.0);
    });
    double e = 0.0;
    for (double le : lag_energy) e += le;
    return e;
}

double fbm_energy_spatial_serial(const DensityOnGrid& f, double H) {
    const CellModel m = cell_model(f, H);
    const std::size_t ncells = m.v.size();
    double e = 0.0;
    for (std::size_t i = 0; i < ncells; ++i)
        for (std::size_t j = 0; j < ncells; ++j) {
            const std::size_t lag = i > j ? i - j : j - i;
            e += m.v[i] * m.w[lag] * m.v[j];
        }
    return e;
}

double fbm_energy_spectral(const DensityOnGrid& f, double H) {
    f.validate();
    require_hurst(H);
    if (f.padding_factor < 8.0)
        throw std::invalid_argument("fbm_energy_spectral: padding_factor must be >= 8");
    const std::size_t n = f.size();
    std::size_t m = 1;
    while (m < static_cast<std::size_t>(std::ceil(f.padding_factor * static_cast<double>(n))))
        m <<= 1;

    std::vector<double> in(m, 0.0);
    std::vector<std::complex<double>> out(m / 2 + 1);
    fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(m), in.data(),
                                          reinterpret_cast<fftw_complex*>(out.data()),
                                          FFTW_ESTIMATE);
    for (std::size_t j = 0; j < n; ++j) in[j] = f.values[j];
    fftw_execute(plan);
    fftw_destroy_plan(plan);

    // |fhat(u_q)|^2 at u_q = 2 pi q / (m spacing); the phase from the grid
    // origin drops out of the modulus.
    const double du = 2.0 * M_PI / (static_cast<double>(m) * f.spacing);
    const std::size_t nbins = m / 2 + 1;
    std::vector<double> phi(nbins);
    for (std::size_t q = 0; q < nbins; ++q) {
        const double mag = std::abs(out[q]) * f.spacing;
        phi[q] = mag * mag;
    }

    // int_0^{u_max} u^b * (piecewise-linear phi) du with exact power moments
    // per cell; b = 1-2H is in (-1,0) so the u = 0 endpoint is integrable.
    const double b = 1.0 - 2.0 * H;
    auto a1 = [b](double u) { return std::pow(u, b + 1.0) / (b + 1.0); };
    auto a2 = [b](double u) { return std::pow(u, b + 2.0) / (b + 2.0); };
    const double integral = par::blocked_sum(nbins - 1, [&](std::size_t q) {
        const double u0 = du * static_cast<double>(q);
        const double u1 = u0 + du;
        const double slope = (phi[q + 1] - phi[q]) / du;
        const double offset = phi[q] - slope * u0;
        return offset * (a1(u1) - a1(u0)) + slope * (a2(u1) - a2(u0));
    });
    return c_h_constant(H) / (2.0 * M_PI) * 2.0 * integral;
}

}  // namespace rkhs
