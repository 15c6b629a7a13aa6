#pragma once

#include <iosfwd>
#include <vector>

namespace rkhs {

/// A compactly supported density sampled on a uniform grid: values[j] is
/// f(origin + j * spacing). padding_factor controls the zero-padding of the
/// spectral transform (at least 8x is required there).
struct DensityOnGrid {
    double origin = 0.0;
    double spacing = 0.0;
    std::vector<double> values;
    double padding_factor = 8.0;

    std::size_t size() const { return values.size(); }
    double node(std::size_t j) const { return origin + spacing * static_cast<double>(j); }

    void validate() const;

    /// Two-column CSV (t, f(t)); spacing must be uniform to 1e-9 relative.
    static DensityOnGrid from_csv(std::istream& in);

    /// Standard Gaussian bump e^{-t^2/2}/sqrt(2 pi) on n nodes over [a,b].
    static DensityOnGrid gaussian_bump(double a, double b, std::size_t n);
};

/// c_H = 2 Gamma(2H-1) sin((1-H) pi), the constant relating |t|^{2H-2} to
/// its distributional Fourier transform c_H |u|^{1-2H}. Requires
/// 1/2 < H < 1 (Gamma pole at H = 1/2).
double c_h_constant(double H);

/// Energy <f dt, f dt>_k for k(t,s) = |t-s|^{2H-2}, computed in the spatial
/// domain. The density is treated as piecewise constant on cells between
/// nodes and every cell pair is integrated with the exact power-law
/// primitive, so the integrable diagonal singularity needs no exclusion.
/// The lag sums run in parallel; the _serial variant is the reference.
double fbm_energy_spatial(const DensityOnGrid& f, double H);
double fbm_energy_spatial_serial(const DensityOnGrid& f, double H);

/// The same energy on the Fourier side:
/// (c_H / 2 pi) * int |fhat(u)|^2 |u|^{1-2H} du with
/// fhat(u) = int f(t) e^{-iut} dt, evaluated by a zero-padded FFT and exact
/// per-cell integration of the power weight against piecewise-linear
/// |fhat|^2.
double fbm_energy_spectral(const DensityOnGrid& f, double H);

}  // namespace rkhs
