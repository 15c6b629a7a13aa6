// Benchmark comparing the OpenMP kernels against their serial references:
// Gram assembly, the measure-pairing double sum, and the fbm spatial energy.
// Prints a CSV table (op,n,serial_s,parallel_s,speedup,max_abs_diff).

#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>

#include "rkhs/csv.hpp"
#include "rkhs/fbm.hpp"
#include "rkhs/gram.hpp"
#include "rkhs/kernels.hpp"
#include "rkhs/measures.hpp"
#include "rkhs/rng.hpp"

namespace {

template <class F>
double time_best_of(int repeats, F&& fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const double t0 = omp_get_wtime();
        fn();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void report(const std::string& op, std::size_t n, double serial_s, double parallel_s,
            double max_diff) {
    std::cout << op << ',' << n << ',' << rkhs::format_double(serial_s) << ','
              << rkhs::format_double(parallel_s) << ','
              << rkhs::format_double(serial_s / parallel_s) << ','
              << rkhs::format_double(max_diff) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n = 512;
    int repeats = 3;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--n")
            n = static_cast<std::size_t>(std::strtoull(argv[i + 1], nullptr, 10));
        else if (flag == "--repeats")
            repeats = std::atoi(argv[i + 1]);
        else {
            std::cerr << "usage: rkhs_bench [--n N] [--repeats R]\n";
            return 1;
        }
    }

    std::cout << "op,n,serial_s,parallel_s,speedup,max_abs_diff\n";
    std::cerr << "threads: " << omp_get_max_threads() << "\n";

    const rkhs::Kernel k = rkhs::Kernel::from_spec(rkhs::KernelSpec::rbf(1.0));
    rkhs::Rng rng(7);

    {  // Gram assembly
        std::vector<double> ts(n);
        for (auto& t : ts) t = rng.uniform(0.0, 50.0);
        const rkhs::PointSet pts = rkhs::PointSet::scalars(ts);
        Eigen::MatrixXd a, b;
        const double ser = time_best_of(repeats, [&] { a = rkhs::gram_matrix_serial(k, pts); });
        const double par = time_best_of(repeats, [&] { b = rkhs::gram_matrix(k, pts); });
        report("gram_matrix", n, ser, par, (a - b).cwiseAbs().maxCoeff());
    }

    {  // pairing double sum, grid x grid
        const auto measure = rkhs::SignedMeasure::on_trapezoid_grid(
            0.0, 1.0, n, [](double t) { return std::sin(5.0 * t) + 1.2; });
        const rkhs::Kernel brid = rkhs::Kernel::from_spec(rkhs::KernelSpec::brownian());
        rkhs::PairingResult pa, pb;
        const double ser =
            time_best_of(repeats, [&] { pa = rkhs::measure_pair_serial(brid, measure, measure); });
        const double par =
            time_best_of(repeats, [&] { pb = rkhs::measure_pair(brid, measure, measure); });
        report("measure_pair", n, ser, par, std::abs(pa.value - pb.value));
    }

    {  // fbm spatial energy
        const auto bump = rkhs::DensityOnGrid::gaussian_bump(-8.0, 8.0, n);
        double ea = 0.0, eb = 0.0;
        const double ser =
            time_best_of(repeats, [&] { ea = rkhs::fbm_energy_spatial_serial(bump, 0.75); });
        const double par = time_best_of(repeats, [&] { eb = rkhs::fbm_energy_spatial(bump, 0.75); });
        report("fbm_energy_spatial", n, ser, par, std::abs(ea - eb));
    }

    return 0;
}
