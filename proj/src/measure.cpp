#include "bo/measure.hpp"

#include <cmath>
#include <stdexcept>

#include "bo/rng.hpp"

namespace bo {

GaussianDraw sample(const MeasureSpec& spec, std::uint64_t sample_index) {
    if (spec.k < 1 || spec.n_cut < 1)
        throw std::invalid_argument("sample: need k >= 1 and n_cut >= 1");
    GaussianDraw d;
    d.field = FourierField(static_cast<std::size_t>(spec.n_cut));
    d.g.resize(static_cast<std::size_t>(spec.n_cut));
    const double inv_sqrt2 = 0.70710678118654752440;
    for (long n = 1; n <= spec.n_cut; ++n) {
        Rng rng(spec.seed, sample_index * 0x100000001ULL + static_cast<std::uint64_t>(n));
        double h, l;
        rng.next_normal_pair(h, l);
        const cplx g = cplx{h, l} * inv_sqrt2;
        d.g[static_cast<std::size_t>(n - 1)] = g;
        d.field.set(static_cast<std::size_t>(n),
                    g / std::pow(static_cast<double>(n), 0.5 * spec.k));
    }
    return d;
}

double alpha_N(int /*k*/, long n_cut) {
    double s = 0.0;
    for (long n = n_cut; n >= 1; --n) s += 1.0 / static_cast<double>(n);
    return 2.0 * s;
}

double chi_bump(double x) {
    const double a = std::abs(x);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    const double t = a - 1.0;  // in (0, 1)
    return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

double density_F(int k, long n_cut, double R, const FourierField& u) {
    if (k < 1) throw std::invalid_argument("density_F: k >= 1 required");
    const FourierField un = project_low(u, n_cut);
    double prod = 1.0;
    for (int j = 0; j <= k - 2; ++j)
        prod *= chi_R(make_energy(j).value(un), R);
    prod *= chi_R(make_energy(k - 1).value(un) - alpha_N(k, n_cut), R);
    return prod * std::exp(-make_energy(k).remainder(un));
}

}  // namespace bo
