#ifndef BO_MEASURE_HPP
#define BO_MEASURE_HPP

#include <cstdint>
#include <vector>

#include "bo/energy.hpp"
#include "bo/field.hpp"

namespace bo {

// mu_{k/2}: the law of the random series with coefficients g_n / n^{k/2},
// g_n = (h_n + i l_n)/sqrt(2), so E|g_n|^2 = 1.
struct MeasureSpec {
    int k = 2;
    long n_cut = 64;
    std::uint64_t seed = 0;
};

struct GaussianDraw {
    FourierField field;     // c_n = g_n / n^{k/2}, n = 1..n_cut
    std::vector<cplx> g;    // the raw g_n, reusable by the moment checks
};

// Deterministic given (seed, sample_index); mode n uses its own derived
// stream, so truncations at different n_cut agree on shared modes.
GaussianDraw sample(const MeasureSpec& spec, std::uint64_t sample_index = 0);

// Renormalization constant: E ||pi_N phi_{k/2}||^2_{H^{(k-1)/2}} = 2 sum 1/n.
double alpha_N(int k, long n_cut);

// Smooth bump: 1 on |x| <= 1, supported in [-2, 2].
double chi_bump(double x);
inline double chi_R(double x, double R) { return chi_bump(x / R); }

// F_{k/2,N,R}(u) = (prod_{j=0}^{k-2} chi_R(E_{j/2}(pi_N u)))
//                  * chi_R(E_{(k-1)/2}(pi_N u) - alpha_N) * exp(-R_{k/2}(pi_N u)).
// For k = 1 the leading product is empty (= 1).
double density_F(int k, long n_cut, double R, const FourierField& u);

}  // namespace bo

#endif
