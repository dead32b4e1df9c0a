#ifndef BO_LATTICE_HPP
#define BO_LATTICE_HPP

#include <string>
#include <vector>

namespace bo {

// The lattice sums whose asymptotic rates the estimates assert:
//   algebrTV      sum_{|j+l|>N} 1/(|j| l^2)                 = O(ln N / N)
//   algebrTV2(m)  sum_{|j_1+..+j_m|>N} 1/(|j_1| prod j_k^2) = O(ln N / N)
//   serienew      sum_j sqrt(sum_{|j+l|>N} 1/(j^2 l^2))     = O(1/sqrt N)
//   sersaut       sum_{|j+l|>N} |j|/l^2                     = O(N ln N)
// All indices range over 0 < |j_i| <= N.
enum class LatticeSum { algebrTV, algebrTV2, serienew, sersaut };

struct LatticeSumSpec {
    LatticeSum id = LatticeSum::algebrTV;
    int m = 2;   // arity for algebrTV2 (2 or 3)
    long n_cut = 16;
};

// Parallel evaluation; block-wise accumulation keeps the reduction order
// fixed regardless of thread count. Throws when the cost guard is exceeded
// (n_cut > 2^14 for double sums, > 2^8 for triple sums).
double evaluate(const LatticeSumSpec& spec);

// Plain nested-loop reference, kept for testing the parallel kernels.
double evaluate_serial(const LatticeSumSpec& spec);

// The scaling that the lemma's O(.) divides out; bounded iff the rate holds.
double rate_scale(LatticeSum id, long n_cut);

struct RateFit {
    std::string lemma;
    std::vector<long> grid;
    std::vector<double> values;
    std::vector<double> scaled;   // values / rate_scale
    double power = 0.0;           // fitted exponent of N in log S
    double log_power = 0.0;       // fitted exponent of ln N
    double max_scaled = 0.0;
};

// Least-squares fit of log S against (1, log N, log log N) on a geometric
// grid of >= 6 points; acceptance uses max_scaled, not the fitted power.
RateFit fit_rate(LatticeSum id, int m, const std::vector<long>& grid);

// sum_{k=a}^{N} 1/k^2 <= C (N - a + 1)/(a N), exhaustively for all
// 1 <= a <= N <= n_max; returns the number of violations.
long check_integral_bound(long n_max, double c = 2.0);

const char* lattice_sum_name(LatticeSum id);

}  // namespace bo

#endif
