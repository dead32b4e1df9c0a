#ifndef BO_REPORT_HPP
#define BO_REPORT_HPP

#include <cstdint>
#include <vector>

#include "bo/energy.hpp"
#include "bo/field.hpp"
#include "bo/flow.hpp"

namespace bo {

struct DecayRow {
    long n_cut;
    double estimate;   // sqrt(mean G^2) over the draws
    double std_error;  // delta-method standard error of the estimate
    double energy_rms; // sqrt(mean E^2), the natural magnitude scale
};

struct DecayReport {
    int k = 2;          // index of G_N^{k/2}
    int measure_k = 2;  // index of the sampling measure mu_{measure_k/2}
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<DecayRow> rows;
};

// Monte Carlo estimate of ||G_N^{k/2}||_{L^2(d mu_{measure_k/2})} per N.
// measure_k = 0 means measure_k = k. Draws are indexed from the seed, so the
// report reproduces bit-for-bit.
DecayReport run_decay_study(int k, const std::vector<long>& n_grid, std::size_t samples,
                            std::uint64_t seed, int measure_k = 0);

struct IdentityReport {
    std::size_t checks = 0;
    std::size_t failures = 0;
    double worst = 0.0;  // largest relative residual seen
};

// All machine-precision identities over `fields` random fields with
// n_max in {8, 16, 32}; a check fails when its residual exceeds tol.
IdentityReport run_identity_suite(std::uint64_t seed, double tol = 1e-10,
                                  std::size_t fields = 100);

struct RecurrenceReport {
    double t_final = 0.0;
    double window = 0.0;
    std::vector<double> times;      // sample stride
    std::vector<double> distances;  // ||u(t) - u(0)||_{H^s}
    std::vector<double> window_minima;
    std::vector<double> running_minima;  // per window, over all time so far
};

// Distance-to-start trace of the truncated flow. sample_k > 0 declares u0 a
// mu_{sample_k/2} draw and rejects s >= (sample_k - 1)/2 (no such regularity
// almost surely).
RecurrenceReport run_recurrence(const FlowSpec& spec, const FourierField& u0,
                                double t_final, double s, double window,
                                double stride, int sample_k = 0);

}  // namespace bo

#endif
