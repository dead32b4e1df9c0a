#include "bo/report.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bo/measure.hpp"
#include "bo/monomial.hpp"

namespace bo {

DecayReport run_decay_study(int k, const std::vector<long>& n_grid, std::size_t samples,
                            std::uint64_t seed, int measure_k) {
    if (samples == 0) throw std::invalid_argument("run_decay_study: samples >= 1");
    DecayReport rep;
    rep.k = k;
    rep.measure_k = measure_k > 0 ? measure_k : k;
    rep.samples = samples;
    rep.seed = seed;
    const EnergyFunctional e = make_energy(k);
    for (long n : n_grid) {
        const MeasureSpec mspec{rep.measure_k, n, seed};
        std::vector<double> g2(samples), e2(samples);
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(samples); ++i) {
            const FourierField u = sample(mspec, static_cast<std::uint64_t>(i)).field;
            const double g = g_value(e, n, u);
            g2[i] = g * g;
            const double ev = e.value(u);
            e2[i] = ev * ev;
        }
        double m2 = 0.0, m4 = 0.0, me = 0.0;  // fixed order: deterministic
        for (std::size_t i = 0; i < samples; ++i) {
            m2 += g2[i];
            m4 += g2[i] * g2[i];
            me += e2[i];
        }
        m2 /= samples;
        m4 /= samples;
        me /= samples;
        const double est = std::sqrt(m2);
        const double var_m2 = std::max(0.0, m4 - m2 * m2) / samples;
        const double se = est > 0.0 ? 0.5 * std::sqrt(var_m2) / est : std::sqrt(std::sqrt(var_m2));
        rep.rows.push_back({n, est, se, std::sqrt(me)});
    }
    return rep;
}

IdentityReport run_identity_suite(std::uint64_t seed, double tol, std::size_t fields) {
    if (fields == 0) throw std::invalid_argument("run_identity_suite: empty field set");
    IdentityReport rep;
    const std::size_t sizes[] = {8, 16, 32};
    const VanishingTerm terms[] = {VanishingTerm::hebSR_I, VanishingTerm::hebSR_II,
                                   VanishingTerm::esrty_III, VanishingTerm::esrty_II_cancel};
    auto note = [&](double r) {
        ++rep.checks;
        rep.worst = std::max(rep.worst, r);
        if (!(r <= tol)) ++rep.failures;
    };
    for (std::size_t i = 0; i < fields; ++i) {
        const std::size_t n_max = sizes[i % 3];
        const FourierField u = random_field(n_max, seed, i);
        for (int m : {1, 2, 3}) {
            const IntparResiduals r = check_intpar_identities(u, m, static_cast<long>(n_max));
            note(r.first_equality);
            note(r.pairing_sum);
        }
        for (VanishingTerm t : terms) {
            note(check_vanishing_term(u, static_cast<long>(n_max), t));
            note(check_vanishing_term(u, static_cast<long>(n_max) / 2, t));
        }
    }
    return rep;
}

RecurrenceReport run_recurrence(const FlowSpec& spec, const FourierField& u0,
                                double t_final, double s, double window,
                                double stride, int sample_k) {
    if (sample_k > 0 && s >= 0.5 * (sample_k - 1))
        throw std::invalid_argument(
            "run_recurrence: s too large for the sampled regularity");
    if (stride <= 0.0 || window <= 0.0)
        throw std::invalid_argument("run_recurrence: stride and window must be positive");
    RecurrenceReport rep;
    rep.t_final = t_final;
    rep.window = window;
    rep.times.push_back(0.0);
    rep.distances.push_back(0.0);
    if (t_final <= 0.0) return rep;

    FourierField u = u0;
    double t = 0.0;
    double wmin = std::numeric_limits<double>::infinity();
    double rmin = std::numeric_limits<double>::infinity();
    double next_window = window;
    while (t < t_final - 0.5 * stride) {
        u = evolve(spec, u, stride);
        t += stride;
        const double d = std::sqrt(sobolev_norm_sq(sub(u, u0), s));
        rep.times.push_back(t);
        rep.distances.push_back(d);
        wmin = std::min(wmin, d);
        rmin = std::min(rmin, d);
        if (t >= next_window - 0.5 * stride) {
            rep.window_minima.push_back(wmin);
            rep.running_minima.push_back(rmin);
            wmin = std::numeric_limits<double>::infinity();
            next_window += window;
        }
    }
    return rep;
}

}  // namespace bo
