// Acceptance gate: one line per criterion, exit code 0 iff all pass.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "bo/energy.hpp"
#include "bo/field.hpp"
#include "bo/flow.hpp"
#include "bo/lattice.hpp"
#include "bo/measure.hpp"
#include "bo/monomial.hpp"
#include "bo/report.hpp"
#include "bo/rng.hpp"
#include "bo/wick.hpp"

using namespace bo;

namespace {

int overall = 0;

void report(int idx, const char* name, bool pass, double seconds) {
    std::printf("[%2d/10] %-34s %s  (%.1f s)\n", idx, name, pass ? "PASS" : "FAIL",
                seconds);
    std::fflush(stdout);
    if (!pass) overall = 1;
}

template <typename F>
void run(int idx, const char* name, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = f();
    } catch (const std::exception& e) {
        std::printf("        exception: %s\n", e.what());
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(idx, name, ok, dt);
}

// --- 1: exact identity suite ------------------------------------------------
bool criterion_identities() {
    const IdentityReport rep = run_identity_suite(20260823ULL, 1e-10, 100);
    std::printf("        %zu checks, worst residual %.2e\n", rep.checks, rep.worst);
    return rep.failures == 0;
}

// --- 2: closed-form oracle for G_N^1 ---------------------------------------
bool criterion_closed_form() {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const FourierField u = random_field(24, 7002ULL, i);
        const long n_cut = 8 + 4 * static_cast<long>(i % 3);  // 8, 12, 16
        const double chain = g_value(2, n_cut, u);
        const double closed = g1_closed_form(u, n_cut);
        const double rel =
            std::abs(chain - closed) / std::max({std::abs(closed), std::abs(chain), 1e-300});
        worst = std::max(worst, rel);
    }
    std::printf("        worst relative mismatch %.2e\n", worst);
    return worst <= 1e-10;
}

// --- 3: conservation and truncated-flow invariants -------------------------
bool criterion_conservation() {
    bool ok = true;
    for (int k : {1, 2}) {
        const EnergyFunctional e = make_energy(k);
        double worst = 0.0;
        for (std::uint64_t i = 0; i < 20; ++i) {
            const FourierField u = random_field(7, 3003ULL, i);
            const FourierField w = vector_field_full(u);
            const double scale =
                2.0 * e.lambda() *
                std::sqrt(sobolev_norm_sq(u, e.s()) * sobolev_norm_sq(w, e.s()));
            worst = std::max(worst, std::abs(e.derivative(u, w)) / (scale + 1e-300));
        }
        std::printf("        k=%d d/dt residual %.2e\n", k, worst);
        ok = ok && worst <= 1e-8;
    }

    FlowSpec spec;
    spec.n_cut = 64;
    spec.dt = 2.5e-4;   // L^2 drift control alone leaves the cubic part of
    spec.tol = 1e-11;   // E_{1/2} a step too loose for the 1e-8 bar
    const FourierField u0 = sample({2, 64, 33}).field;
    const EnergyFunctional eh = make_energy(1);
    const double l0 = sobolev_norm_sq(project_low(u0, 64), 0.0);
    const double e0 = eh.value(project_low(u0, 64));
    double dl = 0.0, de = 0.0;
    for (double t : {0.25, 0.5, 1.0}) {
        const FourierField ut = project_low(evolve(spec, u0, t), 64);
        dl = std::max(dl, std::abs(sobolev_norm_sq(ut, 0.0) - l0) / l0);
        de = std::max(de, std::abs(eh.value(ut) - e0) / std::abs(e0));
    }
    std::printf("        flow drift: L2 %.2e, E_{1/2} %.2e\n", dl, de);
    return ok && dl <= 1e-8 && de <= 1e-8;
}

// --- 4: orthogonality sweeps ------------------------------------------------
bool criterion_orthogonality() {
    const std::pair<SweepReport, const char*> runs[] = {
        {verify_orthogonality(OrthStatement::tildeA_n3, 4), "n=3"},
        {verify_orthogonality(OrthStatement::tildeA_n4, 4), "n=4"},
        {verify_orthogonality(OrthStatement::cor55, 3, 4), "n=4"},
        {verify_orthogonality(OrthStatement::cor55, 3, 5), "n=5"},
        {verify_orthogonality(OrthStatement::forp2, 4), ""},
        {verify_orthogonality(OrthStatement::orthtzv, 4), ""},
        {verify_orthogonality(OrthStatement::rem5_disjoint, 4), ""},
    };
    bool ok = true;
    for (const auto& [rep, extra] : runs) {
        std::printf("        %-32s %s: %llu pairs, %llu violations\n",
                    rep.statement.c_str(), extra,
                    static_cast<unsigned long long>(rep.pairs_checked),
                    static_cast<unsigned long long>(rep.violations));
        ok = ok && rep.violations == 0 && rep.pairs_checked > 0;
    }
    return ok;
}

// --- 5: partition and characterization -------------------------------------
bool criterion_partition() {
    bool ok = check_partition_B(5, 6).violations == 0;
    ok = ok && check_union_A(5, 6).violations == 0;
    ok = ok && check_dommat(5, 6).violations == 0;
    for (long n = 1; n <= 8; ++n) ok = ok && check_bersstr(10, n).violations == 0;
    return ok;
}

// --- 6: series rates --------------------------------------------------------
bool criterion_series() {
    const std::vector<long> wide = {16, 32, 64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384};
    const std::vector<long> narrow = {8, 16, 32, 64, 128, 256};
    bool ok = true;
    struct Probe {
        LatticeSum id;
        int m;
        const std::vector<long>* grid;
    };
    const Probe probes[] = {{LatticeSum::algebrTV, 2, &wide},
                            {LatticeSum::algebrTV2, 2, &wide},
                            {LatticeSum::algebrTV2, 3, &narrow},
                            {LatticeSum::serienew, 2, &wide},
                            {LatticeSum::sersaut, 2, &wide}};
    for (const auto& p : probes) {
        const RateFit fit = fit_rate(p.id, p.m, *p.grid);
        const bool bounded = fit.max_scaled <= 10.0 * fit.scaled.front();
        std::printf("        %-10s m=%d  sup scaled %.3g (first %.3g)  %s\n",
                    fit.lemma.c_str(), p.m, fit.max_scaled, fit.scaled.front(),
                    bounded ? "bounded" : "UNBOUNDED");
        ok = ok && bounded;
    }
    const long bad = check_integral_bound(1024, 2.0);
    std::printf("        integral bound C=2, N<=1024: %ld violations\n", bad);
    return ok && bad == 0;
}

// --- 7: Monte Carlo decay of G_N^{k/2} -------------------------------------
bool criterion_decay() {
    const std::vector<long> grid = {16, 32, 64, 128, 256};
    bool ok = true;
    for (int k : {1, 2, 3, 4}) {
        const DecayReport rep = run_decay_study(k, grid, 2000, 424242ULL);
        std::printf("        k=%d est:", k);
        for (const auto& r : rep.rows) std::printf(" %.3g", r.estimate);
        std::printf("\n");
        if (k == 1) {
            for (const auto& r : rep.rows)
                ok = ok && r.estimate <= 1e-10 * std::max(1.0, r.energy_rms);
            continue;
        }
        for (std::size_t i = 1; i < rep.rows.size(); ++i)
            ok = ok && rep.rows[i].estimate < rep.rows[i - 1].estimate;
        for (std::size_t i = 0; i + 2 < rep.rows.size(); ++i) {
            const DecayRow &a = rep.rows[i], &b = rep.rows[i + 2];  // N and 4N
            ok = ok && b.estimate <= 0.8 * a.estimate;
            const double gap = a.estimate - b.estimate;
            ok = ok && gap > 3.0 * std::sqrt(a.std_error * a.std_error +
                                             b.std_error * b.std_error);
        }
    }
    return ok;
}

// --- 8: measure sampling ----------------------------------------------------
bool criterion_sampling() {
    const int k = 2;
    const long N = 64;
    const std::size_t M = 100000;
    std::vector<double> sum(N, 0.0), sumsq(N, 0.0);
    double s_l2 = 0.0, s_c = 0.0, s_c2 = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
        const GaussianDraw d = sample({k, N, 55}, i);
        for (long n = 1; n <= N; ++n) {
            const double re = d.field.coeff(n).real();
            sum[n - 1] += re;
            sumsq[n - 1] += re * re;
        }
        s_l2 += sobolev_norm_sq(d.field, 0.0);
        const double c = sobolev_norm_sq(d.field, 0.5 * (k - 1)) - alpha_N(k, N);
        s_c += c;
        s_c2 += c * c;
    }
    bool ok = true;
    for (long n = 1; n <= N; ++n) {
        const double mean = sum[n - 1] / M;
        const double var = sumsq[n - 1] / M - mean * mean;
        const double expect = 0.5 / std::pow(static_cast<double>(n), k);
        ok = ok && std::abs(var - expect) <= 5.0 * expect * std::sqrt(2.0 / M);
    }
    double expect_l2 = 0.0, var_l2 = 0.0;
    for (long n = 1; n <= N; ++n) {
        expect_l2 += 2.0 / std::pow(static_cast<double>(n), k);
        var_l2 += 4.0 / std::pow(static_cast<double>(n), 2 * k);
    }
    const bool l2_ok = std::abs(s_l2 / M - expect_l2) <= 3.0 * std::sqrt(var_l2 / M);
    const double mean_c = s_c / M;
    const double var_c = s_c2 / M - mean_c * mean_c;
    const bool center_ok = std::abs(mean_c) <= 3.0 * std::sqrt(var_c / M);
    std::printf("        L2 moment gap %.3g, centering gap %.3g\n",
                std::abs(s_l2 / M - expect_l2), mean_c);
    return ok && l2_ok && center_ok;
}

// --- 9: Wick oracle vs Monte Carlo on shared draws -------------------------
bool criterion_wick_mc() {
    const long box = 5;
    const std::size_t n_queries = 100;
    const std::size_t draws = 1000000;

    // balanced queries: random pairs (g_n, conj g_n), random placement/signs
    struct Factor {
        long mode;
        bool conj;
    };
    std::vector<std::vector<Factor>> qf(n_queries);
    std::vector<MomentQuery> queries(n_queries);
    Rng qr(909090ULL);
    for (std::size_t q = 0; q < n_queries; ++q) {
        const int pairs = 1 + static_cast<int>(qr.next_u64() % 3);  // n <= 6 factors
        for (int p = 0; p < pairs; ++p) {
            const long mode = 1 + static_cast<long>(qr.next_u64() % box);
            // the g factor: as +mode unconjugated, or as -mode conjugated
            if (qr.next_u64() & 1) {
                queries[q].j_list.push_back(mode);
                qf[q].push_back({mode, false});
            } else {
                queries[q].i_list.push_back(-mode);
                qf[q].push_back({mode, false});
            }
            // the conj factor
            if (qr.next_u64() & 1) {
                queries[q].i_list.push_back(mode);
                qf[q].push_back({mode, true});
            } else {
                queries[q].j_list.push_back(-mode);
                qf[q].push_back({mode, true});
            }
        }
    }

    std::vector<double> acc(n_queries, 0.0), acc2(n_queries, 0.0);
    for (std::size_t d = 0; d < draws; ++d) {
        std::complex<double> g[box + 1];
        for (long n = 1; n <= box; ++n) {
            Rng rng(777ULL, d * 0x100000001ULL + static_cast<std::uint64_t>(n));
            double h, l;
            rng.next_normal_pair(h, l);
            g[n] = std::complex<double>{h, l} * 0.70710678118654752440;
        }
        for (std::size_t q = 0; q < n_queries; ++q) {
            std::complex<double> p{1.0, 0.0};
            for (const Factor& f : qf[q]) p *= f.conj ? std::conj(g[f.mode]) : g[f.mode];
            acc[q] += p.real();
            acc2[q] += p.real() * p.real();
        }
    }
    std::size_t bad = 0;
    double worst_pull = 0.0;
    for (std::size_t q = 0; q < n_queries; ++q) {
        const double mean = acc[q] / draws;
        const double var = std::max(0.0, acc2[q] / draws - mean * mean);
        const double se = std::sqrt(var / draws);
        const double ex = exact_moment(queries[q]);
        const double pull = std::abs(mean - ex) / (se + 1e-300);
        worst_pull = std::max(worst_pull, pull);
        if (pull > 4.0) ++bad;
    }
    std::printf("        worst pull %.2f standard errors\n", worst_pull);
    return bad == 0;
}

// --- 10: flow convergence ---------------------------------------------------
bool criterion_flow_convergence() {
    FlowSpec spec;
    spec.tol = 1e-9;
    const FourierField u0 = sample({4, 512, 2718}).field;
    const auto rows = convergence_probe(spec, u0, {32, 64, 128, 512}, 0.1, 1.2);
    bool ok = rows.size() == 3;
    std::printf("        H^1.2 distances:");
    for (const auto& r : rows) std::printf(" N=%ld %.3g", r.n_cut, r.dist);
    std::printf("\n");
    for (std::size_t i = 1; i < rows.size(); ++i) ok = ok && rows[i].dist < rows[i - 1].dist;
    return ok;
}

}  // namespace

int main() {
    run(1, "exact identity suite", criterion_identities);
    run(2, "closed-form G_N^1 oracle", criterion_closed_form);
    run(3, "conservation laws / flow drift", criterion_conservation);
    run(4, "orthogonality sweeps", criterion_orthogonality);
    run(5, "partition + characterization", criterion_partition);
    run(6, "lattice-sum rates", criterion_series);
    run(7, "G_N decay study", criterion_decay);
    run(8, "measure sampling moments", criterion_sampling);
    run(9, "Wick oracle vs Monte Carlo", criterion_wick_mc);
    run(10, "flow convergence probe", criterion_flow_convergence);
    return overall;
}
