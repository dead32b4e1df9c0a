// boverify: command-line front end for the verification library.
// Exit code 0 iff every contracted assertion of the chosen subcommand holds.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "bo/energy.hpp"
#include "bo/field.hpp"
#include "bo/flow.hpp"
#include "bo/lattice.hpp"
#include "bo/measure.hpp"
#include "bo/report.hpp"
#include "bo/wick.hpp"

using json = nlohmann::json;
using namespace bo;

namespace {

struct CommonOpts {
    int k = 2;
    std::vector<long> n_grid;
    std::size_t samples = 0;
    std::uint64_t seed = 1;
    double tol = -1.0;  // < 0: subcommand default
    std::string out;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--k", o.k, "energy / measure index k (E_{k/2}, mu_{k/2})");
    cmd->add_option("--n-grid", o.n_grid, "truncation grid")->delimiter(',');
    cmd->add_option("--samples", o.samples, "number of random draws");
    cmd->add_option("--seed", o.seed, "base seed for all randomness");
    cmd->add_option("--tol", o.tol, "pass/fail tolerance");
    cmd->add_option("--out", o.out, "write the report to this path");
    cmd->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}));
}

// CSV rendering of the generic report shape used below:
// { "rows": [ {col: scalar, ...}, ... ], ...top-level scalars }
std::string to_csv(const json& rep) {
    std::string s;
    if (!rep.contains("rows") || rep["rows"].empty()) {
        for (auto it = rep.begin(); it != rep.end(); ++it)
            if (!it->is_structured()) s += it.key() + "," + it->dump() + "\n";
        return s;
    }
    const json& rows = rep["rows"];
    bool first = true;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
        if (!first) s += ",";
        s += it.key();
        first = false;
    }
    s += "\n";
    for (const json& row : rows) {
        first = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
            if (!first) s += ",";
            if (it->is_string()) {
                const std::string v = it->get<std::string>();
                s += v.find(',') == std::string::npos ? v : "\"" + v + "\"";
            } else {
                s += it->dump();
            }
            first = false;
        }
        s += "\n";
    }
    return s;
}

int emit(const json& rep, const CommonOpts& o) {
    const std::string text = o.format == "csv" ? to_csv(rep) : rep.dump(2) + "\n";
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "cannot open " << o.out << "\n";
            return 2;
        }
        f << text;
    } else {
        std::cout << text;
    }
    const bool pass = rep.value("pass", false);
    std::cerr << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------

int cmd_identities(const CommonOpts& o) {
    const double tol = o.tol > 0 ? o.tol : 1e-10;
    const std::size_t fields = o.samples ? o.samples : 100;
    const IdentityReport r = run_identity_suite(o.seed, tol, fields);
    json rep{{"subcommand", "identities"},
             {"fields", fields},
             {"tol", tol},
             {"seed", o.seed},
             {"checks", r.checks},
             {"failures", r.failures},
             {"worst_residual", r.worst},
             {"pass", r.failures == 0}};
    return emit(rep, o);
}

int cmd_orthogonality(const CommonOpts& o) {
    const long box = o.n_grid.empty() ? 4 : o.n_grid.front();
    json rows = json::array();
    bool pass = true;
    auto push = [&](const SweepReport& r) {
        rows.push_back({{"statement", r.statement},
                        {"box", r.box},
                        {"pairs_checked", r.pairs_checked},
                        {"violations", r.violations}});
        pass = pass && r.violations == 0;
    };
    for (OrthStatement s : {OrthStatement::tildeA_n3, OrthStatement::tildeA_n4,
                            OrthStatement::cor55, OrthStatement::forp2,
                            OrthStatement::orthtzv, OrthStatement::rem5_disjoint})
        push(verify_orthogonality(s, box));
    push(check_union_A(5, box));
    push(check_partition_B(5, box));
    push(check_dommat(5, box));
    for (long n = 1; n <= box; ++n) push(check_bersstr(2 * box, n));
    json rep{{"subcommand", "orthogonality"}, {"box", box}, {"rows", rows}, {"pass", pass}};
    return emit(rep, o);
}

int cmd_series(const CommonOpts& o) {
    std::vector<long> wide =
        o.n_grid.empty() ? std::vector<long>{16, 32, 64, 128, 256, 512, 1024} : o.n_grid;
    const std::vector<long> narrow = {8, 16, 32, 64, 128, 256};
    json rows = json::array();
    bool pass = true;
    struct Probe {
        LatticeSum id;
        int m;
    };
    for (const Probe& p : {Probe{LatticeSum::algebrTV, 2}, Probe{LatticeSum::algebrTV2, 2},
                           Probe{LatticeSum::algebrTV2, 3}, Probe{LatticeSum::serienew, 2},
                           Probe{LatticeSum::sersaut, 2}}) {
        const RateFit f = fit_rate(p.id, p.m, p.m == 3 ? narrow : wide);
        const bool bounded = f.max_scaled <= 10.0 * f.scaled.front();
        rows.push_back({{"lemma", f.lemma},
                        {"m", p.m},
                        {"max_scaled", f.max_scaled},
                        {"first_scaled", f.scaled.front()},
                        {"power", f.power},
                        {"log_power", f.log_power},
                        {"bounded", bounded}});
        pass = pass && bounded;
    }
    const long bad = check_integral_bound(1024, 2.0);
    pass = pass && bad == 0;
    json rep{{"subcommand", "series"},
             {"rows", rows},
             {"integral_bound_violations", bad},
             {"pass", pass}};
    return emit(rep, o);
}

int cmd_decay(const CommonOpts& o) {
    const std::vector<long> grid =
        o.n_grid.empty() ? std::vector<long>{16, 32, 64, 128} : o.n_grid;
    const std::size_t samples = o.samples ? o.samples : 500;
    const DecayReport r = run_decay_study(o.k, grid, samples, o.seed);
    json rows = json::array();
    for (const DecayRow& row : r.rows)
        rows.push_back({{"n_cut", row.n_cut},
                        {"estimate", row.estimate},
                        {"std_error", row.std_error},
                        {"energy_rms", row.energy_rms}});
    bool pass = true;
    if (o.k == 1) {
        const double tol = o.tol > 0 ? o.tol : 1e-10;
        for (const DecayRow& row : r.rows)
            pass = pass && row.estimate <= tol * std::max(1.0, row.energy_rms);
    } else {
        for (std::size_t i = 1; i < r.rows.size(); ++i)
            pass = pass && r.rows[i].estimate < r.rows[i - 1].estimate;
    }
    json rep{{"subcommand", "decay"}, {"k", o.k},       {"samples", samples},
             {"seed", o.seed},        {"rows", rows},   {"pass", pass}};
    return emit(rep, o);
}

int cmd_density(const CommonOpts& o, double radius) {
    const long n_cut = o.n_grid.empty() ? 32 : o.n_grid.front();
    const std::size_t samples = o.samples ? o.samples : 1000;
    double lo = 1.0, hi = 0.0, mean = 0.0;
    std::size_t interior = 0;
    bool bounded = true;
    for (std::size_t i = 0; i < samples; ++i) {
        const FourierField u = sample({o.k, n_cut, o.seed}, i).field;
        const double f = density_F(o.k, n_cut, radius, u);
        bounded = bounded && std::isfinite(f) && f >= 0.0;
        lo = std::min(lo, f);
        hi = std::max(hi, f);
        mean += f;
        if (f > 0.0) ++interior;
    }
    mean /= samples;
    // Contract: the density is finite, non-negative, and the cutoff radius
    // keeps a non-trivial fraction of mu_{k/2} mass alive.
    const bool pass = bounded && interior > 0;
    json rep{{"subcommand", "density"},
             {"k", o.k},
             {"n_cut", n_cut},
             {"radius", radius},
             {"alpha_N", alpha_N(o.k, n_cut)},
             {"samples", samples},
             {"seed", o.seed},
             {"min", lo},
             {"max", hi},
             {"mean", mean},
             {"positive_fraction", static_cast<double>(interior) / samples},
             {"pass", pass}};
    return emit(rep, o);
}

int cmd_flow_converge(const CommonOpts& o) {
    const std::vector<long> grid =
        o.n_grid.empty() ? std::vector<long>{32, 64, 128, 512} : o.n_grid;
    FlowSpec spec;
    if (o.tol > 0) spec.tol = o.tol;
    const FourierField u0 = sample({o.k, grid.back(), o.seed}).field;
    const auto rows_v = convergence_probe(spec, u0, grid, 0.1, 0.5 * (o.k - 1) - 0.05);
    json rows = json::array();
    bool pass = !rows_v.empty();
    for (std::size_t i = 0; i < rows_v.size(); ++i) {
        rows.push_back({{"n_cut", rows_v[i].n_cut}, {"dist", rows_v[i].dist}});
        if (i > 0) pass = pass && rows_v[i].dist < rows_v[i - 1].dist;
    }
    json rep{{"subcommand", "flow-converge"},
             {"k", o.k},
             {"seed", o.seed},
             {"t", 0.1},
             {"rows", rows},
             {"pass", pass}};
    return emit(rep, o);
}

int cmd_recurrence(const CommonOpts& o, double t_final, double window) {
    const long n_cut = o.n_grid.empty() ? 32 : o.n_grid.front();
    FlowSpec spec;
    spec.n_cut = n_cut;
    if (o.tol > 0) spec.tol = o.tol;
    const FourierField u0 = project_low(sample({o.k, n_cut, o.seed}).field, n_cut);
    const double s = 0.5 * (o.k - 1) - 0.1;
    const RecurrenceReport r =
        run_recurrence(spec, u0, t_final, s, window, window / 16.0, o.k);
    json rows = json::array();
    bool finite = true;
    for (std::size_t i = 0; i < r.times.size(); ++i) {
        rows.push_back({{"t", r.times[i]}, {"dist", r.distances[i]}});
        finite = finite && std::isfinite(r.distances[i]);
    }
    bool monotone = true;
    for (std::size_t i = 1; i < r.running_minima.size(); ++i)
        monotone = monotone && r.running_minima[i] <= r.running_minima[i - 1];
    json rep{{"subcommand", "recurrence"},
             {"k", o.k},
             {"n_cut", n_cut},
             {"s", s},
             {"seed", o.seed},
             {"t_final", t_final},
             {"window", window},
             {"rows", rows},
             {"window_minima", r.window_minima},
             {"running_minima", r.running_minima},
             {"pass", finite && monotone}};
    return emit(rep, o);
}

int cmd_calibrate(const CommonOpts& o) {
    const std::size_t samples = o.samples ? o.samples : 200;
    const double tol = o.tol > 0 ? o.tol : 1e-8;
    const CalibrationResult r = calibrate_energy(o.k, samples, o.seed);
    json coeffs = json::object();
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) coeffs[r.labels[i]] = r.coeffs[i];
    const bool pass = r.rel_residual <= tol && r.null_dim == 0;
    json rep{{"subcommand", "calibrate"},
             {"k", o.k},
             {"samples", r.samples},
             {"seed", r.seed},
             {"lambda", r.lambda},
             {"coefficients", coeffs},
             {"rel_residual", r.rel_residual},
             {"rank", r.rank},
             {"null_dim", r.null_dim},
             {"tol", tol},
             {"pass", pass}};
    return emit(rep, o);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for the truncated-flow energy hierarchy"};
    app.require_subcommand(1);

    CommonOpts o;
    double radius = 10.0, t_final = 2.0, window = 0.5;

    CLI::App* c_id = app.add_subcommand("identities", "machine-precision identity suite");
    CLI::App* c_or = app.add_subcommand("orthogonality", "tuple-set moment sweeps");
    CLI::App* c_se = app.add_subcommand("series", "lattice-sum rate checks");
    CLI::App* c_de = app.add_subcommand("decay", "Monte Carlo decay of G_N^{k/2}");
    CLI::App* c_dn = app.add_subcommand("density", "cutoff density statistics");
    CLI::App* c_fc = app.add_subcommand("flow-converge", "truncated-flow convergence");
    CLI::App* c_re = app.add_subcommand("recurrence", "distance-to-start trace");
    CLI::App* c_ca = app.add_subcommand("calibrate", "fit energy coefficients");
    for (CLI::App* c : {c_id, c_or, c_se, c_de, c_dn, c_fc, c_re, c_ca}) add_common(c, o);
    c_dn->add_option("--radius", radius, "cutoff radius R");
    c_re->add_option("--t-final", t_final, "trace length");
    c_re->add_option("--window", window, "recurrence window length");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_id->parsed()) return cmd_identities(o);
        if (c_or->parsed()) return cmd_orthogonality(o);
        if (c_se->parsed()) return cmd_series(o);
        if (c_de->parsed()) return cmd_decay(o);
        if (c_dn->parsed()) return cmd_density(o, radius);
        if (c_fc->parsed()) return cmd_flow_converge(o);
        if (c_re->parsed()) return cmd_recurrence(o, t_final, window);
        if (c_ca->parsed()) return cmd_calibrate(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
