#include "bo/flow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bo {

namespace {

cplx linear_symbol(FlowSpec::Equation eq, long j) {
    const double dj = static_cast<double>(j);
    if (eq == FlowSpec::Equation::BO) return cplx{0.0, -dj * std::abs(dj)};
    return cplx{0.0, dj * dj * dj};
}

// -pi_N((pi_N u) d_x (pi_N u)), evaluated in the working band of u.
FourierField nonlinear_term(const FlowSpec& spec, const FourierField& u) {
    FourierField out(u.n_max());
    if (!spec.nonlinear) return out;
    const FourierField un = project_low(u, spec.n_cut);
    const MeanField p = product(un, derivative(un));
    const std::size_t top =
        std::min<std::size_t>(u.n_max(), static_cast<std::size_t>(spec.n_cut));
    for (std::size_t j = 1; j <= top; ++j)
        out.set(j, -p.osc.coeff(static_cast<long>(j)));
    return out;
}

FourierField ifrk4_step(const FlowSpec& spec, const FourierField& u, double h,
                        const std::vector<cplx>& eh, const std::vector<cplx>& eh2) {
    const std::size_t n = u.n_max();
    auto phase = [n](const FourierField& f, const std::vector<cplx>& e) {
        FourierField out(n);
        for (std::size_t j = 1; j <= n; ++j)
            out.set(j, e[j - 1] * f.coeff(static_cast<long>(j)));
        return out;
    };
    const FourierField k1 = nonlinear_term(spec, u);
    const FourierField k2 =
        nonlinear_term(spec, phase(add(u, scale(k1, 0.5 * h)), eh2));
    const FourierField k3 =
        nonlinear_term(spec, add(phase(u, eh2), scale(k2, 0.5 * h)));
    const FourierField k4 =
        nonlinear_term(spec, add(phase(u, eh), scale(phase(k3, eh2), h)));
    FourierField out = phase(u, eh);
    const FourierField mid = phase(add(k2, k3), eh2);
    for (std::size_t j = 1; j <= n; ++j) {
        const long l = static_cast<long>(j);
        out.set(j, out.coeff(l) + (h / 6.0) * (eh[j - 1] * k1.coeff(l) +
                                               2.0 * mid.coeff(l) + k4.coeff(l)));
    }
    return out;
}

FourierField integrate_fixed(const FlowSpec& spec, const FourierField& u0, double t,
                             double dt) {
    const long steps = std::max(1L, static_cast<long>(std::ceil(std::abs(t) / dt)));
    const double h = t / static_cast<double>(steps);
    const std::size_t n = u0.n_max();
    std::vector<cplx> eh(n), eh2(n);
    for (std::size_t j = 1; j <= n; ++j) {
        const cplx l = linear_symbol(spec.equation, static_cast<long>(j));
        eh[j - 1] = std::exp(h * l);
        eh2[j - 1] = std::exp(0.5 * h * l);
    }
    FourierField u = u0;
    for (long s = 0; s < steps; ++s) u = ifrk4_step(spec, u, h, eh, eh2);
    return u;
}

}  // namespace

FourierField flow_vector_field(const FlowSpec& spec, const FourierField& u) {
    FourierField out(u.n_max());
    const FourierField nl = nonlinear_term(spec, u);
    for (std::size_t j = 1; j <= u.n_max(); ++j) {
        const long l = static_cast<long>(j);
        out.set(j, linear_symbol(spec.equation, l) * u.coeff(l) + nl.coeff(l));
    }
    return out;
}

FourierField evolve(const FlowSpec& spec, const FourierField& u0, double t) {
    if (spec.dt <= 0.0 || spec.n_cut < 1)
        throw std::invalid_argument("evolve: need dt > 0 and n_cut >= 1");
    if (t == 0.0) return u0;
    // working band: the nonlinearity can populate modes up to n_cut
    const std::size_t band = std::max<std::size_t>(
        u0.n_max(), spec.nonlinear ? static_cast<std::size_t>(spec.n_cut) : 0);
    FourierField start(band);
    for (std::size_t j = 1; j <= u0.n_max(); ++j)
        start.set(j, u0.coeff(static_cast<long>(j)));

    const double ref = std::sqrt(sobolev_norm_sq(project_low(start, spec.n_cut), 0.0));
    double dt = spec.dt;
    for (int halvings = 0; halvings <= 14; ++halvings) {
        const FourierField u = integrate_fixed(spec, start, t, dt);
        const double now = std::sqrt(sobolev_norm_sq(project_low(u, spec.n_cut), 0.0));
        const double drift = std::abs(now - ref) / std::max(ref, 1e-300);
        if (drift <= spec.tol || ref == 0.0) return u;
        dt *= 0.5;
    }
    throw std::runtime_error("evolve: step-size underflow before meeting the drift tolerance");
}

std::vector<ConvergenceRow> convergence_probe(const FlowSpec& base, const FourierField& u0,
                                              const std::vector<long>& n_list, double t,
                                              double s) {
    if (n_list.size() < 2)
        throw std::invalid_argument("convergence_probe: need at least two truncations");
    const long n_ref = *std::max_element(n_list.begin(), n_list.end());
    for (long n : n_list)
        if (n != n_ref && 4 * n > n_ref)
            throw std::invalid_argument("convergence_probe: reference must be >= 4x others");
    FlowSpec spec = base;
    spec.n_cut = n_ref;
    const FourierField ref = evolve(spec, u0, t);
    std::vector<ConvergenceRow> rows;
    for (long n : n_list) {
        if (n == n_ref) continue;
        spec.n_cut = n;
        const FourierField un = evolve(spec, u0, t);
        rows.push_back({n, std::sqrt(sobolev_norm_sq(sub(ref, un), s))});
    }
    return rows;
}

}  // namespace bo
