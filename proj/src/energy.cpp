#include "bo/energy.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "bo/rng.hpp"

namespace bo {

namespace {

using M = Monomial;

M u0() { return M::leaf(0); }
M ux() { return M::leaf(1); }
M uxx() { return M::leaf(2); }
M Hux() { return M::H(M::leaf(1)); }
M Huux() { return M::H(M::prod({M::leaf(0), M::leaf(1)})); }

std::vector<WeightedTerm> terms_for(int k) {
    switch (k) {
        case 0:
            return {};
        case 1:
            return {{1.0 / 3.0, "u^3", M::prod({u0(), u0(), u0()})}};
        case 2:
            return {{3.0 / 4.0, "u^2.Hux", M::prod({u0(), u0(), Hux()})},
                    {1.0 / 8.0, "u^4", M::prod({u0(), u0(), u0(), u0()})}};
        case 3:
            // Calibrated (see calibrate_energy and the unit test pinning these).
            return {{1.0 / 2.0, "u.Hux.Hux", M::prod({u0(), Hux(), Hux()})},
                    {3.0 / 2.0, "u.ux.ux", M::prod({u0(), ux(), ux()})},
                    {0.0, "u.Hux.ux", M::prod({u0(), Hux(), ux()})},
                    {1.0 / 3.0, "u^3.Hux", M::prod({u0(), u0(), u0(), Hux()})},
                    {1.0 / 4.0, "u^2.H(u.ux)", M::prod({u0(), u0(), Huux()})},
                    {1.0 / 20.0, "u^5", M::prod({u0(), u0(), u0(), u0(), u0()})}};
        case 4:
            return {{-5.0 / 4.0, "ux^2.Hux", M::prod({ux(), ux(), Hux()})},
                    {-5.0 / 2.0, "u.uxx.Hux", M::prod({u0(), uxx(), Hux()})},
                    {25.0 / 16.0, "u^2.ux^2", M::prod({u0(), u0(), ux(), ux()})},
                    {5.0 / 16.0, "u^2.Hux^2", M::prod({u0(), u0(), Hux(), Hux()})},
                    {5.0 / 8.0, "u.Hux.H(u.ux)", M::prod({u0(), Hux(), Huux()})},
                    {5.0 / 32.0, "u^4.Hux", M::prod({u0(), u0(), u0(), u0(), Hux()})},
                    {5.0 / 24.0, "u^3.H(u.ux)", M::prod({u0(), u0(), u0(), Huux()})},
                    {1.0 / 48.0, "u^6", M::prod({u0(), u0(), u0(), u0(), u0(), u0()})}};
        default:
            throw std::invalid_argument("make_energy: k must be in 0..4");
    }
}

}  // namespace

double EnergyFunctional::value(const FourierField& u) const {
    return lambda_ * sobolev_norm_sq(u, s_) + remainder(u);
}

double EnergyFunctional::remainder(const FourierField& u) const {
    double acc = 0.0;
    for (const auto& t : terms_) acc += t.coeff * eval_integral(t.mono, u);
    return acc;
}

double EnergyFunctional::derivative(const FourierField& u, const FourierField& v) const {
    double acc = 2.0 * lambda_ * sobolev_pairing(u, v, s_);
    for (const auto& t : terms_) acc += t.coeff * directional_derivative(t.mono, u, v);
    return acc;
}

EnergyFunctional make_energy(int k) {
    // lambda = 2 pi makes the stated term coefficients a conservation law
    // under the stored-coefficient norm convention (calibrated; see tests).
    const double lambda = (k == 0) ? 1.0 : two_pi;
    return EnergyFunctional(0.5 * k, lambda, terms_for(k));
}

FourierField vector_field_full(const FourierField& u) {
    const FourierField lin = hilbert(derivative(u, 2));
    const FourierField nl = product(u, derivative(u)).osc;
    return sub(scale(lin, -1.0), nl);
}

FourierField truncated_vector_field(const FourierField& u, long n_cut) {
    const FourierField un = project_low(u, n_cut);
    const FourierField lin = hilbert(derivative(un, 2));
    const FourierField nl = project_low(product(un, derivative(un)).osc, n_cut);
    return sub(scale(lin, -1.0), nl);
}

double g_value(const EnergyFunctional& e, long n_cut, const FourierField& u) {
    const FourierField un = project_low(u, n_cut);
    return e.derivative(un, truncated_vector_field(un, n_cut));
}

double g_value(int k, long n_cut, const FourierField& u) {
    const EnergyFunctional e = make_energy(k);
    return g_value(e, n_cut, u);
}

double g1_closed_form(const FourierField& u, long n_cut) {
    const FourierField un = project_low(u, n_cut);
    const MeanField u2{0.0, project_high(product(un, un).osc, n_cut)};
    const MeanField lead = product(product(MeanField{0.0, un}, MeanField{0.0, un}),
                                   MeanField{0.0, derivative(un)});
    return -0.75 * integrate(product(lead, u2));
}

FourierField random_field(std::size_t n_max, std::uint64_t seed, std::uint64_t index) {
    FourierField f(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rng rng(seed, index * 0x10001ULL + n);
        const double r = std::sqrt(rng.next_double());
        const double t = two_pi * rng.next_double();
        f.set(n, cplx{r * std::cos(t), r * std::sin(t)});
    }
    return f;
}

CalibrationResult calibrate_energy(int k, std::size_t samples, std::uint64_t seed,
                                   std::size_t n_max) {
    if (samples == 0) throw std::invalid_argument("calibrate_energy: empty sample set");
    EnergyFunctional e = make_energy(k);
    const std::size_t m = e.terms().size();

    Eigen::VectorXd quad(samples);      // derivative of ||u||^2_{H^s}
    Eigen::MatrixXd term_d(samples, m); // derivatives of each integral term
    for (std::size_t i = 0; i < samples; ++i) {
        const FourierField u = random_field(n_max, seed, i);
        const FourierField w = vector_field_full(u);
        quad(i) = 2.0 * sobolev_pairing(u, w, e.s());
        for (std::size_t j = 0; j < m; ++j)
            term_d(i, j) = directional_derivative(e.terms()[j].mono, u, w);
    }

    CalibrationResult out;
    out.samples = samples;
    out.seed = seed;
    for (const auto& t : e.terms()) out.labels.push_back(t.label);

    if (k == 0) {  // nothing to fit: the L^2 norm is conserved as is
        out.lambda = 1.0;
        out.rank = 0;
        double mx = 0.0;
        for (std::size_t i = 0; i < samples; ++i)
            mx = std::max(mx, std::abs(quad(i)));
        out.rel_residual = mx;
        return out;
    }

    if (k == 2 || k == 4) {
        // Coefficients fixed by the explicit energies; fit lambda alone.
        Eigen::VectorXd fixed = Eigen::VectorXd::Zero(samples);
        for (std::size_t i = 0; i < samples; ++i)
            for (std::size_t j = 0; j < m; ++j)
                fixed(i) += e.terms()[j].coeff * term_d(i, j);
        out.lambda = -fixed.dot(quad) / quad.squaredNorm();
        out.rank = 1;
        for (std::size_t j = 0; j < m; ++j) out.coeffs.push_back(e.terms()[j].coeff);
        out.rel_residual = (out.lambda * quad + fixed).norm() /
                           std::max(fixed.norm(), 1e-300);
        return out;
    }

    // k = 1 or 3: pin lambda = 2 pi and fit all term coefficients.
    out.lambda = two_pi;
    const Eigen::VectorXd b = out.lambda * quad;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(term_d, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-10);
    out.rank = static_cast<int>(svd.rank());
    out.null_dim = static_cast<int>(m) - out.rank;
    const Eigen::VectorXd c = svd.solve(-b);
    for (std::size_t j = 0; j < m; ++j) out.coeffs.push_back(c(j));
    out.rel_residual = (term_d * c + b).norm() / std::max(b.norm(), 1e-300);
    return out;
}

}  // namespace bo
