#include "bo/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bo {

double FourierField::eval(double x) const {
    cplx s{};
    for (std::size_t j = 1; j <= c_.size(); ++j)
        s += c_[j - 1] * std::exp(cplx{0.0, static_cast<double>(j) * x});
    return 2.0 * s.real();
}

void FourierField::trim(double tol) {
    while (!c_.empty() && std::abs(c_.back()) <= tol) c_.pop_back();
}

cplx Multiplier::symbol(long j) const {
    switch (kind) {
        case Kind::derivative: {
            // (i j)^alpha
            cplx ij{0.0, static_cast<double>(j)};
            cplx r{1.0, 0.0};
            for (int a = 0; a < alpha; ++a) r *= ij;
            return r;
        }
        case Kind::hilbert:
            return cplx{0.0, j > 0 ? -1.0 : (j < 0 ? 1.0 : 0.0)};
        case Kind::dirichlet_low:
            return (std::labs(j) <= cutoff) ? cplx{1.0, 0.0} : cplx{};
        case Kind::dirichlet_high:
            return (std::labs(j) > cutoff) ? cplx{1.0, 0.0} : cplx{};
    }
    return {};
}

FourierField apply_multiplier(const Multiplier& m, const FourierField& u) {
    FourierField out(u.n_max());
    for (std::size_t j = 1; j <= u.n_max(); ++j)
        out.set(j, m.symbol(static_cast<long>(j)) * u.coeff(static_cast<long>(j)));
    if (m.kind == Multiplier::Kind::dirichlet_low) out.trim();
    return out;
}

FourierField derivative(const FourierField& u, int order) {
    return apply_multiplier(Multiplier::derivative(order), u);
}

FourierField hilbert(const FourierField& u) {
    return apply_multiplier(Multiplier::hilbert(), u);
}

FourierField project_low(const FourierField& u, long n) {
    return apply_multiplier(Multiplier::dirichlet_low(n), u);
}

FourierField project_high(const FourierField& u, long n) {
    return apply_multiplier(Multiplier::dirichlet_high(n), u);
}

MeanField product(const FourierField& u, const FourierField& v) {
    const long a = static_cast<long>(u.n_max());
    const long b = static_cast<long>(v.n_max());
    MeanField out;
    out.osc = FourierField(static_cast<std::size_t>(std::max(a + b, 0L)));
    if (a == 0 || b == 0) return out;
    // mode 0: 2 Re sum c_j(u) conj(c_j(v))
    cplx mean{};
    for (long j = 1; j <= std::min(a, b); ++j) mean += u.coeff(j) * std::conj(v.coeff(j));
    out.mean = 2.0 * mean.real();
    // mode m >= 1: sum over j with j, m-j both nonzero and in band
    for (long m = 1; m <= a + b; ++m) {
        cplx s{};
        const long lo = std::max(-a, m - b);
        const long hi = std::min(a, m + b);
        for (long j = lo; j <= hi; ++j) {
            if (j == 0 || j == m) continue;
            s += u.coeff(j) * v.coeff(m - j);
        }
        out.osc.set(static_cast<std::size_t>(m), s);
    }
    return out;
}

MeanField product(const MeanField& u, const MeanField& v) {
    MeanField out = product(u.osc, v.osc);
    out.mean += u.mean * v.mean;
    const std::size_t n = std::max(u.osc.n_max(), v.osc.n_max());
    if (out.osc.n_max() < n) out.osc.coeffs().resize(n);
    for (std::size_t j = 1; j <= u.osc.n_max(); ++j)
        out.osc.set(j, out.osc.coeff(static_cast<long>(j)) + v.mean * u.osc.coeff(static_cast<long>(j)));
    for (std::size_t j = 1; j <= v.osc.n_max(); ++j)
        out.osc.set(j, out.osc.coeff(static_cast<long>(j)) + u.mean * v.osc.coeff(static_cast<long>(j)));
    return out;
}

double sobolev_norm_sq(const FourierField& u, double s) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= u.n_max(); ++j)
        acc += std::pow(static_cast<double>(j), 2.0 * s) * std::norm(u.coeff(static_cast<long>(j)));
    return 2.0 * acc;
}

double sobolev_pairing(const FourierField& u, const FourierField& v, double s) {
    double acc = 0.0;
    const std::size_t n = std::min(u.n_max(), v.n_max());
    for (std::size_t j = 1; j <= n; ++j) {
        const cplx p = std::conj(u.coeff(static_cast<long>(j))) * v.coeff(static_cast<long>(j));
        acc += std::pow(static_cast<double>(j), 2.0 * s) * p.real();
    }
    return 2.0 * acc;
}

FourierField add(const FourierField& u, const FourierField& v) {
    FourierField out(std::max(u.n_max(), v.n_max()));
    for (std::size_t j = 1; j <= out.n_max(); ++j)
        out.set(j, u.coeff(static_cast<long>(j)) + v.coeff(static_cast<long>(j)));
    return out;
}

FourierField sub(const FourierField& u, const FourierField& v) {
    FourierField out(std::max(u.n_max(), v.n_max()));
    for (std::size_t j = 1; j <= out.n_max(); ++j)
        out.set(j, u.coeff(static_cast<long>(j)) - v.coeff(static_cast<long>(j)));
    return out;
}

FourierField scale(const FourierField& u, double a) {
    FourierField out(u.n_max());
    for (std::size_t j = 1; j <= u.n_max(); ++j) out.set(j, a * u.coeff(static_cast<long>(j)));
    return out;
}

}  // namespace bo
