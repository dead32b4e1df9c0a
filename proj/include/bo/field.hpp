#ifndef BO_FIELD_HPP
#define BO_FIELD_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace bo {

using cplx = std::complex<double>;

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Zero-mean real trigonometric polynomial on the 2*pi circle.
// Only the coefficients c_j for j = 1..n_max are stored; c_{-j} = conj(c_j)
// is implied and c_0 = 0 always, so Hermitian symmetry cannot be violated.
class FourierField {
public:
    FourierField() = default;
    explicit FourierField(std::size_t n_max) : c_(n_max) {}
    explicit FourierField(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {}

    std::size_t n_max() const { return c_.size(); }

    // c_j for any integer j (0 outside the stored band, conjugate for j < 0).
    cplx coeff(long j) const {
        if (j == 0) return {};
        long a = j < 0 ? -j : j;
        if (static_cast<std::size_t>(a) > c_.size()) return {};
        return j > 0 ? c_[a - 1] : std::conj(c_[a - 1]);
    }
    void set(std::size_t j, cplx v) { c_[j - 1] = v; }

    const std::vector<cplx>& coeffs() const { return c_; }
    std::vector<cplx>& coeffs() { return c_; }

    // Pointwise value at x; real by construction.
    double eval(double x) const;

    // Drop trailing zero modes (within tol) so degrees stay honest.
    void trim(double tol = 0.0);

    bool operator==(const FourierField&) const = default;

private:
    std::vector<cplx> c_;  // c_[i] = c_{i+1}
};

// A trigonometric polynomial together with its mode-0 coefficient, as produced
// by products. The mean is kept separately so integrals stay exact while the
// field part remains structurally zero-mean.
struct MeanField {
    double mean = 0.0;
    FourierField osc;
};

// Fourier-multiplier operators.
struct Multiplier {
    enum class Kind { derivative, hilbert, dirichlet_low, dirichlet_high };
    Kind kind;
    int alpha = 0;  // derivative order
    long cutoff = 0;  // projector cutoff N

    static Multiplier derivative(int a) { return {Kind::derivative, a, 0}; }
    static Multiplier hilbert() { return {Kind::hilbert, 0, 0}; }
    static Multiplier dirichlet_low(long n) { return {Kind::dirichlet_low, 0, n}; }
    static Multiplier dirichlet_high(long n) { return {Kind::dirichlet_high, 0, n}; }

    // Symbol on mode j > 0.
    cplx symbol(long j) const;
};

FourierField apply_multiplier(const Multiplier& m, const FourierField& u);

// Shorthands.
FourierField derivative(const FourierField& u, int order = 1);
FourierField hilbert(const FourierField& u);
FourierField project_low(const FourierField& u, long n);   // pi_N
FourierField project_high(const FourierField& u, long n);  // pi_{>N}

// Exact (never truncated) convolution product.
MeanField product(const FourierField& u, const FourierField& v);
MeanField product(const MeanField& u, const MeanField& v);

// integral over [0, 2*pi) = 2*pi * mode-0 coefficient.
inline double integrate(const MeanField& u) { return two_pi * u.mean; }

// sum_{j != 0} |j|^{2s} |c_j|^2  (no 2*pi factor; see integrate).
double sobolev_norm_sq(const FourierField& u, double s);

// sum_{j != 0} |j|^{2s} Re(conj(c_j(u)) c_j(v)); the s-form polarization.
double sobolev_pairing(const FourierField& u, const FourierField& v, double s);

FourierField add(const FourierField& u, const FourierField& v);
FourierField sub(const FourierField& u, const FourierField& v);
FourierField scale(const FourierField& u, double a);

}  // namespace bo

#endif
