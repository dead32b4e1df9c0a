#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bo/energy.hpp"
#include "bo/flow.hpp"

using namespace bo;

namespace {
const double pi = 3.14159265358979324;

// |D E(u)[X(u)]| divided by the magnitude of the quadratic contribution.
double conservation_residual(int k, const FourierField& u) {
    const EnergyFunctional e = make_energy(k);
    const FourierField w = vector_field_full(u);
    const double scale = 2.0 * e.lambda() *
                         std::sqrt(sobolev_norm_sq(u, e.s()) * sobolev_norm_sq(w, e.s()));
    return std::abs(e.derivative(u, w)) / (scale + 1e-300);
}
}  // namespace

TEST_CASE("energy values on known fields") {
    const EnergyFunctional e1 = make_energy(2);
    CHECK(e1.value(FourierField(4)) == doctest::Approx(0.0));

    FourierField c(1);
    c.set(1, cplx{1.0, 0.0});  // 2 cos x
    // 2 pi * 2 + (3/4) * 0 + (1/8) * 12 pi
    CHECK(e1.value(c) == doctest::Approx(4.0 * pi + 1.5 * pi).epsilon(1e-12));

    const FourierField u = random_field(10, 3);
    CHECK(std::isfinite(make_energy(4).value(u)));
    CHECK(make_energy(0).value(u) == doctest::Approx(sobolev_norm_sq(u, 0.0)));
}

TEST_CASE("all four energies are conserved along the full vector field") {
    for (std::uint64_t i = 0; i < 4; ++i) {
        const FourierField u = random_field(7, 100 + i);
        for (int k = 0; k <= 4; ++k) {
            INFO("k = " << k << ", sample " << i);
            CHECK(conservation_residual(k, u) <= 1e-8);
        }
    }
}

TEST_CASE("calibration recovers the coefficients") {
    CHECK_THROWS_AS(calibrate_energy(2, 0, 1), std::invalid_argument);

    const CalibrationResult r2 = calibrate_energy(2, 12, 7);
    CHECK(r2.lambda == doctest::Approx(two_pi).epsilon(1e-10));
    CHECK(r2.rel_residual <= 1e-8);

    const CalibrationResult r4 = calibrate_energy(4, 12, 7, 6);
    CHECK(r4.lambda == doctest::Approx(two_pi).epsilon(1e-9));
    CHECK(r4.rel_residual <= 1e-8);

    const CalibrationResult r1 = calibrate_energy(1, 12, 7);
    CHECK(r1.rel_residual <= 1e-8);
    CHECK(r1.null_dim == 0);
    CHECK(r1.coeffs[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    // ratio recorded in docs: beta / lambda = 1/(6 pi)
    CHECK(r1.coeffs[0] / r1.lambda == doctest::Approx(1.0 / (6.0 * pi)).epsilon(1e-10));

    const CalibrationResult r3 = calibrate_energy(3, 24, 7);
    CHECK(r3.rel_residual <= 1e-8);
    CHECK(r3.rank == 6);
    CHECK(r3.null_dim == 0);
    const double expect[] = {0.5, 1.5, 0.0, 1.0 / 3.0, 0.25, 0.05};
    const EnergyFunctional e3 = make_energy(3);
    for (int j = 0; j < 6; ++j) {
        INFO(r3.labels[j]);
        CHECK(r3.coeffs[j] == doctest::Approx(expect[j]).epsilon(1e-8));
        CHECK(e3.terms()[j].coeff == expect[j]);  // the pinned values match
    }
}

TEST_CASE("g_value basics") {
    for (std::uint64_t i = 0; i < 4; ++i) {
        const FourierField u = random_field(24, 200 + i);
        for (long N : {8L, 16L, 32L}) {
            // exact invariants of the truncated flow: k = 0 and k = 1
            const double sc = std::abs(make_energy(1).value(project_low(u, N))) + 1e-300;
            CHECK(std::abs(g_value(0, N, u)) <= 1e-10);
            CHECK(std::abs(g_value(1, N, u)) / sc <= 1e-10);

            // k = 2 closed form
            const double chain = g_value(2, N, u);
            const double closed = g1_closed_form(u, N);
            CHECK(chain == doctest::Approx(closed).epsilon(1e-10));
            CHECK(std::isfinite(g_value(3, N, u)));
            CHECK(std::isfinite(g_value(4, N, u)));
        }
    }
}

TEST_CASE("g_value support and scaling") {
    const FourierField u = random_field(8, 300);  // n_max = 8 <= N/2
    CHECK(g_value(2, 16, u) == doctest::Approx(0.0));

    const FourierField w = random_field(24, 301);
    const double base = g_value(2, 16, w);
    const double scaled = g_value(2, 16, scale(w, 2.0));
    CHECK(scaled == doctest::Approx(32.0 * base).epsilon(1e-12));  // degree 5
}

TEST_CASE("g_value agrees with finite differences of the evolved energy") {
    const FourierField u = random_field(12, 400);
    const long N = 12;
    const EnergyFunctional e = make_energy(2);
    const double exact = g_value(e, N, u);

    FlowSpec spec;
    spec.n_cut = N;
    spec.dt = 1e-4;
    spec.tol = 1e-12;
    auto fd = [&](double h) {
        const double ep = e.value(project_low(evolve(spec, u, h), N));
        const double em = e.value(project_low(evolve(spec, u, -h), N));
        return (ep - em) / (2.0 * h);
    };
    const double h = 2e-3;
    const double d1 = fd(h), d2 = fd(h / 2.0);
    // observed order >= 2: the Richardson combination should be much closer
    const double rich = (4.0 * d2 - d1) / 3.0;
    CHECK(rich == doctest::Approx(exact).epsilon(1e-7));
    CHECK(std::abs(d2 - exact) <= 0.3 * std::abs(d1 - exact) + 1e-12);
}
