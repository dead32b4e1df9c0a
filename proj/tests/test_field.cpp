#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bo/energy.hpp"
#include "bo/field.hpp"

using namespace bo;

namespace {
FourierField cosine(std::size_t mode, std::size_t n_max) {
    // 2 cos(mode x): c_mode = 1
    FourierField f(n_max);
    f.set(mode, cplx{1.0, 0.0});
    return f;
}
}  // namespace

TEST_CASE("multipliers act mode-wise") {
    const FourierField u = cosine(1, 1);

    const FourierField h = hilbert(u);  // 2 sin x
    CHECK(h.coeff(1) == cplx{0.0, -1.0});

    const FourierField d2 = derivative(u, 2);
    CHECK(d2.coeff(1) == cplx{-1.0, 0.0});

    FourierField w(3);
    w.set(1, cplx{1.0, 0.0});
    w.set(2, cplx{1.0, 0.0});
    w.set(3, cplx{1.0, 0.0});
    const FourierField hi = project_high(w, 2);
    CHECK(hi.coeff(1) == cplx{});
    CHECK(hi.coeff(2) == cplx{});
    CHECK(hi.coeff(3) == cplx{1.0, 0.0});
}

TEST_CASE("products keep the mean and convolve exactly") {
    const FourierField u = cosine(1, 1);

    const MeanField sq = product(u, u);  // (2 cos x)^2 = 2 + 2 cos 2x
    CHECK(sq.mean == doctest::Approx(2.0));
    CHECK(sq.osc.coeff(1) == cplx{});
    CHECK(sq.osc.coeff(2) == cplx{1.0, 0.0});

    const MeanField z = product(u, FourierField{});
    CHECK(z.mean == 0.0);
    CHECK(sobolev_norm_sq(z.osc, 0.0) == 0.0);

    FourierField s(1);
    s.set(1, cplx{0.0, -1.0});  // 2 sin x
    const MeanField cs = product(u, s);
    CHECK(cs.mean == doctest::Approx(0.0));
    CHECK(cs.osc.coeff(2) == cplx{0.0, -1.0});  // 2 sin 2x
}

TEST_CASE("integrate") {
    const FourierField u = cosine(1, 1);
    CHECK(integrate(product(u, u)) == doctest::Approx(4.0 * 3.14159265358979324));
    FourierField s(1);
    s.set(1, cplx{0.0, -1.0});
    CHECK(integrate(product(u, s)) == doctest::Approx(0.0));
}

TEST_CASE("sobolev norms") {
    CHECK(sobolev_norm_sq(cosine(1, 1), 1.0) == doctest::Approx(2.0));
    CHECK(sobolev_norm_sq(cosine(2, 2), 1.0) == doctest::Approx(8.0));
    FourierField u(2);
    u.set(1, cplx{1.0, 0.0});
    u.set(2, cplx{1.0, 0.0});
    CHECK(sobolev_norm_sq(u, 0.5) == doctest::Approx(6.0));
}

TEST_CASE("structural invariants on random fields") {
    for (std::uint64_t i = 0; i < 8; ++i) {
        const FourierField u = random_field(16, 7, i);
        const FourierField v = random_field(16, 8, i);

        // H(H u) = -u
        const FourierField hh = hilbert(hilbert(u));
        double diff = 0.0;
        for (long j = 1; j <= 16; ++j) diff += std::abs(hh.coeff(j) + u.coeff(j));
        CHECK(diff == doctest::Approx(0.0));

        // pi_N + pi_{>N} = id
        const FourierField rebuilt = add(project_low(u, 5), project_high(u, 5));
        for (long j = 1; j <= 16; ++j) CHECK(rebuilt.coeff(j) == u.coeff(j));

        // commutativity and degree additivity
        const MeanField uv = product(u, v), vu = product(v, u);
        CHECK(uv.mean == doctest::Approx(vu.mean));
        CHECK(uv.osc.n_max() == 32);
        for (long j = 1; j <= 32; ++j)
            CHECK(std::abs(uv.osc.coeff(j) - vu.osc.coeff(j)) == doctest::Approx(0.0));

        // Parseval: integral u v = 2 pi sum c_j(u) conj(c_j(v)) over j != 0
        CHECK(integrate(uv) ==
              doctest::Approx(two_pi * sobolev_pairing(u, v, 0.0)).epsilon(1e-12));

        // pointwise evaluation is real and matches the mode sum
        const double x = 0.7 + 0.1 * static_cast<double>(i);
        double direct = 0.0;
        for (long j = 1; j <= 16; ++j)
            direct += 2.0 * (u.coeff(j) * std::exp(cplx{0.0, j * x})).real();
        CHECK(u.eval(x) == doctest::Approx(direct).epsilon(1e-12));
    }
}
