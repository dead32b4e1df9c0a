#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bo/energy.hpp"
#include "bo/monomial.hpp"

using namespace bo;

namespace {
const double pi = 3.14159265358979324;

FourierField two_cos_x() {
    FourierField f(1);
    f.set(1, cplx{1.0, 0.0});
    return f;
}
}  // namespace

TEST_CASE("tree metadata") {
    // u * H(u_xx * u) * u_x
    const Monomial p = Monomial::prod(
        {Monomial::u(), Monomial::H(Monomial::prod({Monomial::leaf(2), Monomial::u()})),
         Monomial::ux()});
    CHECK(p.degree() == 4);
    CHECK(p.max_order() == 2);
    CHECK(p.total_order() == 3);

    const Monomial sk = p.skeleton();
    CHECK(sk.degree() == 4);
    CHECK(sk.max_order() == 2);
    // skeleton of a Hilbert-free tree evaluates identically to the stripped one
    const FourierField u = random_field(8, 11);
    const Monomial q = Monomial::prod({Monomial::u(), Monomial::prod({Monomial::leaf(2), Monomial::u()}),
                                       Monomial::ux()});
    CHECK(eval_integral(sk, u) == doctest::Approx(eval_integral(q, u)));
}

TEST_CASE("eval_integral on known fields") {
    const FourierField u = two_cos_x();
    CHECK(eval_integral(Monomial::prod({Monomial::u(), Monomial::u()}), u) ==
          doctest::Approx(4.0 * pi));

    const Monomial u2hux = Monomial::prod(
        {Monomial::u(), Monomial::u(), Monomial::H(Monomial::ux())});
    CHECK(eval_integral(u2hux, u) == doctest::Approx(0.0));

    FourierField w(2);
    w.set(1, cplx{1.0, 0.0});
    w.set(2, cplx{1.0, 0.0});
    // zero-sum triples from {+-1, +-2}: permutations of (1,1,-2) and (-1,-1,2),
    // six in total, each contributing 2 pi
    const Monomial u3 = Monomial::prod({Monomial::u(), Monomial::u(), Monomial::u()});
    CHECK(eval_integral(u3, w) == doctest::Approx(12.0 * pi));
}

TEST_CASE("directional derivative") {
    const Monomial uu = Monomial::prod({Monomial::u(), Monomial::u()});
    const FourierField u = random_field(8, 21);
    const FourierField v = random_field(8, 22);
    CHECK(directional_derivative(uu, u, v) ==
          doctest::Approx(2.0 * integrate(product(u, v))).epsilon(1e-12));

    const Monomial u3 = Monomial::prod({Monomial::u(), Monomial::u(), Monomial::u()});
    const FourierField c = two_cos_x();
    CHECK(directional_derivative(u3, c, c) == doctest::Approx(0.0));
    CHECK(directional_derivative(u3, u, FourierField{}) == doctest::Approx(0.0));
}

TEST_CASE("directional derivative matches extrapolated finite differences") {
    const Monomial p = Monomial::prod(
        {Monomial::u(), Monomial::H(Monomial::prod({Monomial::u(), Monomial::ux()})),
         Monomial::H(Monomial::ux())});
    const FourierField u = random_field(8, 31);
    const FourierField v = random_field(8, 32);
    const double exact = directional_derivative(p, u, v);
    auto fd = [&](double eps) {
        return (eval_integral(p, add(u, scale(v, eps))) -
                eval_integral(p, add(u, scale(v, -eps)))) /
               (2.0 * eps);
    };
    const double eps = 1e-3;
    const double rich = (4.0 * fd(eps / 2.0) - fd(eps)) / 3.0;  // kills the eps^2 term
    CHECK(rich == doctest::Approx(exact).epsilon(1e-6));
}

TEST_CASE("pstar") {
    const FourierField u = random_field(8, 41);
    const long N = 8;

    const PStarSum p2 = pstar_N(Monomial::prod({Monomial::u(), Monomial::u()}), N);
    CHECK(p2.summands() == 2);
    CHECK(p2.eval_summand(0, u) == doctest::Approx(p2.eval_summand(1, u)));
    const FourierField rep = project_high(product(u, derivative(u)).osc, N);
    CHECK(p2.eval(u) == doctest::Approx(2.0 * integrate(product(u, rep))).epsilon(1e-12));

    // single leaf: integral of a projected (mean-zero) field
    CHECK(pstar_N(Monomial::u(), N).eval(u) == doctest::Approx(0.0));

    // cutoff above the product band: every summand vanishes
    const PStarSum big = pstar_N(
        Monomial::prod({Monomial::u(), Monomial::ux(), Monomial::leaf(2)}), 16);
    for (int i = 0; i < big.summands(); ++i)
        CHECK(big.eval_summand(i, u) == doctest::Approx(0.0));
}

TEST_CASE("integration-by-parts identities") {
    const IntparResiduals zero = check_intpar_identities(FourierField(4), 1, 4);
    CHECK(zero.first_equality == 0.0);
    CHECK(zero.pairing_sum == 0.0);

    for (std::uint64_t i = 0; i < 5; ++i) {
        const FourierField u = random_field(16, 51, i);
        const IntparResiduals r = check_intpar_identities(u, 2, 16);
        CHECK(r.first_equality <= 1e-10);
        CHECK(r.pairing_sum <= 1e-10);
    }

    const IntparResiduals small = check_intpar_identities(two_cos_x(), 1, 1);
    CHECK(small.first_equality <= 1e-12);
    CHECK(small.pairing_sum <= 1e-12);

    CHECK_THROWS_AS(check_intpar_identities(random_field(8, 52), 1, 4),
                    std::invalid_argument);
}

TEST_CASE("vanishing terms") {
    const VanishingTerm all[] = {VanishingTerm::hebSR_I, VanishingTerm::hebSR_II,
                                 VanishingTerm::esrty_III, VanishingTerm::esrty_II_cancel};
    for (VanishingTerm t : all) {
        CHECK(check_vanishing_term(FourierField(4), 4, t) == 0.0);
        for (std::uint64_t i = 0; i < 5; ++i) {
            const FourierField u = random_field(32, 61, i);
            CHECK(check_vanishing_term(u, 32, t) <= 1e-10);
            CHECK(check_vanishing_term(u, 16, t) <= 1e-10);
        }
    }
}
