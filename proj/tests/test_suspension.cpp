#include "doctest.h"

#include "folichar/suspension.hpp"

#include <cmath>
#include <random>

using namespace folichar;

namespace {

SuspensionModel default_model() {
    return SuspensionModel(CircleDiffeo(0.0, {0.3}, {}));
}

SuspensionModel rotation_model() {
    return SuspensionModel(CircleDiffeo(0.5, {}, {}));
}

} // namespace

TEST_CASE("CircleDiffeo: construction guard and basic evaluation") {
    CHECK_THROWS_AS(CircleDiffeo(0.0, {1.1}, {}), model_error);
    CHECK_THROWS_AS(CircleDiffeo(0.0, {0.4, 0.4}, {}), model_error); // 0.4 + 2*0.4 >= 1
    CircleDiffeo f(0.0, {0.3}, {});
    CHECK(f.value(0.0) == doctest::Approx(0.0));
    CHECK(f.deriv(0.0) == doctest::Approx(1.3));
    // Newton inverse round trip
    for (double z : {0.1, 1.7, 3.9, 6.1}) CHECK(f.inverse(f.value(z)) == doctest::Approx(z).epsilon(1e-12));
}

TEST_CASE("holonomy: identity, chain rule oracle, inverse rule") {
    SuspensionModel m = default_model();
    const CircleDiffeo &f = m.diffeo();

    HolonomyEval e0 = m.holonomy(Germ{0, 1.2});
    CHECK(e0.value == 1.2);
    CHECK(e0.derivative == 1.0);

    // n=2 against the explicit chain rule f(f(z)), f'(f(z)) f'(z)
    double z = 0.7;
    HolonomyEval e2 = m.holonomy(Germ{2, z});
    CHECK(e2.value == doctest::Approx(f.value(f.value(z))).epsilon(1e-14));
    CHECK(e2.derivative == doctest::Approx(f.deriv(f.value(z)) * f.deriv(z)).epsilon(1e-14));

    // holonomy(g^{-1})' at f^n(z) = 1 / holonomy(g)' at z
    for (int n : {-3, -1, 1, 2, 3}) {
        Germ g{n, z};
        Germ ginv = m.inverse(g);
        CHECK(m.holonomy(ginv).derivative == doctest::Approx(1.0 / m.holonomy(g).derivative).epsilon(1e-12));
        CHECK(m.holonomy(ginv).value == doctest::Approx(z).epsilon(1e-10));
    }

    // holonomy is a functor: holonomy(g1 g2) = holonomy(g1) o holonomy(g2)
    Germ g2{2, z};
    Germ g1{1, m.holonomy(g2).value};
    Germ g12 = m.compose(g1, g2);
    CHECK(g12.n == 3);
    CHECK(m.holonomy(g12).value ==
          doctest::Approx(f.value(m.holonomy(g2).value)).epsilon(1e-13));
    CHECK(m.holonomy(g12).derivative ==
          doctest::Approx(m.holonomy(g1).derivative * m.holonomy(g2).derivative).epsilon(1e-12));
    CHECK_THROWS_AS(m.compose(Germ{1, 0.1}, Germ{1, 2.0}), model_error);
}

TEST_CASE("modular function: values and homomorphism property") {
    SuspensionModel m = default_model();
    CHECK(m.modular(Germ{0, 2.2}) == 1.0);
    CHECK(m.modular(Germ{1, 0.0}) == doctest::Approx(1.3)); // f' at 0

    std::mt19937 eng(4242);
    std::uniform_real_distribution<double> zdist(0.0, 6.28);
    std::uniform_int_distribution<int> ndist(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        double z = zdist(eng);
        Germ g2{ndist(eng), z};
        Germ g1{ndist(eng), m.holonomy(g2).value};
        double lhs = m.modular(m.compose(g1, g2));
        double rhs = m.modular(g1) * m.modular(g2);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
    }
}

TEST_CASE("delta: trivial cases, cocycle identity, dual-number route") {
    SuspensionModel m = default_model();
    CHECK(m.delta_analytic(Germ{0, 1.0}) == 0.0);

    // n=1: (log f')'(z)
    double z = 0.9;
    const CircleDiffeo &f = m.diffeo();
    CHECK(m.delta_analytic(Germ{1, z}) == doctest::Approx(f.dlog_deriv(z)).epsilon(1e-14));

    // cocycle: delta(g1 g2) = delta(g2) + delta(g1) Delta(g2), to 1e-10
    std::mt19937 eng(99);
    std::uniform_real_distribution<double> zdist(0.0, 6.28);
    std::uniform_int_distribution<int> ndist(-3, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        double zz = zdist(eng);
        Germ g2{ndist(eng), zz};
        Germ g1{ndist(eng), m.holonomy(g2).value};
        double lhs = m.delta_analytic(m.compose(g1, g2));
        double rhs = m.delta_analytic(g2) + m.delta_analytic(g1) * m.modular(g2);
        CHECK(std::fabs(lhs - rhs) <= 1e-10);
    }

    // dual-number evaluation agrees with the chain-rule sum
    for (int trial = 0; trial < 200; ++trial) {
        Germ g{ndist(eng), zdist(eng)};
        CHECK(std::fabs(m.delta_analytic(g) - m.dlog_modular(g)) <= 1e-11);
    }
}

TEST_CASE("path integral of the Bott curvature") {
    SuspensionModel m = default_model();

    // constant path
    CHECK(m.path_integral_curvature(Germ{0, 1.0}, 1.0) == 0.0);

    // n=1, v=1: (log f')'(z) within quadrature tolerance
    PathIntegralOptions opt;
    opt.steps = 1000;
    for (double z : {0.3, 2.1, 4.4}) {
        double path = m.path_integral_curvature(Germ{1, z}, 1.0, opt);
        CHECK(path == doctest::Approx(m.diffeo().dlog_deriv(z)).epsilon(1e-8));
    }

    // matches delta_analytic for |n| <= 3 over 32 basepoints, <= 1e-6 relative
    for (int n = -3; n <= 3; ++n)
        for (int b = 0; b < 32; ++b) {
            double z = 6.283185307179586 * b / 32;
            Germ g{n, z};
            double path = m.path_integral_curvature(g, 1.0, opt);
            double ana = m.delta_analytic(g);
            double scale = std::max(1.0, std::fabs(ana));
            CHECK(std::fabs(path - ana) / scale <= 1e-6);
        }

    // seam-profile independence for seam-to-seam germs
    SuspensionModel m1(CircleDiffeo(0.0, {0.3}, {}), SeamProfile::Smoothstep1);
    SuspensionModel m3(CircleDiffeo(0.0, {0.3}, {}), SeamProfile::Smoothstep3);
    for (int n : {-2, 1, 3}) {
        double a = m1.path_integral_curvature(Germ{n, 1.1}, 1.0, opt);
        double b = m3.path_integral_curvature(Germ{n, 1.1}, 1.0, opt);
        CHECK(a == doctest::Approx(b).epsilon(1e-9));
    }

    // Richardson: convergence order >= 2 over three refinements
    Germ g{2, 0.8};
    PathIntegralOptions o1{8, 0, 0}, o2{16, 0, 0}, o3{32, 0, 0};
    double exact = m.delta_analytic(g);
    double e1 = std::fabs(m.path_integral_curvature(g, 1.0, o1) - exact);
    double e2 = std::fabs(m.path_integral_curvature(g, 1.0, o2) - exact);
    double e3 = std::fabs(m.path_integral_curvature(g, 1.0, o3) - exact);
    double order12 = std::log2(e1 / e2);
    double order23 = std::log2(e2 / e3);
    CHECK(order12 >= 2.0);
    CHECK(order23 >= 2.0);

    CHECK_THROWS_AS(m.path_integral_curvature(g, 1.0, PathIntegralOptions{1, 0, 0}), model_error);
}

TEST_CASE("perturbation invariance of the path integral") {
    SuspensionModel m = default_model();
    Germ g{2, 1.4};
    auto rep = m.perturbation_invariance(g, 1.0, 0.7, -0.4, PathIntegralOptions{200, 0, 0});
    CHECK(rep.identical);
    CHECK(rep.base == rep.leafwise_perturbed);
    CHECK(rep.base == rep.vertical_perturbed);
    CHECK(rep.base == rep.zero_perturbed);
}

TEST_CASE("action matrix: triangular structure and cocycle composition") {
    SuspensionModel m = default_model();

    auto u = m.action_matrix(Germ{0, 2.0});
    CHECK(u[0][0] == 1.0);
    CHECK(u[0][1] == 0.0);
    CHECK(u[1][0] == 0.0);
    CHECK(u[1][1] == 1.0);

    // off-diagonal equals the path integral within tolerance
    PathIntegralOptions opt;
    opt.steps = 1000;
    for (int n : {-2, 1, 3}) {
        Germ g{n, 0.6};
        auto a = m.action_matrix(g);
        double path = m.path_integral_curvature(g, 1.0, opt);
        double scale = std::max(1.0, std::fabs(a[0][1]));
        CHECK(std::fabs(a[0][1] - path) / scale <= 1e-6);
    }

    // composition in the Delta-weighted trivialisation:
    // M(g) = [[1, delta(g)], [0, Delta(g)]] multiplies like the germs do.
    std::mt19937 eng(11);
    std::uniform_real_distribution<double> zdist(0.0, 6.28);
    std::uniform_int_distribution<int> ndist(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        Germ g2{ndist(eng), zdist(eng)};
        Germ g1{ndist(eng), m.holonomy(g2).value};
        Germ g12 = m.compose(g1, g2);
        double m1[2][2] = {{1, m.delta_analytic(g1)}, {0, m.modular(g1)}};
        double m2[2][2] = {{1, m.delta_analytic(g2)}, {0, m.modular(g2)}};
        double off = m1[0][0] * m2[0][1] + m1[0][1] * m2[1][1];
        CHECK(std::fabs(off - m.delta_analytic(g12)) <= 1e-10);
        CHECK(std::fabs(m1[1][1] * m2[1][1] - m.modular(g12)) <= 1e-11);
    }
}

TEST_CASE("rigid rotation: flat Bott connection") {
    SuspensionModel m = rotation_model();
    CHECK(m.diffeo().is_rotation());
    std::mt19937 eng(5);
    std::uniform_real_distribution<double> zdist(0.0, 6.28);
    for (int n = -3; n <= 3; ++n) {
        double z = zdist(eng);
        CHECK(m.modular(Germ{n, z}) == 1.0);
        CHECK(m.delta_analytic(Germ{n, z}) == 0.0);
        CHECK(m.path_integral_curvature(Germ{n, z}, 1.0) == 0.0);
    }
}

TEST_CASE("seam gauge compatibility of the Bott field") {
    // A(1, z) = A(0, f(z)) f'(z) + (log f')'(z) across the seam
    SuspensionModel m = default_model();
    const CircleDiffeo &f = m.diffeo();
    for (double z : {0.0, 0.9, 2.3, 5.5}) {
        double lhs = m.bott_field(1.0, z);
        double rhs = m.bott_field(0.0, f.value(z)) * f.deriv(z) + f.dlog_deriv(z);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
    }
}

TEST_CASE("frame transport: positivity and composition") {
    SuspensionModel m = default_model();
    CHECK_THROWS_AS(FramePoint(0.1, 0.0, -1.0), std::invalid_argument);
    FramePoint p(0.25, 0.7, 2.0);
    Germ g2{1, 0.7};
    Germ g1{2, m.holonomy(g2).value};
    FramePoint q1 = m.transport_frame(g2, p);
    CHECK(q1.t == doctest::Approx(m.modular(g2) * 2.0));
    FramePoint q2 = m.transport_frame(g1, q1);
    FramePoint q12 = m.transport_frame(m.compose(g1, g2), p);
    CHECK(q2.z == doctest::Approx(q12.z).epsilon(1e-12));
    CHECK(q2.t == doctest::Approx(q12.t).epsilon(1e-12));
    CHECK_THROWS_AS(m.transport_frame(Germ{1, 3.0}, p), model_error);
}

TEST_CASE("sigma scale comparison exposes non-invariance") {
    SuspensionModel m = default_model();
    // constant Euclidean structure sigma = 1: u.sigma(s(u)) = Delta(u) vs 1
    Germ g{1, 0.0};
    auto [moved, target] = m.sigma_scale_compare(g, 1.0, 1.0);
    CHECK(moved == doctest::Approx(1.3));
    CHECK(target == 1.0);
    // rigid rotations are invariant
    SuspensionModel rot = rotation_model();
    auto [rm, rt] = rot.sigma_scale_compare(g, 1.0, 1.0);
    CHECK(rm == rt);
}
