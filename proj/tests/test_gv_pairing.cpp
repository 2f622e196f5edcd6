#include "doctest.h"

#include "folichar/gv_pairing.hpp"

#include <cmath>

using namespace folichar;

namespace {

SuspensionModel default_model() { return SuspensionModel(CircleDiffeo(0.0, {0.3}, {})); }

KernelTerm term(int n, double amp, double cxt, double cxs, double zc, double tc) {
    KernelTerm t;
    t.winding = n;
    t.scale = amp;
    t.fxt = Factor1D::bump(cxt, 0.28);
    t.fxs = Factor1D::bump(cxs, 0.30);
    t.zt.push_back(ZTFactor{0, Factor1D::von_mises(zc, 2.0), Factor1D::bump(tc, 1.2)});
    return t;
}

KernelGrid kernel_a(const GridSpec &g) {
    return KernelGrid(g, {term(0, 0.7, 0.45, 0.55, 1.0, -0.3), term(1, 1.0, 0.5, 0.42, 2.2, 0.2),
                          term(-1, 0.4, 0.6, 0.5, 4.0, 0.1)});
}

KernelGrid kernel_b(const GridSpec &g) {
    return KernelGrid(g, {term(0, 0.5, 0.52, 0.47, 5.1, 0.4), term(1, 0.8, 0.38, 0.58, 0.7, -0.2),
                          term(-1, 0.9, 0.55, 0.45, 3.0, 0.0)});
}

KernelGrid kernel_c(const GridSpec &g) {
    return KernelGrid(g, {term(0, 1.1, 0.5, 0.5, 2.0, 0.0), term(-1, 0.6, 0.47, 0.53, 1.4, 0.3)});
}

// direct two-step convolution quadrature, no intermediate kernel object
double triple_direct(const SuspensionModel &m, const KernelGrid &a, const KernelGrid &b,
                     const KernelGrid &c, int n, double xt, double xs, double z, double tau) {
    const GridSpec &g = a.grid();
    double h = 1.0 / g.nx;
    auto sw = [&](unsigned i) { return (i == 0 || i == g.nx) ? 1.0 : (i % 2 ? 4.0 : 2.0); };
    const CircleDiffeo &f = m.diffeo();
    double total = 0;
    for (int mc = -2; mc <= 2; ++mc)
        for (int mb = -2; mb <= 2; ++mb) {
            int ma = n - mb - mc;
            // z and tau warps for the stacked windings
            auto warp = [&](int k, double &wz, double &ld) {
                wz = z;
                ld = 0;
                for (int j = 0; j < k; ++j) {
                    ld += std::log(f.deriv(wz));
                    wz = f.value(wz);
                }
                for (int j = 0; j > k; --j) {
                    wz = f.inverse(wz);
                    ld -= std::log(f.deriv(wz));
                }
            };
            double zc, ldc, zbc, ldbc;
            warp(mc, zc, ldc);
            warp(mb + mc, zbc, ldbc);
            double inner = 0;
            for (unsigned i1 = 0; i1 <= g.nx; ++i1)
                for (unsigned i2 = 0; i2 <= g.nx; ++i2) {
                    double y1 = (double)i1 / g.nx, y2 = (double)i2 / g.nx;
                    double va = a.value(m, ma, xt, y1, zbc, tau + ldbc);
                    if (va == 0) continue;
                    double vb = b.value(m, mb, y1, y2, zc, tau + ldc);
                    if (vb == 0) continue;
                    double vc = c.value(m, mc, y2, xs, z, tau);
                    inner += sw(i1) * sw(i2) * va * vb * vc;
                }
            total += inner * (h / 3) * (h / 3);
        }
    return total;
}

} // namespace

TEST_CASE("kernel support bookkeeping") {
    GridSpec g{16, 16, 8, 3.0, 2};
    KernelGrid a = kernel_a(g), b = kernel_b(g);
    SuspensionModel m = default_model();
    CHECK_NOTHROW(a.check_support(m));

    auto [lo, hi] = a.winding_support();
    CHECK(lo == -1);
    CHECK(hi == 1);
    KernelGrid ab = convolve(m, a, b);
    auto [clo, chi] = ab.winding_support();
    CHECK(clo >= -2);
    CHECK(chi <= 2);

    // support overflow: {0,1} * {0,1} needs window >= 2
    GridSpec small = g;
    small.winding_window = 1;
    KernelGrid a2(small, {term(0, 1, 0.5, 0.5, 0, 0), term(1, 1, 0.5, 0.5, 0, 0)});
    CHECK_THROWS_AS(convolve(m, a2, a2), support_overflow_error);

    // boundary samples vanish (compact support, strictly interior in tau)
    for (unsigned iz = 0; iz < g.nz; iz += 5) {
        CHECK(a.sample(m, 1, 4, 5, iz, 0) == 0.0);
        CHECK(a.sample(m, 1, 4, 5, iz, g.nt) == 0.0);
        CHECK(a.sample(m, 0, 0, 5, iz, 4) == 0.0); // x bump vanishes at the seam
    }
    // tau support too wide for the window triggers the guard
    KernelGrid wide(g, {term(0, 1, 0.5, 0.5, 0, 2.5)});
    CHECK_THROWS_AS(wide.check_support(m), support_overflow_error);
}

TEST_CASE("convolve against the unit approximation: O(h^2) mollifier") {
    SuspensionModel m = default_model();
    std::vector<double> errs;
    for (unsigned nx : {16u, 32u, 64u}) {
        GridSpec g{nx, 16, 8, 3.0, 2};
        KernelGrid a = kernel_a(g);
        KernelGrid e = make_unit_approx(g, 2.0);
        KernelGrid ae = convolve(m, a, e);
        double err = 0;
        for (int n : {-1, 0, 1})
            for (double xt : {0.375, 0.5, 0.625})
                for (double xs : {0.4375, 0.5, 0.5625})
                    for (double tau : {-0.375, 0.0, 0.375}) {
                        double d = std::fabs(ae.value(m, n, xt, xs, 1.178, tau) -
                                             a.value(m, n, xt, xs, 1.178, tau));
                        err = std::max(err, d);
                    }
        errs.push_back(err);
    }
    CHECK(errs[0] > errs[1]);
    CHECK(errs[1] > errs[2]);
    CHECK(std::log2(errs[0] / errs[1]) >= 1.8);
    CHECK(std::log2(errs[1] / errs[2]) >= 1.8);

    // left unit behaves the same way at a spot check
    GridSpec g{32, 16, 8, 3.0, 2};
    KernelGrid a = kernel_a(g);
    KernelGrid e = make_unit_approx(g, 2.0);
    KernelGrid ea = convolve(m, e, a);
    CHECK(ea.sample(m, 1, 8, 12, 3, 4) ==
          doctest::Approx(a.sample(m, 1, 8, 12, 3, 4)).epsilon(0.02));
}

TEST_CASE("convolution associativity with a direct triple-sum oracle") {
    SuspensionModel m = default_model();
    GridSpec g{8, 8, 4, 3.0, 4};
    KernelGrid a = kernel_a(g), b = kernel_b(g), c = kernel_c(g);

    KernelGrid ab_c = convolve(m, convolve(m, a, b), c);
    KernelGrid a_bc = convolve(m, a, convolve(m, b, c));

    for (int n : {-2, 0, 1, 2})
        for (double xt : {0.375, 0.5})
            for (double xs : {0.5, 0.625})
                for (double tau : {-0.375, 0.0, 0.75}) {
                    double z = 1.25;
                    double lhs = ab_c.value(m, n, xt, xs, z, tau);
                    double rhs = a_bc.value(m, n, xt, xs, z, tau);
                    double oracle = triple_direct(m, a, b, c, n, xt, xs, z, tau);
                    double scale = std::max({1.0, std::fabs(lhs), std::fabs(oracle)});
                    CHECK(std::fabs(lhs - rhs) / scale <= 1e-12);
                    CHECK(std::fabs(lhs - oracle) / scale <= 1e-12);
                }
}

TEST_CASE("phi_gv: flat model vanishes, nontrivial model does not") {
    GridSpec g{32, 32, 16, 3.0, 2};
    SuspensionModel rot(CircleDiffeo(0.5, {}, {}));
    KernelGrid a = kernel_a(g), b = kernel_b(g);
    CHECK(phi_gv(rot, a, b).value == 0.0);
    CHECK(phi_gv_logdelta(rot, a, b).value == 0.0);
    CHECK(hochschild_b(rot, a, b, kernel_c(g)).value == 0.0);

    SuspensionModel m = default_model();
    CHECK(std::fabs(phi_gv(m, a, b).value) > 1e-6);

    // winding-0-only kernels pair to zero even on curved models: the unit
    // germ has delta = 0
    KernelGrid w0(g, {term(0, 1.0, 0.5, 0.5, 1.0, 0.0)});
    CHECK(phi_gv(m, w0, w0).value == 0.0);

    // disjoint winding supports: every phi in b-phi pairs windings n, -n
    // that never meet, so the Hochschild sum is identically zero
    KernelGrid pos(g, {term(1, 1.0, 0.5, 0.5, 1.0, 0.0)});
    GridSpec wide = g;
    wide.winding_window = 4;
    KernelGrid p1(wide, {term(1, 1.0, 0.5, 0.5, 1.0, 0.0)});
    KernelGrid p2(wide, {term(1, 0.8, 0.45, 0.55, 2.0, 0.1)});
    KernelGrid p3(wide, {term(1, 0.6, 0.55, 0.45, 0.5, -0.1)});
    CHECK(hochschild_b(m, p1, p2, p3).value == 0.0);
    (void)pos;
}

TEST_CASE("phi_gv: antisymmetry and Hochschild defects shrink at order >= 1.8") {
    SuspensionModel m = default_model();
    std::vector<double> anti, hoch;
    for (double f : {0.5, 1.0, 2.0}) {
        GridSpec g = GridSpec{64, 64, 32, 3.0, 2}.scaled(f);
        KernelGrid a = kernel_a(g), b = kernel_b(g), c = kernel_c(g);
        anti.push_back(std::fabs(phi_gv(m, a, b).value + phi_gv(m, b, a).value));
        hoch.push_back(std::fabs(hochschild_b(m, a, b, c).value));
    }
    // defaults sit at index 1; halving the spacing gives index 2
    CHECK(anti[1] <= 1e-3);
    CHECK(hoch[1] <= 1e-3);
    CHECK(anti[0] > anti[1]);
    CHECK(std::log2(anti[1] / anti[2]) >= 1.8);
    CHECK(std::log2(hoch[1] / hoch[2]) >= 1.8);
}

TEST_CASE("phi_gv equals the log-Delta route; tau-shift invariance") {
    SuspensionModel m = default_model();
    GridSpec g{32, 32, 16, 3.0, 2};
    KernelGrid a = kernel_a(g), b = kernel_b(g);
    double v1 = phi_gv(m, a, b).value;
    double v2 = phi_gv_logdelta(m, a, b).value;
    CHECK(std::fabs(v1 - v2) <= 1e-10 * std::max(1.0, std::fabs(v1)));

    // sign flip under kernel swap at quadrature tolerance
    CHECK(phi_gv_logdelta(m, a, b).value ==
          doctest::Approx(-phi_gv_logdelta(m, b, a).value).epsilon(1e-2));

    // shifting both kernels' tau supports leaves the value nearly unchanged
    // (dt/t is scale invariant); at the default grid the defect is below 1e-6
    GridSpec gd{64, 64, 32, 3.0, 2};
    KernelGrid ad = kernel_a(gd), bd = kernel_b(gd);
    double vd = phi_gv(m, ad, bd).value;
    double shifted = phi_gv(m, shift_tau(ad, 0.37), shift_tau(bd, 0.37)).value;
    CHECK(std::fabs(shifted - vd) <= 1e-6);

    // bit-for-bit reproducibility in serial mode
    CHECK(phi_gv(m, a, b).value == v1);
}
