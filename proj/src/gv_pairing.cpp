#include "folichar/gv_pairing.hpp"

#include <cmath>
#include <sstream>

namespace folichar {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

// f^k(z) and log Delta_k(z) for k in [lo, hi], indexed by k - lo.
struct WarpTable {
    int lo;
    std::vector<double> fz;
    std::vector<double> logdelta;

    double z(int k) const { return fz[(size_t)(k - lo)]; }
    double ld(int k) const { return logdelta[(size_t)(k - lo)]; }
};

WarpTable warp_table(const SuspensionModel &m, double z, int lo, int hi) {
    WarpTable t;
    t.lo = lo;
    t.fz.assign((size_t)(hi - lo + 1), 0.0);
    t.logdelta.assign((size_t)(hi - lo + 1), 0.0);
    const CircleDiffeo &f = m.diffeo();
    // forward from 0
    double zz = z, ld = 0;
    for (int k = 0; k <= hi; ++k) {
        if (k >= lo) {
            t.fz[(size_t)(k - lo)] = zz;
            t.logdelta[(size_t)(k - lo)] = ld;
        }
        ld += std::log(f.deriv(zz));
        zz = f.value(zz);
    }
    // backward from 0
    zz = z;
    ld = 0;
    for (int k = -1; k >= lo; --k) {
        zz = f.inverse(zz);
        ld -= std::log(f.deriv(zz));
        if (k <= hi) {
            t.fz[(size_t)(k - lo)] = zz;
            t.logdelta[(size_t)(k - lo)] = ld;
        }
    }
    return t;
}

double simpson_weight(unsigned i, unsigned n) {
    if (i == 0 || i == n) return 1;
    return i % 2 ? 4 : 2;
}

} // namespace

GridSpec GridSpec::scaled(double factor) const {
    GridSpec g = *this;
    auto scale_even = [&](unsigned v) {
        unsigned s = (unsigned)std::lround(v * factor);
        if (s < 2) s = 2;
        return s + (s % 2);
    };
    g.nx = scale_even(nx);
    g.nz = scale_even(nz);
    g.nt = scale_even(nt);
    return g;
}

std::string GridSpec::str() const {
    std::ostringstream os;
    os << "(" << nx << "," << nz << "," << nt << ")x[-" << tau_max << "," << tau_max << "]xW"
       << winding_window;
    return os.str();
}

double Factor1D::operator()(double x) const {
    switch (kind) {
    case Kind::One:
        return amp;
    case Kind::Bump: {
        double s = (x - center) / width;
        if (s <= -1 || s >= 1) return 0;
        return amp * std::exp(1.0 - 1.0 / (1.0 - s * s));
    }
    case Kind::VonMises:
        return amp * std::exp(kappa * (std::cos(x - center) - 1.0));
    case Kind::Plateau: {
        double a = std::fabs(x - center);
        if (a <= inner) return amp;
        if (a >= width) return 0;
        double s = (width - a) / (width - inner);
        return amp * s * s * (3 - 2 * s);
    }
    }
    return 0;
}

Factor1D Factor1D::bump(double center, double width, double amp) {
    Factor1D f;
    f.kind = Kind::Bump;
    f.center = center;
    f.width = width;
    f.amp = amp;
    return f;
}

Factor1D Factor1D::von_mises(double center, double kappa, double amp) {
    Factor1D f;
    f.kind = Kind::VonMises;
    f.center = center;
    f.kappa = kappa;
    f.amp = amp;
    return f;
}

Factor1D Factor1D::plateau(double inner, double outer) {
    Factor1D f;
    f.kind = Kind::Plateau;
    f.inner = inner;
    f.width = outer;
    return f;
}

KernelGrid::KernelGrid(GridSpec grid, std::vector<KernelTerm> terms)
    : grid_(grid), terms_(std::move(terms)) {}

KernelGrid::KernelGrid(GridSpec grid, BandedUnit unit) : grid_(grid), unit_(std::move(unit)) {}

std::pair<int, int> KernelGrid::winding_support() const {
    if (unit_) return {0, 0};
    if (terms_.empty()) return {0, 0};
    int lo = terms_.front().winding, hi = lo;
    for (const KernelTerm &t : terms_) {
        lo = std::min(lo, t.winding);
        hi = std::max(hi, t.winding);
    }
    return {lo, hi};
}

double KernelGrid::value(const SuspensionModel &m, int n, double x_t, double x_s, double z,
                         double tau) const {
    double v = 0;
    if (unit_) {
        if (n != 0) return 0;
        double h = 1.0 / grid_.nx;
        int half = (int)unit_->weights.size() / 2;
        for (int j = -half; j <= half; ++j)
            if (std::fabs(x_t - x_s - j * h) < 1e-12 * std::max(1.0, std::fabs(x_t)))
                v += unit_->weights[(size_t)(j + half)] / h;
        return v * unit_->ftau(tau);
    }
    for (const KernelTerm &t : terms_) {
        if (t.winding != n) continue;
        double p = t.scale * t.fxt(x_t) * t.fxs(x_s);
        if (p == 0) continue;
        int lo = 0, hi = 0;
        for (const ZTFactor &f : t.zt) {
            lo = std::min(lo, f.offset);
            hi = std::max(hi, f.offset);
        }
        WarpTable w = warp_table(m, z, lo, hi);
        for (const ZTFactor &f : t.zt) p *= f.fz(w.z(f.offset)) * f.ftau(tau + w.ld(f.offset));
        v += p;
    }
    return v;
}

double KernelGrid::sample(const SuspensionModel &m, int n, unsigned ix_t, unsigned ix_s,
                          unsigned iz, unsigned itau) const {
    double x_t = (double)ix_t / grid_.nx;
    double x_s = (double)ix_s / grid_.nx;
    double z = kTwoPi * iz / grid_.nz;
    double tau = -grid_.tau_max + 2.0 * grid_.tau_max * itau / grid_.nt;
    return value(m, n, x_t, x_s, z, tau);
}

KernelGrid KernelGrid::with_grid(const GridSpec &g) const {
    KernelGrid k = *this;
    k.grid_ = g;
    return k;
}

void KernelGrid::check_support(const SuspensionModel &m) const {
    auto [lo, hi] = winding_support();
    if (lo <= -grid_.winding_window || hi >= grid_.winding_window)
        if (!unit_)
            throw support_overflow_error("kernel winding support [" + std::to_string(lo) + "," +
                                         std::to_string(hi) + "] not strictly inside the window W=" +
                                         std::to_string(grid_.winding_window));
    // largest modular shift reachable inside the window
    double max_ld = 0;
    for (unsigned i = 0; i < 256; ++i) {
        double z = kTwoPi * i / 256;
        WarpTable w = warp_table(m, z, -grid_.winding_window, grid_.winding_window);
        for (int k = -grid_.winding_window; k <= grid_.winding_window; ++k)
            max_ld = std::max(max_ld, std::fabs(w.ld(k)));
    }
    for (const KernelTerm &t : terms_)
        for (const ZTFactor &f : t.zt) {
            if (f.ftau.kind == Factor1D::Kind::One) continue;
            double reach = std::fabs(f.ftau.center) + f.ftau.width + max_ld;
            if (reach >= grid_.tau_max)
                throw support_overflow_error(
                    "tau support reaches " + std::to_string(reach) + " >= tau_max " +
                    std::to_string(grid_.tau_max));
        }
}

// ---------------------------------------------------------------------------

KernelGrid convolve(const SuspensionModel &m, const KernelGrid &a, const KernelGrid &b) {
    // Term composition is exact: the winding offsets carry the holonomy
    // warps symbolically, so the model is only consulted when the result is
    // evaluated.
    (void)m;
    if (!(a.grid() == b.grid())) throw model_error("convolve: incompatible grids");
    const GridSpec &g = a.grid();

    auto [alo, ahi] = a.winding_support();
    auto [blo, bhi] = b.winding_support();
    if (alo + blo < -g.winding_window || ahi + bhi > g.winding_window)
        throw support_overflow_error("convolution winding support [" + std::to_string(alo + blo) +
                                     "," + std::to_string(ahi + bhi) + "] exceeds the window W=" +
                                     std::to_string(g.winding_window));

    double h = 1.0 / g.nx;

    // right unit approximation: (a * e)(n, xt, xs, z, tau)
    //   = sum_j w_j a(n, xt, xs + j h, z, tau) * plateau(tau)
    if (b.unit()) {
        std::vector<KernelTerm> out;
        int half = (int)b.unit()->weights.size() / 2;
        for (const KernelTerm &t : a.terms())
            for (int j = -half; j <= half; ++j) {
                double w = b.unit()->weights[(size_t)(j + half)];
                if (w == 0) continue;
                KernelTerm nt = t;
                nt.scale *= w;
                nt.fxs.center -= j * h; // fxs evaluated at x_s + j h
                nt.zt.push_back(ZTFactor{0, Factor1D::one(), b.unit()->ftau});
                out.push_back(std::move(nt));
            }
        return KernelGrid(g, std::move(out));
    }
    if (a.unit()) {
        // (e * a)(n, xt, xs, z, tau) = sum_j w_j a(n, xt - j h, xs, z, tau)
        //   * plateau(tau + log Delta_n(z)); the plateau offset is the term's
        //   own winding.
        std::vector<KernelTerm> out;
        int half = (int)a.unit()->weights.size() / 2;
        for (const KernelTerm &t : b.terms())
            for (int j = -half; j <= half; ++j) {
                double w = a.unit()->weights[(size_t)(j + half)];
                if (w == 0) continue;
                KernelTerm nt = t;
                nt.scale *= w;
                nt.fxt.center += j * h; // fxt evaluated at x_t - j h
                nt.zt.push_back(ZTFactor{t.winding, Factor1D::one(), a.unit()->ftau});
                out.push_back(std::move(nt));
            }
        return KernelGrid(g, std::move(out));
    }

    // general case: the intermediate-leaf integral is the Simpson overlap of
    // the facing x factors; the a-side (z, tau) warps shift by b's winding.
    std::vector<KernelTerm> out;
    for (const KernelTerm &ta : a.terms())
        for (const KernelTerm &tb : b.terms()) {
            double overlap = 0;
            for (unsigned i = 0; i <= g.nx; ++i) {
                double y = (double)i / g.nx;
                overlap += simpson_weight(i, g.nx) * ta.fxs(y) * tb.fxt(y);
            }
            overlap *= h / 3;
            if (overlap == 0) continue;
            KernelTerm nt;
            nt.winding = ta.winding + tb.winding;
            nt.scale = ta.scale * tb.scale * overlap;
            nt.fxt = ta.fxt;
            nt.fxs = tb.fxs;
            for (const ZTFactor &f : ta.zt) {
                ZTFactor shifted = f;
                shifted.offset += tb.winding;
                nt.zt.push_back(shifted);
            }
            nt.zt.insert(nt.zt.end(), tb.zt.begin(), tb.zt.end());
            out.push_back(std::move(nt));
        }
    return KernelGrid(g, std::move(out));
}

// ---------------------------------------------------------------------------

namespace {

// phi(A, B) = - sum_n int dxp dz dtau dy
//     A(-n, xp, y, f^n z, tau + logDelta_n(z)) B(n, y, xp, z, tau) delta_n(z)
// with the x integrals factoring into Simpson overlaps per term pair.
PairingReport pairing(const SuspensionModel &m, const KernelGrid &A, const KernelGrid &B,
                      bool dual_route) {
    if (!(A.grid() == B.grid())) throw model_error("pairing: incompatible grids");
    const GridSpec &g = A.grid();
    if (A.unit() || B.unit()) throw model_error("pairing: unit-approximation kernels not pairable");

    double hx = 1.0 / g.nx;
    double hz = kTwoPi / g.nz;
    double ht = 2.0 * g.tau_max / g.nt;

    double total = 0;
    for (const KernelTerm &ta : A.terms())
        for (const KernelTerm &tb : B.terms()) {
            if (ta.winding != -tb.winding) continue;
            int n = tb.winding;

            // S1 = int dxp fxt_A(xp) fxs_B(xp); S2 = int dy fxs_A(y) fxt_B(y)
            double s1 = 0, s2 = 0;
            for (unsigned i = 0; i <= g.nx; ++i) {
                double x = (double)i / g.nx;
                double w = simpson_weight(i, g.nx);
                s1 += w * ta.fxt(x) * tb.fxs(x);
                s2 += w * ta.fxs(x) * tb.fxt(x);
            }
            s1 *= hx / 3;
            s2 *= hx / 3;
            if (s1 == 0 || s2 == 0) continue;

            int lo = n, hi = n;
            for (const ZTFactor &f : ta.zt) {
                lo = std::min(lo, f.offset + n);
                hi = std::max(hi, f.offset + n);
            }
            for (const ZTFactor &f : tb.zt) {
                lo = std::min(lo, f.offset);
                hi = std::max(hi, f.offset);
            }

            double zsum = 0;
            for (unsigned iz = 0; iz < g.nz; ++iz) {
                double z = kTwoPi * iz / g.nz;
                WarpTable w = warp_table(m, z, std::min(lo, 0), std::max(hi, 0));
                double delta = dual_route ? m.dlog_modular(Germ{n, z})
                                          : m.delta_analytic(Germ{n, z});
                if (delta == 0) continue;

                double tsum = 0;
                for (unsigned it = 0; it <= g.nt; ++it) {
                    double tau = -g.tau_max + ht * it;
                    double p = 1;
                    for (const ZTFactor &f : ta.zt)
                        p *= f.fz(w.z(f.offset + n)) * f.ftau(tau + w.ld(f.offset + n));
                    if (p == 0) continue;
                    for (const ZTFactor &f : tb.zt)
                        p *= f.fz(w.z(f.offset)) * f.ftau(tau + w.ld(f.offset));
                    tsum += simpson_weight(it, g.nt) * p;
                }
                zsum += tsum * (ht / 3) * delta;
            }
            total += ta.scale * tb.scale * s1 * s2 * zsum * hz;
        }

    PairingReport rep;
    rep.value = -total;
    rep.grid = g;
    return rep;
}

} // namespace

PairingReport phi_gv(const SuspensionModel &m, const KernelGrid &a0, const KernelGrid &a1) {
    return pairing(m, a0, a1, false);
}

PairingReport phi_gv_logdelta(const SuspensionModel &m, const KernelGrid &a0,
                              const KernelGrid &a1) {
    PairingReport rep = pairing(m, a0, a1, true);
    rep.note = "delta evaluated as d/dz log Delta via dual numbers";
    return rep;
}

PairingReport hochschild_b(const SuspensionModel &m, const KernelGrid &a0, const KernelGrid &a1,
                           const KernelGrid &a2) {
    PairingReport rep;
    rep.value = phi_gv(m, convolve(m, a0, a1), a2).value - phi_gv(m, a0, convolve(m, a1, a2)).value +
                phi_gv(m, convolve(m, a2, a0), a1).value;
    rep.grid = a0.grid();
    rep.note = "b phi(a0,a1,a2)";
    return rep;
}

KernelGrid shift_tau(const KernelGrid &k, double s) {
    std::vector<KernelTerm> terms = k.terms();
    for (KernelTerm &t : terms)
        for (ZTFactor &f : t.zt)
            if (f.ftau.kind != Factor1D::Kind::One) f.ftau.center += s;
    return KernelGrid(k.grid(), std::move(terms));
}

KernelGrid make_unit_approx(const GridSpec &g, double plateau_inner) {
    BandedUnit u;
    u.weights = {0.25, 0.5, 0.25};
    u.ftau = Factor1D::plateau(plateau_inner, g.tau_max - 0.05);
    return KernelGrid(g, std::move(u));
}

} // namespace folichar
