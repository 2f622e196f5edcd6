// Discretized convolution algebra on the suspension groupoid and the
// Godbillon-Vey pairing.
//
// Kernels are finite sums of closed-form separable terms
//   scale * [winding == n] * fxt(x_t) * fxs(x_s)
//         * prod_i fz_i(f^{m_i} z) * ftau_i(tau + log Delta_{m_i}(z)),
// a family that is closed under groupoid convolution: the intermediate-leaf
// integral contributes an exact 1-D overlap sum, the winding shifts compose
// the (z, tau) warps through the modular cocycle.  All quadratures are the
// grid sums a dense-sample implementation would perform, reassociated; the
// evaluation order is fixed, so serial results are bit-for-bit reproducible.
#pragma once

#include "folichar/suspension.hpp"

#include <optional>
#include <string>
#include <vector>

namespace folichar {

struct GridSpec {
    unsigned nx = 64;       // Simpson intervals in each leaf coordinate
    unsigned nz = 64;       // periodic trapezoid nodes on the circle
    unsigned nt = 32;       // Simpson intervals in tau = log t
    double tau_max = 3.0;   // tau in [-tau_max, tau_max]
    int winding_window = 2; // windings |n| <= winding_window

    friend bool operator==(const GridSpec &, const GridSpec &) = default;
    GridSpec scaled(double factor) const; // refine (>1) or coarsen (<1)
    std::string str() const;
};

// Smooth 1-D factors used in kernel terms.
struct Factor1D {
    enum class Kind { One, Bump, VonMises, Plateau } kind = Kind::One;
    double center = 0;
    double width = 1;  // Bump support radius / Plateau outer radius
    double inner = 0;  // Plateau flat radius
    double kappa = 1;  // VonMises concentration
    double amp = 1;

    double operator()(double x) const;

    static Factor1D one() { return {}; }
    static Factor1D bump(double center, double width, double amp = 1);
    static Factor1D von_mises(double center, double kappa, double amp = 1);
    static Factor1D plateau(double inner, double outer);
};

struct ZTFactor {
    int offset = 0; // germ offset m in fz(f^m z), ftau(tau + log Delta_m(z))
    Factor1D fz;
    Factor1D ftau;
};

struct KernelTerm {
    int winding = 0;
    double scale = 1;
    Factor1D fxt;
    Factor1D fxs;
    std::vector<ZTFactor> zt;
};

// Grid-tied unit approximation: band weights at x-offsets j*h around the
// diagonal x_t = x_s, times a tau plateau; mollifies the source-leaf
// coordinate at O(h^2).
struct BandedUnit {
    std::vector<double> weights; // centered, odd length, sums to 1
    Factor1D ftau;
};

class KernelGrid {
  public:
    KernelGrid(GridSpec grid, std::vector<KernelTerm> terms);
    KernelGrid(GridSpec grid, BandedUnit unit);

    const GridSpec &grid() const { return grid_; }
    const std::vector<KernelTerm> &terms() const { return terms_; }
    const std::optional<BandedUnit> &unit() const { return unit_; }

    // winding support [lo, hi] (empty kernels report [0, 0])
    std::pair<int, int> winding_support() const;

    // pointwise evaluation; banded kernels are defined on grid diagonals
    double value(const SuspensionModel &m, int n, double x_t, double x_s, double z,
                 double tau) const;
    double sample(const SuspensionModel &m, int n, unsigned ix_t, unsigned ix_s, unsigned iz,
                  unsigned itau) const;

    KernelGrid with_grid(const GridSpec &g) const;

    // support-interiority guard: tau supports, shifted by every reachable
    // modular factor, must stay inside (-tau_max, tau_max), and windings
    // strictly inside the window.
    void check_support(const SuspensionModel &m) const;

  private:
    GridSpec grid_;
    std::vector<KernelTerm> terms_;
    std::optional<BandedUnit> unit_;
};

class support_overflow_error : public std::runtime_error {
  public:
    explicit support_overflow_error(const std::string &what) : std::runtime_error(what) {}
};

// Groupoid convolution: winding decompositions, trapezoid/Simpson integral
// over the intermediate leaf coordinate, frame composed via
// tau -> tau + log Delta.
KernelGrid convolve(const SuspensionModel &m, const KernelGrid &a, const KernelGrid &b);

struct PairingReport {
    double value = 0;
    GridSpec grid;
    std::optional<double> estimated_order; // filled by refinement studies
    std::string note;
};

// Godbillon-Vey pairing with the analytic delta evaluator.
PairingReport phi_gv(const SuspensionModel &m, const KernelGrid &a0, const KernelGrid &a1);

// Same integral with delta replaced by d/dz log Delta computed through
// dual numbers pushed through the modular function (the local-index-formula
// route, overall constant dropped).
PairingReport phi_gv_logdelta(const SuspensionModel &m, const KernelGrid &a0,
                              const KernelGrid &a1);

// b phi(a0, a1, a2) = phi(a0*a1, a2) - phi(a0, a1*a2) + phi(a2*a0, a1).
PairingReport hochschild_b(const SuspensionModel &m, const KernelGrid &a0, const KernelGrid &a1,
                           const KernelGrid &a2);

// Shifts every tau factor of the kernel by s (support permitting).
KernelGrid shift_tau(const KernelGrid &k, double s);

// Discrete 3-point mollifier with a tau plateau covering [-inner, inner].
KernelGrid make_unit_approx(const GridSpec &g, double plateau_inner);

} // namespace folichar
