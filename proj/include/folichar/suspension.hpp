// Concrete codimension-1 foliation: the suspension of a circle
// diffeomorphism with an explicit Bott connection.  Holonomy germs, the
// modular function Delta, the leafwise logarithmic derivative delta,
// parallel transport, curvature path integrals, and the triangular frame
// action live here.
#pragma once

#include "folichar/dual.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace folichar {

class model_error : public std::runtime_error {
  public:
    explicit model_error(const std::string &what) : std::runtime_error(what) {}
};

// f(z) = z + c + sum_n (a_n sin nz + b_n cos nz) on the circle of
// circumference 2 pi; the contraction bound sum n (|a_n| + |b_n|) < 1
// guarantees f' > 0 and a globally convergent Newton inverse.
class CircleDiffeo {
  public:
    CircleDiffeo(double constant, std::vector<double> sin_coeffs, std::vector<double> cos_coeffs);

    double value(double z) const;
    double deriv(double z) const;
    double deriv2(double z) const;
    double dlog_deriv(double z) const { return deriv2(z) / deriv(z); } // (log f')'
    double inverse(double w) const;                                    // Newton, tol 1e-13

    Dual value(Dual z) const;
    Dual deriv(Dual z) const;
    Dual inverse(Dual w) const; // implicit-function derivative at the solved point

    bool is_rotation() const { return sin_.empty() && cos_.empty(); }

  private:
    double constant_;
    std::vector<double> sin_, cos_; // indexed by n-1
};

// Holonomy germ: winding count n with source transverse coordinate z; the
// germ acts by f^n near z.
struct Germ {
    int n = 0;
    double z = 0;
};

// Point of the trivialized positively oriented frame bundle M x R*_+.
struct FramePoint {
    double x;
    double z;
    double t;

    FramePoint(double x_, double z_, double t_) : x(x_), z(z_), t(t_) {
        if (t <= 0) throw std::invalid_argument("FramePoint: frame scale must be positive");
    }
};

struct HolonomyEval {
    double value;      // f^n(z)
    double derivative; // (f^n)'(z)
};

enum class SeamProfile { Smoothstep1, Smoothstep2, Smoothstep3 };

struct PathIntegralOptions {
    unsigned steps = 1000; // Simpson subdivisions per chart crossing (made even)
    // optional perturbations of the transported field, sampled along the path
    double leafwise = 0;
    double vertical = 0;
};

class SuspensionModel {
  public:
    SuspensionModel(CircleDiffeo f, SeamProfile profile = SeamProfile::Smoothstep2);

    const CircleDiffeo &diffeo() const { return f_; }

    // seam profile psi with psi(0) = 0, psi(1) = 1, flat endpoints
    double psi(double x) const;
    double psi_deriv(double x) const;

    // Bott connection data: alpha = dt/t + A(x,z) dz, A = psi(x) (log f')'(z);
    // curvature R = psi'(x) (log f')'(z) dx ^ dz.
    double bott_field(double x, double z) const { return psi(x) * f_.dlog_deriv(z); }
    double curvature_coeff(double x, double z) const { return psi_deriv(x) * f_.dlog_deriv(z); }

    HolonomyEval holonomy(const Germ &g) const;
    Germ compose(const Germ &g1, const Germ &g2) const; // requires r(g2) = s(g1)
    Germ inverse(const Germ &g) const;

    // Delta(g) = (f^n)'(z): r*omega = Delta s*omega for omega = dz.
    double modular(const Germ &g) const;

    // The groupoid action on the frame bundle: frames transport by the
    // holonomy derivative, (x, z, t) -> (x, f^n(z), Delta(g) t).
    FramePoint transport_frame(const Germ &g, const FramePoint &p) const;

    // delta(g) = d/dz log (f^n)'(z) via the chain-rule sum.
    double delta_analytic(const Germ &g) const;

    // Same quantity through forward-mode duals pushed through f^n and the
    // Newton inverse; an independent evaluation route.
    double dlog_modular(const Germ &g) const;

    // Quadrature of R(path velocity, parallel transported field) along the
    // leafwise path covering the suspension direction n times, starting with
    // transverse component v.  Transport is constant inside charts and
    // multiplies by f' across each seam.
    double path_integral_curvature(const Germ &g, double v,
                                   PathIntegralOptions opt = {}) const;

    // [[1, delta(g)], [0, 1]]: identity diagonal with the integrated
    // curvature off-diagonal.
    std::array<std::array<double, 2>, 2> action_matrix(const Germ &g) const;

    struct PerturbationReport {
        double base = 0;
        double leafwise_perturbed = 0;
        double vertical_perturbed = 0;
        double zero_perturbed = 0;
        bool identical = false; // all four agree bitwise
    };

    // path_integral_curvature is unchanged under leafwise and vertical
    // perturbations of the transported field (R annihilates both).
    PerturbationReport perturbation_invariance(const Germ &g, double v, double leafwise,
                                               double vertical,
                                               PathIntegralOptions opt = {}) const;

    // Raw quantities of the invariant-Euclidean-structure obstruction: for a
    // frame scale field sigma, returns (Delta(g) sigma(s(g)), sigma(r(g))).
    std::pair<double, double> sigma_scale_compare(const Germ &g, double sigma_source,
                                                  double sigma_range) const;

  private:
    CircleDiffeo f_;
    SeamProfile profile_;
};


} // namespace folichar
