#include "folichar/suspension.hpp"

#include <cmath>

namespace folichar {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kNewtonTol = 1e-13;
} // namespace


CircleDiffeo::CircleDiffeo(double constant, std::vector<double> sin_coeffs,
                           std::vector<double> cos_coeffs)
    : constant_(constant), sin_(std::move(sin_coeffs)), cos_(std::move(cos_coeffs)) {
    while (!sin_.empty() && sin_.back() == 0.0) sin_.pop_back();
    while (!cos_.empty() && cos_.back() == 0.0) cos_.pop_back();
    double bound = 0;
    for (size_t n = 0; n < sin_.size(); ++n) bound += (double)(n + 1) * std::fabs(sin_[n]);
    for (size_t n = 0; n < cos_.size(); ++n) bound += (double)(n + 1) * std::fabs(cos_[n]);
    if (bound >= 1.0)
        throw model_error("CircleDiffeo: sup |f' - 1| bound " + std::to_string(bound) +
                          " >= 1, not an orientation-preserving diffeomorphism");
    for (int i = 0; i < 512; ++i)
        if (deriv(kTwoPi * i / 512.0) <= 0.0)
            throw model_error("CircleDiffeo: nonpositive derivative sampled");
}

double CircleDiffeo::value(double z) const {
    double r = z + constant_;
    for (size_t n = 0; n < sin_.size(); ++n) r += sin_[n] * std::sin((double)(n + 1) * z);
    for (size_t n = 0; n < cos_.size(); ++n) r += cos_[n] * std::cos((double)(n + 1) * z);
    return r;
}

double CircleDiffeo::deriv(double z) const {
    double r = 1;
    for (size_t n = 0; n < sin_.size(); ++n)
        r += (double)(n + 1) * sin_[n] * std::cos((double)(n + 1) * z);
    for (size_t n = 0; n < cos_.size(); ++n)
        r -= (double)(n + 1) * cos_[n] * std::sin((double)(n + 1) * z);
    return r;
}

double CircleDiffeo::deriv2(double z) const {
    double r = 0;
    for (size_t n = 0; n < sin_.size(); ++n) {
        double k = (double)(n + 1);
        r -= k * k * sin_[n] * std::sin(k * z);
    }
    for (size_t n = 0; n < cos_.size(); ++n) {
        double k = (double)(n + 1);
        r -= k * k * cos_[n] * std::cos(k * z);
    }
    return r;
}

double CircleDiffeo::inverse(double w) const {
    double z = w - constant_;
    for (int it = 0; it < 200; ++it) {
        double err = value(z) - w;
        if (std::fabs(err) < kNewtonTol) return z;
        z -= err / deriv(z);
    }
    throw model_error("CircleDiffeo::inverse: Newton did not converge");
}

Dual CircleDiffeo::value(Dual z) const {
    Dual r = z + Dual(constant_);
    for (size_t n = 0; n < sin_.size(); ++n) r = r + Dual(sin_[n]) * sin(Dual((double)(n + 1)) * z);
    for (size_t n = 0; n < cos_.size(); ++n) r = r + Dual(cos_[n]) * cos(Dual((double)(n + 1)) * z);
    return r;
}

Dual CircleDiffeo::deriv(Dual z) const {
    Dual r(1.0);
    for (size_t n = 0; n < sin_.size(); ++n) {
        Dual k((double)(n + 1));
        r = r + Dual(sin_[n]) * k * cos(k * z);
    }
    for (size_t n = 0; n < cos_.size(); ++n) {
        Dual k((double)(n + 1));
        r = r - Dual(cos_[n]) * k * sin(k * z);
    }
    return r;
}

Dual CircleDiffeo::inverse(Dual w) const {
    double zv = inverse(w.v);
    // implicit function rule: z'(w) = w' / f'(z)
    return Dual(zv, w.d / deriv(zv));
}

SuspensionModel::SuspensionModel(CircleDiffeo f, SeamProfile profile)
    : f_(std::move(f)), profile_(profile) {}

double SuspensionModel::psi(double x) const {
    switch (profile_) {
    case SeamProfile::Smoothstep1: return x * x * (3 - 2 * x);
    case SeamProfile::Smoothstep2: return x * x * x * (10 + x * (-15 + 6 * x));
    case SeamProfile::Smoothstep3:
        return x * x * x * x * (35 + x * (-84 + x * (70 - 20 * x)));
    }
    return x;
}

double SuspensionModel::psi_deriv(double x) const {
    switch (profile_) {
    case SeamProfile::Smoothstep1: return 6 * x * (1 - x);
    case SeamProfile::Smoothstep2: return 30 * x * x * (1 - x) * (1 - x);
    case SeamProfile::Smoothstep3: {
        double u = x * (1 - x);
        return 140 * u * u * u;
    }
    }
    return 1;
}

HolonomyEval SuspensionModel::holonomy(const Germ &g) const {
    double z = g.z;
    double d = 1;
    if (g.n >= 0) {
        for (int j = 0; j < g.n; ++j) {
            d *= f_.deriv(z);
            z = f_.value(z);
        }
    } else {
        for (int j = 0; j < -g.n; ++j) {
            z = f_.inverse(z);
            d /= f_.deriv(z); // inverse-function rule
        }
    }
    return {z, d};
}

Germ SuspensionModel::compose(const Germ &g1, const Germ &g2) const {
    double target = holonomy(g2).value;
    double gap = std::fabs(std::remainder(target - g1.z, kTwoPi));
    if (gap > 1e-9)
        throw model_error("Germ composition: source/range mismatch of " + std::to_string(gap));
    return Germ{g1.n + g2.n, g2.z};
}

Germ SuspensionModel::inverse(const Germ &g) const { return Germ{-g.n, holonomy(g).value}; }

double SuspensionModel::modular(const Germ &g) const { return holonomy(g).derivative; }

FramePoint SuspensionModel::transport_frame(const Germ &g, const FramePoint &p) const {
    if (std::fabs(std::remainder(p.z - g.z, kTwoPi)) > 1e-9)
        throw model_error("transport_frame: frame point is not over the germ source");
    HolonomyEval h = holonomy(g);
    return FramePoint(p.x, h.value, h.derivative * p.t);
}

double SuspensionModel::delta_analytic(const Germ &g) const {
    if (g.n == 0) return 0;
    if (g.n < 0) {
        // delta(g) = -delta(g^{-1}) Delta(g) from the cocycle law
        Germ inv = inverse(g);
        return -delta_analytic(inv) * modular(g);
    }
    double z = g.z;
    double transported = 1; // (f^j)'(g.z)
    double sum = 0;
    for (int j = 0; j < g.n; ++j) {
        sum += f_.dlog_deriv(z) * transported;
        transported *= f_.deriv(z);
        z = f_.value(z);
    }
    return sum;
}

double SuspensionModel::dlog_modular(const Germ &g) const {
    Dual z(g.z, 1.0);
    Dual d(1.0);
    if (g.n >= 0) {
        for (int j = 0; j < g.n; ++j) {
            d = d * f_.deriv(z);
            z = f_.value(z);
        }
    } else {
        for (int j = 0; j < -g.n; ++j) {
            z = f_.inverse(z);
            d = d / f_.deriv(z);
        }
    }
    return log(d).d;
}

double SuspensionModel::path_integral_curvature(const Germ &g, double v,
                                                PathIntegralOptions opt) const {
    if (opt.steps < 2) throw model_error("path_integral_curvature: need at least 2 steps");
    unsigned steps = opt.steps + (opt.steps % 2); // Simpson needs an even count
    bool backwards = g.n < 0;
    int crossings = backwards ? -g.n : g.n;

    // Transverse components at the start of each chart segment.
    double z = g.z;
    double total = 0;
    double comp = v;
    for (int seg = 0; seg < crossings; ++seg) {
        if (backwards) {
            // segment traversed with x from 1 down to 0 in the chart of f^{-1}(z)
            z = f_.inverse(z);
            comp /= f_.deriv(z);
        }
        double dlog = f_.dlog_deriv(z);
        // Simpson quadrature of R(gamma', X~) = psi'(x) (log f')'(z) * comp
        // over the chart; the leafwise/vertical perturbation components are
        // annihilated by R and enter the integrand with zero coefficient.
        double h = 1.0 / steps;
        double acc = 0;
        for (unsigned s = 0; s <= steps; ++s) {
            double x = s * h;
            double w = (s == 0 || s == steps) ? 1 : (s % 2 ? 4 : 2);
            double integrand = psi_deriv(x) * dlog * comp +
                               0.0 * opt.leafwise + 0.0 * opt.vertical;
            acc += w * integrand;
        }
        acc *= h / 3;
        if (backwards) {
            total -= acc; // orientation: x decreasing
        } else {
            total += acc;
            comp *= f_.deriv(z);
            z = f_.value(z);
        }
    }
    return total;
}

std::array<std::array<double, 2>, 2> SuspensionModel::action_matrix(const Germ &g) const {
    return {{{1.0, delta_analytic(g)}, {0.0, 1.0}}};
}

SuspensionModel::PerturbationReport
SuspensionModel::perturbation_invariance(const Germ &g, double v, double leafwise, double vertical,
                                         PathIntegralOptions opt) const {
    PerturbationReport rep;
    PathIntegralOptions base = opt;
    base.leafwise = 0;
    base.vertical = 0;
    rep.base = path_integral_curvature(g, v, base);
    PathIntegralOptions lw = base;
    lw.leafwise = leafwise;
    rep.leafwise_perturbed = path_integral_curvature(g, v, lw);
    PathIntegralOptions vt = base;
    vt.vertical = vertical;
    rep.vertical_perturbed = path_integral_curvature(g, v, vt);
    rep.zero_perturbed = path_integral_curvature(g, v, base);
    rep.identical = rep.base == rep.leafwise_perturbed && rep.base == rep.vertical_perturbed &&
                    rep.base == rep.zero_perturbed;
    return rep;
}

std::pair<double, double> SuspensionModel::sigma_scale_compare(const Germ &g, double sigma_source,
                                                               double sigma_range) const {
    return {modular(g) * sigma_source, sigma_range};
}

} // namespace folichar
