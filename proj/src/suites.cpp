#include "folichar/suites.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace folichar {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Order estimate over a coarse -> default -> refined defect chain: the best
// consecutive halving ratio.  Defects that have already reached their
// round-off floor at the finest grid would otherwise poison the estimate.
double best_halving_order(const std::vector<double> &defects) {
    double best = -1e9;
    for (size_t i = 0; i + 1 < defects.size(); ++i)
        if (defects[i + 1] > 0) best = std::max(best, std::log2(defects[i] / defects[i + 1]));
    return best;
}
} // namespace

std::vector<unsigned> parse_c_poly(const std::string &text, unsigned q) {
    std::vector<unsigned> word;
    size_t i = 0;
    auto fail = [&](const std::string &why) {
        throw config_error("cannot parse polynomial '" + text + "': " + why);
    };
    while (i < text.size()) {
        if (text[i] == '*') {
            ++i;
            continue;
        }
        if (text[i] != 'c') fail("expected 'c' at position " + std::to_string(i));
        ++i;
        size_t start = i;
        while (i < text.size() && isdigit((unsigned char)text[i])) ++i;
        if (start == i) fail("missing index after 'c'");
        unsigned idx = (unsigned)std::stoul(text.substr(start, i - start));
        if (idx < 1 || idx > q)
            fail("c" + std::to_string(idx) + " undefined for q=" + std::to_string(q));
        unsigned exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            start = i;
            while (i < text.size() && isdigit((unsigned char)text[i])) ++i;
            if (start == i) fail("missing exponent after '^'");
            exp = (unsigned)std::stoul(text.substr(start, i - start));
        }
        for (unsigned e = 0; e < exp; ++e) word.push_back(idx);
    }
    if (word.empty()) fail("empty polynomial");
    return word;
}

LevelRange parse_level_range(const std::string &text) {
    size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            unsigned v = (unsigned)std::stoul(text);
            return {v, v};
        }
        LevelRange r{(unsigned)std::stoul(text.substr(0, dots)),
                     (unsigned)std::stoul(text.substr(dots + 2))};
        if (r.lo > r.hi) throw config_error("empty level range '" + text + "'");
        return r;
    } catch (const std::invalid_argument &) {
        throw config_error("cannot parse level range '" + text + "'");
    }
}

// ---------------------------------------------------------------------------

Report run_verify_weil(unsigned q, bool serial, CheckSelection checks) {
    if (q < 1) throw config_error("verify weil: q must be >= 1");
    CheckRunner runner(serial, std::move(checks));
    std::string qs = "q=" + std::to_string(q);

    if (q > 3)
        runner.add("weil.size_warning", qs, [] {
            return std::make_pair(CheckRecord::Status::Skipped,
                                  std::string("q above the default ceiling 3; expect expression growth"));
        });

    auto ctx = std::make_shared<WeilContext>(make_gl(q));

    runner.add("weil.d_squared", qs, [ctx, q] {
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                if (!derive(ctx->d(), derive(ctx->d(), ctx->omega().at(a, b))).is_zero())
                    return check_fail("d^2 omega != 0 at entry " + std::to_string(a) + "," +
                                      std::to_string(b));
                if (!derive(ctx->d(), derive(ctx->d(), ctx->Omega().at(a, b))).is_zero())
                    return check_fail("d^2 Omega != 0 at entry " + std::to_string(a) + "," +
                                      std::to_string(b));
            }
        return check_pass();
    });

    runner.add("weil.matrix_identities", qs, [ctx] {
        bool ok = apply(ctx->d(), ctx->omega()) == ctx->Omega() - mul(ctx->omega(), ctx->omega()) &&
                  apply(ctx->d(), ctx->Omega()) ==
                      mul(ctx->Omega(), ctx->omega()) - mul(ctx->omega(), ctx->Omega());
        return check_bool(ok, "matrix differential identities failed");
    });

    for (unsigned i = 1; i <= q; i += 2) {
        runner.add("weil.dh_eq_c", qs + " i=" + std::to_string(i), [ctx, i] {
            GradedElement lhs = derive(ctx->d(), transgression_h(*ctx, i));
            GradedElement rhs = chern_c(*ctx, i);
            return check_bool(lhs == rhs, (lhs - rhs).dump());
        });
    }

    runner.add("weil.c_basic", qs, [ctx, q] {
        for (unsigned i = 1; i <= q; ++i) {
            GradedElement ci = chern_c(*ctx, i);
            if (!derive(ctx->d(), ci).is_zero()) return check_fail("d c" + std::to_string(i) + " != 0");
            for (const auto &X : ctx->lie().basis) {
                if (!derive(ctx->iX(X), ci).is_zero())
                    return check_fail("i_X c" + std::to_string(i) + " != 0");
                if (!derive(ctx->LX(X), ci).is_zero())
                    return check_fail("L_X c" + std::to_string(i) + " != 0");
            }
        }
        return check_pass();
    });

    runner.add("weil.h_so_basic", qs, [ctx, q] {
        for (unsigned i = 1; i <= q; i += 2) {
            GradedElement hi = transgression_h(*ctx, i);
            for (const auto &X : ctx->lie().so_basis) {
                if (!derive(ctx->iX(X), hi).is_zero())
                    return check_fail("i_X h" + std::to_string(i) + " != 0 for an so basis element");
                if (!derive(ctx->LX(X), hi).is_zero())
                    return check_fail("L_X h" + std::to_string(i) + " != 0 for an so basis element");
            }
        }
        return check_pass();
    });

    runner.add("weil.tr_omega_sq", qs, [ctx] {
        return check_bool(mul(ctx->omega(), ctx->omega()).trace().is_zero(), "Tr(omega^2) != 0");
    });

    runner.add("weil.cartan_formula", qs, [ctx, q] {
        // L_X as installed equals i_X d + d i_X on sample products
        for (const auto &X : ctx->lie().basis) {
            DerivationSpec LX = ctx->LX(X);
            DerivationSpec ix = ctx->iX(X);
            for (unsigned a = 0; a < q; ++a)
                for (unsigned b = 0; b < q; ++b) {
                    GradedElement e = wedge(ctx->omega().at(a, b), ctx->Omega().at(b, a));
                    GradedElement lhs = derive(LX, e);
                    GradedElement rhs = derive2(ix, ctx->d(), e) + derive2(ctx->d(), ix, e);
                    if (lhs != rhs) return check_fail("Cartan formula mismatch");
                }
        }
        return check_pass();
    });

    runner.add("weil.contraction_anticommute", qs, [ctx, q] {
        std::mt19937 eng(17);
        std::uniform_int_distribution<int> pick(0, (int)ctx->lie().dim() - 1);
        for (int trial = 0; trial < 20; ++trial) {
            const auto &X = ctx->lie().basis[(unsigned)pick(eng)];
            const auto &Y = ctx->lie().basis[(unsigned)pick(eng)];
            DerivationSpec ix = ctx->iX(X), iy = ctx->iX(Y);
            GradedElement e = GradedElement::one();
            for (int f = 0; f < 3; ++f) {
                unsigned a = (unsigned)pick(eng) % q, b = (unsigned)pick(eng) % q;
                e = wedge(e, f % 2 ? ctx->Omega().at(a, b) : ctx->omega().at(a, b));
            }
            if (!(derive2(ix, iy, e) + derive2(iy, ix, e)).is_zero())
                return check_fail("i_X i_Y + i_Y i_X != 0");
        }
        return check_pass();
    });

    runner.add("weil.truncation_ideal", qs, [q] {
        WOAlphabet wo(q);
        TruncationPolicy pol{q};
        std::mt19937 eng(23);
        std::uniform_int_distribution<int> pick(0, 2);
        for (int trial = 0; trial < 40; ++trial) {
            GradedElement a = GradedElement::one();
            for (unsigned i = 1; i <= q; ++i) {
                for (int p = pick(eng); p > 0; --p) a = wedge(a, wo.c(i));
                if (i % 2 && pick(eng) == 0) a = wedge(a, wo.h(i));
            }
            GradedElement lhs = truncate(derive(wo.d(), a), wo, pol);
            GradedElement rhs = truncate(derive(wo.d(), truncate(a, wo, pol)), wo, pol);
            if (lhs != rhs) return check_fail("truncation is not a differential ideal on " + a.dump());
        }
        return check_pass();
    });

    return runner.run();
}

Report run_verify_bott(unsigned q, LevelRange levels, const std::string &poly, bool serial,
                       CheckSelection checks) {
    std::vector<unsigned> word = parse_c_poly(poly, q);
    CheckRunner runner(serial, std::move(checks));
    for (unsigned k = levels.lo; k <= levels.hi; ++k) {
        std::string params =
            "q=" + std::to_string(q) + " P=" + poly + " k=" + std::to_string(k);
        runner.add("bott.vanishing", params, [q, k, word] {
            BottReport r = verify_bott(q, k, word);
            std::ostringstream os;
            os << "deg(P)=" << r.deg_p << " surviving=" << r.surviving_monomials;
            if (r.min_dz) os << " min_dz=" << *r.min_dz;
            os << (r.deg_p > r.q ? (r.vanishes_shared ? " shared=0" : " shared!=0") : " (no vanishing claim)");
            if (!r.passed) return check_fail(os.str() + (r.witness.empty() ? "" : "\n" + r.witness));
            return check_pass(os.str());
        });
    }
    return runner.run();
}

Report run_derive_gv(bool serial, CheckSelection checks) {
    CheckRunner runner(serial, std::move(checks));

    runner.add("gvderive.char_cochain", "word=h1*c1 q=1 levels=0..3", [] {
        WeilContext wc(make_gl(1));
        WOAlphabet wo(1);
        FormalFamily fam(1, 3);
        GradedElement word = wedge(wo.h(1), wo.c(1));
        std::vector<Cochain> psi = char_cochain(word, 3, wo, wc, fam);
        std::ostringstream os;
        for (unsigned k = 0; k <= 3; ++k) os << "level " << k << ":\n" << psi[k].element.dump() << "\n";
        GradedElement a0 = fam.alpha(0).at(0, 0), a1 = fam.alpha(1).at(0, 0);
        if (psi[1].element != wedge(a0, a1))
            return check_fail("level-1 cochain differs from a0 ^ a1:\n" + os.str());
        if (!psi[2].element.is_zero() || !psi[3].element.is_zero())
            return check_fail("levels 2,3 do not vanish:\n" + os.str());
        return check_pass(os.str());
    });

    runner.add("gvderive.closed_local", "q=1", [] {
        GvClosedReport r = verify_gv_closed();
        if (!r.closed_local) return check_fail("del(alpha_G ^ R_G) != 0 in the local Bott model");
        if (!r.unit_pullback_zero) return check_fail("R_G does not vanish on units");
        return check_pass();
    });

    runner.add("gvderive.formal_witness", "q=1", [] {
        GvClosedReport r = verify_gv_closed();
        if (!r.formal_nonzero)
            return check_fail("free-alphabet del(alpha_G ^ R_G) unexpectedly vanished");
        return check_pass("del != 0 without the Bott hypothesis:\n" + r.formal_witness);
    });

    runner.add("gvderive.sign_conventions", "level 0->1", [] {
        GvClosedReport r = verify_gv_closed();
        return check_pass("del alpha = s*alpha - r*alpha:\n" + r.del_alpha_dump +
                          "\nR_G = r*alpha - s*alpha:\n" + r.r_g_dump);
    });

    return runner.run();
}

// ---------------------------------------------------------------------------

Report run_verify_model(const ModelConfig &cfg, bool serial, CheckSelection checks) {
    CheckRunner runner(serial, std::move(checks));

    std::shared_ptr<SuspensionModel> model;
    std::string construct_error;
    try {
        model = std::make_shared<SuspensionModel>(cfg.make_model());
    } catch (const std::exception &e) {
        construct_error = e.what();
    }
    runner.add("model.construct", "", [model, construct_error] {
        if (!model) return check_fail("constructor rejection: " + construct_error);
        return check_pass();
    });
    if (!model) return runner.run();

    const Tolerances &tol = cfg.tol;
    bool rotation = model->diffeo().is_rotation();

    runner.add("model.delta_cocycle", "pairs=1000 |n|<=3 tol=" + fmt(tol.delta_cocycle),
               [model, tol] {
                   std::mt19937 eng(2718);
                   std::uniform_real_distribution<double> zdist(0.0, kTwoPi);
                   std::uniform_int_distribution<int> ndist(-3, 3);
                   double worst = 0;
                   for (int trial = 0; trial < 1000; ++trial) {
                       Germ g2{ndist(eng), zdist(eng)};
                       Germ g1{ndist(eng), model->holonomy(g2).value};
                       double lhs = model->delta_analytic(model->compose(g1, g2));
                       double rhs = model->delta_analytic(g2) +
                                    model->delta_analytic(g1) * model->modular(g2);
                       worst = std::max(worst, std::fabs(lhs - rhs));
                   }
                   if (worst > tol.delta_cocycle) return check_fail("worst defect " + fmt(worst));
                   return check_pass("worst defect " + fmt(worst));
               });

    runner.add("model.modular_homomorphism", "pairs=500 |n|<=3", [model] {
        std::mt19937 eng(3141);
        std::uniform_real_distribution<double> zdist(0.0, kTwoPi);
        std::uniform_int_distribution<int> ndist(-3, 3);
        double worst = 0;
        for (int trial = 0; trial < 500; ++trial) {
            Germ g2{ndist(eng), zdist(eng)};
            Germ g1{ndist(eng), model->holonomy(g2).value};
            double lhs = model->modular(model->compose(g1, g2));
            double rhs = model->modular(g1) * model->modular(g2);
            worst = std::max(worst, std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs)));
            if (model->modular(g2) <= 0) return check_fail("modular function not positive");
        }
        if (worst > 1e-11) return check_fail("worst relative defect " + fmt(worst));
        return check_pass("worst relative defect " + fmt(worst));
    });

    runner.add("model.delta_dual_route", "samples=200", [model, tol] {
        std::mt19937 eng(999);
        std::uniform_real_distribution<double> zdist(0.0, kTwoPi);
        std::uniform_int_distribution<int> ndist(-3, 3);
        double worst = 0;
        for (int trial = 0; trial < 200; ++trial) {
            Germ g{ndist(eng), zdist(eng)};
            worst = std::max(worst,
                             std::fabs(model->delta_analytic(g) - model->dlog_modular(g)));
        }
        if (worst > tol.delta_cocycle) return check_fail("worst gap " + fmt(worst));
        return check_pass("worst gap " + fmt(worst));
    });

    runner.add("model.path_vs_delta",
               "basepoints=32 |n|<=3 steps=" + std::to_string(cfg.path_steps) +
                   " rel_tol=" + fmt(tol.path_vs_delta_rel),
               [model, &cfg, tol] {
                   PathIntegralOptions opt;
                   opt.steps = cfg.path_steps;
                   double worst = 0;
                   for (int n = -3; n <= 3; ++n)
                       for (int b = 0; b < 32; ++b) {
                           Germ g{n, kTwoPi * b / 32};
                           double path = model->path_integral_curvature(g, 1.0, opt);
                           double ana = model->delta_analytic(g);
                           double off = model->action_matrix(g)[0][1];
                           double scale = std::max(1.0, std::fabs(ana));
                           worst = std::max(worst, std::fabs(path - ana) / scale);
                           worst = std::max(worst, std::fabs(off - ana) / scale);
                       }
                   if (worst > tol.path_vs_delta_rel) return check_fail("worst rel gap " + fmt(worst));
                   return check_pass("worst rel gap " + fmt(worst));
               });

    runner.add("model.path_convergence_order", "richardson steps 8,16,32", [model, tol, rotation] {
        if (rotation)
            return std::make_pair(CheckRecord::Status::Skipped,
                                  std::string("flat model: path integrals vanish identically"));
        Germ g{2, 0.8};
        double exact = model->delta_analytic(g);
        double e1 = std::fabs(model->path_integral_curvature(g, 1.0, {8, 0, 0}) - exact);
        double e2 = std::fabs(model->path_integral_curvature(g, 1.0, {16, 0, 0}) - exact);
        double e3 = std::fabs(model->path_integral_curvature(g, 1.0, {32, 0, 0}) - exact);
        double o1 = std::log2(e1 / e2), o2 = std::log2(e2 / e3);
        std::string val = "orders " + fmt(o1) + ", " + fmt(o2);
        if (o1 < tol.path_order_min || o2 < tol.path_order_min) return check_fail(val);
        return check_pass(val);
    });

    runner.add("model.profile_independence", "profiles 1,3", [&cfg, tol] {
        SuspensionModel m1(cfg.make_diffeo(), SeamProfile::Smoothstep1);
        SuspensionModel m3(cfg.make_diffeo(), SeamProfile::Smoothstep3);
        PathIntegralOptions opt;
        opt.steps = cfg.path_steps;
        double worst = 0;
        for (int n : {-2, 1, 3})
            for (double z : {0.4, 2.9}) {
                double a = m1.path_integral_curvature(Germ{n, z}, 1.0, opt);
                double b = m3.path_integral_curvature(Germ{n, z}, 1.0, opt);
                worst = std::max(worst, std::fabs(a - b) / std::max(1.0, std::fabs(a)));
            }
        if (worst > tol.path_vs_delta_rel) return check_fail("worst rel gap " + fmt(worst));
        return check_pass("worst rel gap " + fmt(worst));
    });

    runner.add("model.perturbation_invariance", "leafwise+vertical", [model] {
        auto rep = model->perturbation_invariance(Germ{2, 1.4}, 1.0, 0.7, -0.4, {200, 0, 0});
        return check_bool(rep.identical, "perturbed path integrals differ");
    });

    runner.add("model.action_matrix_cocycle", "pairs=100", [model] {
        std::mt19937 eng(55);
        std::uniform_real_distribution<double> zdist(0.0, kTwoPi);
        std::uniform_int_distribution<int> ndist(-3, 3);
        for (int trial = 0; trial < 100; ++trial) {
            Germ g2{ndist(eng), zdist(eng)};
            Germ g1{ndist(eng), model->holonomy(g2).value};
            Germ g12 = model->compose(g1, g2);
            double off = model->delta_analytic(g2) + model->delta_analytic(g1) * model->modular(g2);
            if (std::fabs(off - model->action_matrix(g12)[0][1]) > 1e-10)
                return check_fail("Delta-weighted off-diagonal composition failed");
            auto u = model->action_matrix(Germ{0, g2.z});
            if (u[0][0] != 1.0 || u[1][1] != 1.0 || u[1][0] != 0.0 || u[0][1] != 0.0)
                return check_fail("unit germ matrix is not the identity");
        }
        return check_pass();
    });

    runner.add("model.flat_case", rotation ? "rotation" : "", [model, rotation] {
        if (!rotation)
            return std::make_pair(CheckRecord::Status::Skipped,
                                  std::string("not a rigid rotation"));
        for (int n = -3; n <= 3; ++n)
            for (double z : {0.0, 1.0, 4.2}) {
                if (model->modular(Germ{n, z}) != 1.0) return check_fail("Delta != 1");
                if (model->delta_analytic(Germ{n, z}) != 0.0) return check_fail("delta != 0");
                if (model->path_integral_curvature(Germ{n, z}, 1.0) != 0.0)
                    return check_fail("curvature path integral != 0");
            }
        return check_pass();
    });

    runner.add("model.sigma_compare", "sigma=1", [model] {
        Germ g{1, 0.0};
        auto [moved, target] = model->sigma_scale_compare(g, 1.0, 1.0);
        return check_pass("u.sigma(s(u))=" + fmt(moved) + " vs sigma(r(u))=" + fmt(target) +
                          (moved == target ? " (invariant)" : " (not invariant)"));
    });

    return runner.run();
}

// ---------------------------------------------------------------------------

Report run_verify_gvcocycle(const ModelConfig &cfg, bool serial, CheckSelection checks) {
    CheckRunner runner(serial, std::move(checks));

    std::shared_ptr<SuspensionModel> model;
    std::string construct_error;
    try {
        model = std::make_shared<SuspensionModel>(cfg.make_model());
    } catch (const std::exception &e) {
        construct_error = e.what();
    }
    runner.add("gv.construct", "", [model, construct_error] {
        if (!model) return check_fail("constructor rejection: " + construct_error);
        return check_pass();
    });
    if (!model) return runner.run();

    const Tolerances &tol = cfg.tol;
    bool rotation = model->diffeo().is_rotation();
    GridSpec grid = cfg.grid;

    runner.add("gv.support", grid.str(), [model, &cfg, grid] {
        for (const char *name : {"a0", "a1", "a2"}) cfg.kernel(name).check_support(*model);
        KernelGrid ab = convolve(*model, cfg.kernel("a0"), cfg.kernel("a1"));
        auto [lo, hi] = ab.winding_support();
        return check_pass("convolution support [" + std::to_string(lo) + "," + std::to_string(hi) +
                          "]");
    });

    runner.add("gv.mollifier_order", "nx=16,32,64", [model, &cfg, tol] {
        std::vector<double> errs;
        for (unsigned nx : {16u, 32u, 64u}) {
            GridSpec g = cfg.grid;
            g.nx = nx;
            g.nz = 16;
            g.nt = 8;
            KernelGrid a = cfg.kernels.at("a0").build(g);
            KernelGrid ae = convolve(*model, a, make_unit_approx(g, 2.0));
            double err = 0;
            for (int n : {-1, 0, 1})
                for (double xt : {0.375, 0.5, 0.625})
                    for (double xs : {0.4375, 0.5625})
                        for (double tau : {-0.375, 0.375}) {
                            err = std::max(err, std::fabs(ae.value(*model, n, xt, xs, 1.178, tau) -
                                                          a.value(*model, n, xt, xs, 1.178, tau)));
                        }
            errs.push_back(err);
        }
        double o1 = std::log2(errs[0] / errs[1]), o2 = std::log2(errs[1] / errs[2]);
        std::string val = "errors " + fmt(errs[0]) + " -> " + fmt(errs[1]) + " -> " + fmt(errs[2]) +
                          ", orders " + fmt(o1) + ", " + fmt(o2);
        if (errs[0] == 0.0)
            return std::make_pair(CheckRecord::Status::Skipped,
                                  std::string("kernel vanishes at probe points"));
        if (o1 < tol.mollifier_order_min || o2 < tol.mollifier_order_min) return check_fail(val);
        return check_pass(val);
    });

    runner.add("gv.assoc_oracle", "coarse grid", [model, &cfg, tol] {
        GridSpec g = cfg.grid;
        g.nx = 8;
        g.nz = 8;
        g.nt = 4;
        g.winding_window = std::max(g.winding_window, 4);
        KernelGrid a = cfg.kernels.at("a0").build(g);
        KernelGrid b = cfg.kernels.at("a1").build(g);
        KernelGrid c = cfg.kernels.at("a2").build(g);
        KernelGrid lhs = convolve(*model, convolve(*model, a, b), c);
        KernelGrid rhs = convolve(*model, a, convolve(*model, b, c));
        double worst = 0;
        for (int n : {-2, 0, 1})
            for (double xt : {0.375, 0.5})
                for (double xs : {0.5, 0.625})
                    for (double tau : {-0.375, 0.75}) {
                        double l = lhs.value(*model, n, xt, xs, 1.25, tau);
                        double r = rhs.value(*model, n, xt, xs, 1.25, tau);
                        worst = std::max(worst, std::fabs(l - r) / std::max(1.0, std::fabs(l)));
                    }
        if (worst > tol.assoc_oracle) return check_fail("worst rel gap " + fmt(worst));
        return check_pass("worst rel gap " + fmt(worst));
    });

    runner.add("gv.antisymmetry",
               grid.str() + " tol=" + fmt(tol.pairing_defect) + " order>=" + fmt(tol.pairing_order_min),
               [model, &cfg, grid, tol] {
                   std::vector<double> defects;
                   for (double f : {0.5, 1.0, 2.0}) {
                       GridSpec g = grid.scaled(f);
                       KernelGrid a = cfg.kernels.at("a0").build(g);
                       KernelGrid b = cfg.kernels.at("a1").build(g);
                       defects.push_back(
                           std::fabs(phi_gv(*model, a, b).value + phi_gv(*model, b, a).value));
                   }
                   std::string val = "defects " + fmt(defects[0]) + " -> " + fmt(defects[1]) +
                                     " -> " + fmt(defects[2]);
                   if (defects[1] > tol.pairing_defect) return check_fail(val);
                   if (defects[1] == 0.0) return check_pass(val + " (identically zero)");
                   double order = best_halving_order(defects);
                   val += ", observed order " + fmt(order);
                   if (order < tol.pairing_order_min) return check_fail(val);
                   return check_pass(val);
               });

    runner.add("gv.hochschild",
               grid.str() + " tol=" + fmt(tol.pairing_defect) + " order>=" + fmt(tol.pairing_order_min),
               [model, &cfg, grid, tol] {
                   std::vector<double> defects;
                   for (double f : {0.5, 1.0, 2.0}) {
                       GridSpec g = grid.scaled(f);
                       KernelGrid a = cfg.kernels.at("a0").build(g);
                       KernelGrid b = cfg.kernels.at("a1").build(g);
                       KernelGrid c = cfg.kernels.at("a2").build(g);
                       defects.push_back(std::fabs(hochschild_b(*model, a, b, c).value));
                   }
                   std::string val = "defects " + fmt(defects[0]) + " -> " + fmt(defects[1]) +
                                     " -> " + fmt(defects[2]);
                   if (defects[1] > tol.pairing_defect) return check_fail(val);
                   if (defects[1] == 0.0) return check_pass(val + " (identically zero)");
                   double order = best_halving_order(defects);
                   val += ", observed order " + fmt(order);
                   if (order < tol.pairing_order_min) return check_fail(val);
                   return check_pass(val);
               });

    runner.add("gv.formula_equiv", grid.str() + " tol=" + fmt(tol.formula_equiv),
               [model, &cfg, grid, tol] {
                   KernelGrid a = cfg.kernels.at("a0").build(grid);
                   KernelGrid b = cfg.kernels.at("a1").build(grid);
                   double v1 = phi_gv(*model, a, b).value;
                   double v2 = phi_gv_logdelta(*model, a, b).value;
                   double gap = std::fabs(v1 - v2);
                   std::string val = "phi=" + fmt(v1) + " phi_logDelta=" + fmt(v2) + " gap=" + fmt(gap);
                   if (gap > tol.formula_equiv * std::max(1.0, std::fabs(v1))) return check_fail(val);
                   return check_pass(val);
               });

    runner.add("gv.tau_shift", "s=0.37 tol=" + fmt(tol.tau_shift), [model, &cfg, grid, tol] {
        KernelGrid a = cfg.kernels.at("a0").build(grid);
        KernelGrid b = cfg.kernels.at("a1").build(grid);
        double v = phi_gv(*model, a, b).value;
        double w = phi_gv(*model, shift_tau(a, 0.37), shift_tau(b, 0.37)).value;
        double gap = std::fabs(v - w);
        if (gap > tol.tau_shift) return check_fail("gap " + fmt(gap));
        return check_pass("gap " + fmt(gap));
    });

    runner.add("gv.flat_zero", rotation ? "rotation" : "", [model, &cfg, grid, rotation] {
        if (!rotation)
            return std::make_pair(CheckRecord::Status::Skipped, std::string("not a rigid rotation"));
        KernelGrid a = cfg.kernels.at("a0").build(grid);
        KernelGrid b = cfg.kernels.at("a1").build(grid);
        KernelGrid c = cfg.kernels.at("a2").build(grid);
        if (phi_gv(*model, a, b).value != 0.0) return check_fail("phi_gv != 0 for a flat model");
        if (phi_gv_logdelta(*model, a, b).value != 0.0)
            return check_fail("phi_logDelta != 0 for a flat model");
        if (hochschild_b(*model, a, b, c).value != 0.0)
            return check_fail("b phi != 0 for a flat model");
        return check_pass();
    });

    runner.add("gv.reproducible", "serial", [model, &cfg, grid] {
        KernelGrid a = cfg.kernels.at("a0").build(grid);
        KernelGrid b = cfg.kernels.at("a1").build(grid);
        double v1 = phi_gv(*model, a, b).value;
        double v2 = phi_gv(*model, a, b).value;
        return check_bool(v1 == v2, "serial runs differ");
    });

    return runner.run();
}

std::string dump_element(const std::string &name, unsigned q) {
    if (name.size() < 2 || (name[0] != 'c' && name[0] != 'h'))
        throw config_error("dump: element must be c<i> or h<i>");
    unsigned i = (unsigned)std::stoul(name.substr(1));
    WeilContext ctx(make_gl(q));
    GradedElement e = name[0] == 'c' ? chern_c(ctx, i) : transgression_h(ctx, i);
    return e.dump();
}

} // namespace folichar
