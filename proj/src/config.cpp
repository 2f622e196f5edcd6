#include "folichar/config.hpp"

#include "json.hpp"

#include <fstream>

namespace folichar {

using nlohmann::json;

KernelGrid KernelSpec::build(const GridSpec &g) const {
    std::vector<KernelTerm> terms;
    for (auto [n, amp] : windings) {
        KernelTerm t;
        t.winding = n;
        t.scale = amp;
        t.fxt = Factor1D::bump(xt.center, xt.width);
        t.fxs = Factor1D::bump(xs.center, xs.width);
        t.zt.push_back(ZTFactor{0, Factor1D::von_mises(z_center, z_kappa),
                                Factor1D::bump(tau.center, tau.width)});
        terms.push_back(std::move(t));
    }
    return KernelGrid(g, std::move(terms));
}

ModelConfig ModelConfig::defaults() {
    ModelConfig c;
    c.kernels["a0"] = KernelSpec{{{0, 0.7}, {1, 1.0}, {-1, 0.4}},
                                 {0.45, 0.28},
                                 {0.55, 0.30},
                                 1.0,
                                 2.0,
                                 {-0.3, 1.2}};
    c.kernels["a1"] = KernelSpec{{{0, 0.5}, {1, 0.8}, {-1, 0.9}},
                                 {0.38, 0.26},
                                 {0.58, 0.30},
                                 0.7,
                                 2.0,
                                 {0.2, 1.2}};
    c.kernels["a2"] = KernelSpec{{{0, 1.1}, {-1, 0.6}},
                                 {0.5, 0.30},
                                 {0.47, 0.28},
                                 2.0,
                                 2.0,
                                 {0.0, 1.2}};
    return c;
}

ModelConfig ModelConfig::rotation_defaults() {
    ModelConfig c = defaults();
    c.diffeo_constant = 0.5;
    c.diffeo_sin.clear();
    c.diffeo_cos.clear();
    return c;
}

namespace {

BumpSpec bump_spec(const json &j, BumpSpec fallback) {
    BumpSpec b = fallback;
    if (j.contains("center")) b.center = j["center"].get<double>();
    if (j.contains("width")) b.width = j["width"].get<double>();
    return b;
}

} // namespace

ModelConfig ModelConfig::from_json_text(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw config_error(std::string("config parse error: ") + e.what());
    }
    ModelConfig c = defaults();
    try {
        if (j.contains("diffeo")) {
            const json &d = j["diffeo"];
            c.diffeo_constant = d.value("constant", 0.0);
            c.diffeo_sin = d.value("sin", std::vector<double>{});
            c.diffeo_cos = d.value("cos", std::vector<double>{});
        }
        c.seam_profile_order = j.value("seam_profile_order", c.seam_profile_order);
        if (j.contains("grid")) {
            const json &g = j["grid"];
            c.grid.nx = g.value("nx", c.grid.nx);
            c.grid.nz = g.value("nz", c.grid.nz);
            c.grid.nt = g.value("nt", c.grid.nt);
            c.grid.tau_max = g.value("tau_max", c.grid.tau_max);
            c.grid.winding_window = g.value("winding_window", c.grid.winding_window);
        }
        c.path_steps = j.value("path_steps", c.path_steps);
        if (j.contains("tolerances")) {
            const json &t = j["tolerances"];
            c.tol.delta_cocycle = t.value("delta_cocycle", c.tol.delta_cocycle);
            c.tol.path_vs_delta_rel = t.value("path_vs_delta_rel", c.tol.path_vs_delta_rel);
            c.tol.path_order_min = t.value("path_order_min", c.tol.path_order_min);
            c.tol.pairing_defect = t.value("pairing_defect", c.tol.pairing_defect);
            c.tol.pairing_order_min = t.value("pairing_order_min", c.tol.pairing_order_min);
            c.tol.formula_equiv = t.value("formula_equiv", c.tol.formula_equiv);
            c.tol.tau_shift = t.value("tau_shift", c.tol.tau_shift);
            c.tol.assoc_oracle = t.value("assoc_oracle", c.tol.assoc_oracle);
            c.tol.mollifier_order_min = t.value("mollifier_order_min", c.tol.mollifier_order_min);
        }
        if (j.contains("kernels")) {
            for (auto &[name, k] : j["kernels"].items()) {
                KernelSpec spec;
                if (k.contains("windings"))
                    for (const json &w : k["windings"])
                        spec.windings.push_back({w["n"].get<int>(), w["amp"].get<double>()});
                spec.xt = bump_spec(k.value("xt", json::object()), spec.xt);
                spec.xs = bump_spec(k.value("xs", json::object()), spec.xs);
                if (k.contains("z")) {
                    spec.z_center = k["z"].value("center", spec.z_center);
                    spec.z_kappa = k["z"].value("kappa", spec.z_kappa);
                }
                spec.tau = bump_spec(k.value("tau", json::object()), spec.tau);
                c.kernels[name] = std::move(spec);
            }
        }
    } catch (const json::exception &e) {
        throw config_error(std::string("config field error: ") + e.what());
    }
    return c;
}

ModelConfig ModelConfig::from_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_json_text(text);
}

CircleDiffeo ModelConfig::make_diffeo() const {
    return CircleDiffeo(diffeo_constant, diffeo_sin, diffeo_cos);
}

SeamProfile ModelConfig::seam_profile() const {
    switch (seam_profile_order) {
    case 1: return SeamProfile::Smoothstep1;
    case 2: return SeamProfile::Smoothstep2;
    case 3: return SeamProfile::Smoothstep3;
    default: throw config_error("seam_profile_order must be 1, 2 or 3");
    }
}

SuspensionModel ModelConfig::make_model() const {
    return SuspensionModel(make_diffeo(), seam_profile());
}

KernelGrid ModelConfig::kernel(const std::string &name) const {
    auto it = kernels.find(name);
    if (it == kernels.end()) throw config_error("no kernel '" + name + "' in config");
    return it->second.build(grid);
}

} // namespace folichar
