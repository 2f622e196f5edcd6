// Model configuration: the circle diffeomorphism, seam profile, grids,
// quadrature steps, tolerances, and kernel specifications, loaded from a
// JSON file.
#pragma once

#include "folichar/gv_pairing.hpp"

#include <map>

namespace folichar {

struct BumpSpec {
    double center = 0.5;
    double width = 0.25;
};

struct KernelSpec {
    std::vector<std::pair<int, double>> windings; // (n, amplitude)
    BumpSpec xt{0.5, 0.28};
    BumpSpec xs{0.5, 0.30};
    double z_center = 0;
    double z_kappa = 2.0;
    BumpSpec tau{0.0, 1.2};

    KernelGrid build(const GridSpec &g) const;
};

struct Tolerances {
    double delta_cocycle = 1e-10;
    double path_vs_delta_rel = 1e-6;
    double path_order_min = 2.0;
    double pairing_defect = 1e-3;
    double pairing_order_min = 1.8;
    double formula_equiv = 1e-10;
    double tau_shift = 1e-5;
    double assoc_oracle = 1e-12;
    double mollifier_order_min = 1.8;
};

struct ModelConfig {
    double diffeo_constant = 0.0;
    std::vector<double> diffeo_sin{0.3};
    std::vector<double> diffeo_cos{};
    unsigned seam_profile_order = 2; // polynomial smoothstep order
    GridSpec grid{};
    unsigned path_steps = 1000;
    Tolerances tol{};
    std::map<std::string, KernelSpec> kernels; // a0, a1, a2

    static ModelConfig defaults();
    static ModelConfig rotation_defaults();
    static ModelConfig from_file(const std::string &path);
    static ModelConfig from_json_text(const std::string &text);

    CircleDiffeo make_diffeo() const;
    SuspensionModel make_model() const;
    SeamProfile seam_profile() const;
    KernelGrid kernel(const std::string &name) const;
};

class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string &what) : std::runtime_error(what) {}
};

} // namespace folichar
