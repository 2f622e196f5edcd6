// Named verification suites shared by the CLI and the acceptance runner.
#pragma once

#include "folichar/config.hpp"
#include "folichar/report.hpp"
#include "folichar/simplicial.hpp"

namespace folichar {

// c-alphabet polynomial grammar: `c1`, `c1^2`, `c1*c2`.
std::vector<unsigned> parse_c_poly(const std::string &text, unsigned q);

struct LevelRange {
    unsigned lo = 0;
    unsigned hi = 3;
};
LevelRange parse_level_range(const std::string &text); // "a..b"

// `checks` restricts a suite to the named records (unknown names are
// rejected before any check runs); empty means the full suite.
using CheckSelection = std::vector<std::string>;

Report run_verify_weil(unsigned q, bool serial = true, CheckSelection checks = {});
Report run_verify_bott(unsigned q, LevelRange levels, const std::string &poly, bool serial = true,
                       CheckSelection checks = {});
Report run_derive_gv(bool serial = true, CheckSelection checks = {});
Report run_verify_model(const ModelConfig &cfg, bool serial = true, CheckSelection checks = {});
Report run_verify_gvcocycle(const ModelConfig &cfg, bool serial = true, CheckSelection checks = {});

// canonical dump of c<i> / h<i> in W(gl(q))
std::string dump_element(const std::string &name, unsigned q);

} // namespace folichar
