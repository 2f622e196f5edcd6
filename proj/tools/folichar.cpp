// folichar: symbolic and numeric verification of Chern-Weil data on
// suspension foliation models.
//
//   folichar verify weil --q 2
//   folichar verify bott --q 1 --poly c1^2 --levels 0..2
//   folichar verify model --config configs/default.json
//   folichar verify gvcocycle --config configs/default.json
//   folichar derive gv
//   folichar dump c2 --q 3
//
// Exit status is 0 iff every non-skipped check passes.  Reports stream as
// text records to stdout; --out writes the machine-readable JSON summary.
#include "CLI11.hpp"

#include "folichar/suites.hpp"

#include <fstream>
#include <iostream>

using namespace folichar;

namespace {

struct Options {
    unsigned q = 1;
    std::string levels = "0..3";
    std::string poly;
    std::string config_path;
    std::string out_path;
    bool serial = false;
    std::vector<std::string> checks;
};

ModelConfig load_config(const Options &opt) {
    if (opt.config_path.empty()) return ModelConfig::defaults();
    return ModelConfig::from_file(opt.config_path);
}

int finish(const Report &rep, const Options &opt) {
    std::cout << rep.text();
    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path);
        if (!out) {
            std::cerr << "cannot write report to '" << opt.out_path << "'\n";
            return 2;
        }
        out << rep.json() << "\n";
    }
    return rep.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"folichar: Chern-Weil verification on suspension foliations"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--config", opt.config_path, "model configuration file (JSON)");
        cmd->add_option("--out", opt.out_path, "write the JSON report summary here");
        cmd->add_flag("--serial", opt.serial, "force deterministic serial execution");
        cmd->add_option("--checks", opt.checks, "restrict to these check identifiers")
            ->delimiter(',');
    };

    CLI::App *verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);

    CLI::App *weil = verify->add_subcommand("weil", "Weil algebra identities");
    weil->add_option("--q", opt.q, "codimension (1..3 by default ceiling)")->required();
    add_common(weil);

    CLI::App *bott = verify->add_subcommand("bott", "generalized Bott vanishing");
    bott->add_option("--q", opt.q, "codimension")->required();
    bott->add_option("--poly", opt.poly, "invariant polynomial, e.g. c1^2 or c1*c2")->required();
    bott->add_option("--levels", opt.levels, "nerve level range a..b (default 0..3)");
    add_common(bott);

    CLI::App *modelcmd = verify->add_subcommand("model", "suspension model numerics");
    add_common(modelcmd);

    CLI::App *gvcocycle = verify->add_subcommand("gvcocycle", "Godbillon-Vey pairing numerics");
    add_common(gvcocycle);

    CLI::App *derive = app.add_subcommand("derive", "derive canonical data");
    CLI::App *derive_gv = derive->add_subcommand("gv", "the Godbillon-Vey cochain family");
    add_common(derive_gv);

    CLI::App *dump = app.add_subcommand("dump", "canonical dump of c<i> or h<i>");
    std::string element;
    dump->add_option("element", element, "element name, e.g. c2 or h3")->required();
    dump->add_option("--q", opt.q, "codimension")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (weil->parsed()) return finish(run_verify_weil(opt.q, opt.serial, opt.checks), opt);
        if (bott->parsed())
            return finish(
                run_verify_bott(opt.q, parse_level_range(opt.levels), opt.poly, opt.serial,
                                opt.checks),
                opt);
        if (modelcmd->parsed())
            return finish(run_verify_model(load_config(opt), opt.serial, opt.checks), opt);
        if (gvcocycle->parsed())
            return finish(run_verify_gvcocycle(load_config(opt), opt.serial, opt.checks), opt);
        if (derive_gv->parsed()) return finish(run_derive_gv(opt.serial, opt.checks), opt);
        if (dump->parsed()) {
            std::cout << dump_element(element, opt.q) << "\n";
            return 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
