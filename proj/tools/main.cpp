#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "diffrep/bench.hpp"

namespace {

using diffrep::bench::ExperimentConfig;
using diffrep::bench::KernelWindow;

struct CommonOpts {
    CLI::Option* alpha = nullptr;
    CLI::Option* transform = nullptr;
    CLI::Option* sigma = nullptr;
    CLI::Option* rho = nullptr;
    CLI::Option* f = nullptr;
    CLI::Option* a = nullptr;
    CLI::Option* b = nullptr;
    CLI::Option* n = nullptr;
    CLI::Option* m = nullptr;
    CLI::Option* stepper = nullptr;
    CLI::Option* tol = nullptr;
    CLI::Option* out = nullptr;
    CLI::Option* config = nullptr;

    ExperimentConfig staged;
    std::string config_path;

    void attach(CLI::App* cmd) {
        alpha = cmd->add_option("--alpha", staged.alpha, "fractional order");
        transform = cmd->add_option("--transform", staged.transform,
                                    "exp|square|power|tan|rational");
        sigma = cmd->add_option("--sigma", staged.sigma, "rational transform exponent sigma");
        rho = cmd->add_option("--rho", staged.rho, "rational transform exponent rho");
        f = cmd->add_option("--f", staged.f_tag, "source: const|zero|poly:<beta>|sin|cos|exp");
        a = cmd->add_option("--a", staged.a, "interval start");
        b = cmd->add_option("--b", staged.b, "interval end");
        n = cmd->add_option("--n", staged.n_list, "grid sizes")->delimiter(',');
        m = cmd->add_option("--m", staged.m_list, "rule sizes (per half)")->delimiter(',');
        stepper = cmd->add_option("--stepper", staged.stepper, "be|trap");
        tol = cmd->add_option("--tol", staged.tol, "oracle tolerance");
        out = cmd->add_option("--out", staged.output_path, "output file (default stdout)");
        config = cmd->add_option("--config", config_path, "JSON config file");
    }

    // config file first, explicit flags on top
    ExperimentConfig resolve() const {
        ExperimentConfig cfg;
        if (config->count() > 0) {
            cfg = diffrep::bench::config_from_json_file(config_path);
        }
        if (alpha->count()) cfg.alpha = staged.alpha;
        if (transform->count()) cfg.transform = staged.transform;
        if (sigma->count()) cfg.sigma = staged.sigma;
        if (rho->count()) cfg.rho = staged.rho;
        if (f->count()) cfg.f_tag = staged.f_tag;
        if (a->count()) cfg.a = staged.a;
        if (b->count()) cfg.b = staged.b;
        if (n->count()) cfg.n_list = staged.n_list;
        if (m->count()) cfg.m_list = staged.m_list;
        if (stepper->count()) cfg.stepper = staged.stepper;
        if (tol->count()) cfg.tol = staged.tol;
        if (out->count()) cfg.output_path = staged.output_path;
        return cfg;
    }
};

template <typename Fn>
int with_output(const ExperimentConfig& cfg, Fn&& fn) {
    if (cfg.output_path.empty()) {
        fn(std::cout);
        return 0;
    }
    std::ofstream file(cfg.output_path);
    if (!file) {
        throw diffrep::ConfigError("cannot open output file '" + cfg.output_path + "'");
    }
    fn(file);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional integrals through diffusive representations"};
    app.require_subcommand(1);

    CommonOpts eval_opts, conv_opts, kern_opts, node_opts;
    KernelWindow window;

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate on a time grid, CSV t,value");
    eval_opts.attach(eval_cmd);

    CLI::App* conv_cmd =
        app.add_subcommand("convergence", "grid refinement study, CSV with EOC and runtime");
    conv_opts.attach(conv_cmd);

    CLI::App* kern_cmd = app.add_subcommand("kernel", "kernel dump, CSV omega,psi,phi_abs");
    kern_opts.attach(kern_cmd);
    kern_cmd->add_option("--t", window.t, "evaluation time");
    kern_cmd->add_option("--omega-min", window.omega_min, "lowest probe");
    kern_cmd->add_option("--omega-max", window.omega_max, "highest probe");
    kern_cmd->add_option("--omega-count", window.count, "number of probes");

    CLI::App* node_cmd = app.add_subcommand("nodes", "quadrature rule dump");
    node_opts.attach(node_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return (code == 0) ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed()) {
            const auto cfg = eval_opts.resolve();
            return with_output(cfg, [&](std::ostream& os) { diffrep::bench::run_eval(cfg, os); });
        }
        if (conv_cmd->parsed()) {
            const auto cfg = conv_opts.resolve();
            return with_output(cfg,
                               [&](std::ostream& os) { diffrep::bench::run_convergence(cfg, os); });
        }
        if (kern_cmd->parsed()) {
            const auto cfg = kern_opts.resolve();
            return with_output(cfg, [&](std::ostream& os) {
                diffrep::bench::run_kernel(cfg, window, os);
            });
        }
        if (node_cmd->parsed()) {
            const auto cfg = node_opts.resolve();
            return with_output(cfg,
                               [&](std::ostream& os) { diffrep::bench::run_nodes(cfg, os); });
        }
    } catch (const diffrep::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
