#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "diffrep/engine.hpp"

namespace diffrep::bench {

/// One experiment description, filled from CLI flags and/or a JSON config
/// file (flags win).
struct ExperimentConfig {
    double alpha = 0.5;
    std::string transform = "exp";
    double sigma = 1.0;
    double rho = 1.0;
    std::string f_tag = "const";
    double a = 0.0;
    double b = 1.0;
    std::vector<int> n_list{4096};
    std::vector<int> m_list{40};
    std::string stepper = "trap";
    double tol = 1e-9;
    std::string output_path; // empty -> stdout
};

/// Probe window for the kernel dump.
struct KernelWindow {
    double t = 1.0;
    double omega_min = -12.0;
    double omega_max = 12.0;
    int count = 49;
};

/// Reads a JSON config. Recognized keys: alpha, transform, sigma, rho, f,
/// a, b, n, m, stepper, tol, out (n and m accept a number or an array).
/// Unknown keys are rejected.
ExperimentConfig config_from_json_file(const std::string& path);

/// Shortest round-trip decimal form; integral values keep a trailing ".0"
/// so every numeric field reads back as a float.
std::string format_double(double v);

/// Shared validation: order, transform, source, interval, lists, stepper,
/// tol. Throws ValidationError subclasses.
void validate_common(const ExperimentConfig& cfg);

/// `t,value` lines over a uniform grid on (a, b]. Needs single n and m.
void run_eval(const ExperimentConfig& cfg, std::ostream& os);

/// Grid-refinement study: `N,M,stepper,max_rel_error,eoc,runtime_ns` rows,
/// one per (m, n) pair in config order. The error is measured at the end of
/// the horizon against the power closed form when f is const/poly and
/// against the direct oracle otherwise; eoc = log2(err(N/2)/err(N)).
void run_convergence(const ExperimentConfig& cfg, std::ostream& os);

/// `omega,psi,phi_abs` rows for tail-slope plots.
void run_kernel(const ExperimentConfig& cfg, const KernelWindow& window, std::ostream& os);

/// `m,omega,weight,psi,lambda_stiffness` dump of the rule the fast path
/// would use.
void run_nodes(const ExperimentConfig& cfg, std::ostream& os);

} // namespace diffrep::bench
