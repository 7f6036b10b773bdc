#include "diffrep/bench.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>

#include <json.hpp>

namespace diffrep::bench {

namespace {

Transform make_transform(const ExperimentConfig& cfg) {
    return transform_from_name(cfg.transform, cfg.alpha, cfg.sigma, cfg.rho);
}

Stepper parse_stepper(const std::string& name) {
    if (name == "be") return Stepper::BackwardEuler;
    if (name == "trap") return Stepper::Trapezoidal;
    throw ConfigError("stepper must be 'be' or 'trap', got '" + name + "'");
}

void require_increasing(const std::vector<int>& xs, const std::string& what) {
    if (xs.empty()) {
        throw ConfigError(what + " list must be nonempty");
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 1) throw ConfigError(what + " entries must be >= 1");
        if (i > 0 && xs[i] <= xs[i - 1]) {
            throw ConfigError(what + " list must be strictly increasing");
        }
    }
}

// Closed-form oracle when available (const / poly), direct quadrature
// otherwise.
double oracle_value(const ExperimentConfig& cfg, const FractionalOrder& order,
                    const SourceFunction& f, double t) {
    if (cfg.f_tag == "const") {
        return rl_power_closed_form(order, 0.0, cfg.a, t);
    }
    if (cfg.f_tag == "zero") {
        return 0.0;
    }
    if (cfg.f_tag.rfind("poly:", 0) == 0) {
        const double beta = std::stod(cfg.f_tag.substr(5));
        return rl_power_closed_form(order, beta, cfg.a, t);
    }
    return rl_direct(order, f, cfg.a, t, std::min(cfg.tol, 1e-9));
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, res.ptr);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
        s += ".0";
    }
    return s;
}

ExperimentConfig config_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("malformed config file: " + std::string(e.what()));
    }
    if (!j.is_object()) {
        throw ConfigError("config file must hold a JSON object");
    }

    ExperimentConfig cfg;
    auto int_list = [](const nlohmann::json& v, const char* key) {
        std::vector<int> out;
        if (v.is_number()) {
            out.push_back(v.get<int>());
        } else if (v.is_array()) {
            for (const auto& x : v) out.push_back(x.get<int>());
        } else {
            throw ConfigError(std::string(key) + " must be a number or array");
        }
        return out;
    };
    for (const auto& [key, value] : j.items()) {
        if (key == "alpha") cfg.alpha = value.get<double>();
        else if (key == "transform") cfg.transform = value.get<std::string>();
        else if (key == "sigma") cfg.sigma = value.get<double>();
        else if (key == "rho") cfg.rho = value.get<double>();
        else if (key == "f") cfg.f_tag = value.get<std::string>();
        else if (key == "a") cfg.a = value.get<double>();
        else if (key == "b") cfg.b = value.get<double>();
        else if (key == "n") cfg.n_list = int_list(value, "n");
        else if (key == "m") cfg.m_list = int_list(value, "m");
        else if (key == "stepper") cfg.stepper = value.get<std::string>();
        else if (key == "tol") cfg.tol = value.get<double>();
        else if (key == "out") cfg.output_path = value.get<std::string>();
        else throw ConfigError("unknown config key '" + key + "'");
    }
    return cfg;
}

void validate_common(const ExperimentConfig& cfg) {
    make_order(cfg.alpha);                       // throws on bad order
    make_transform(cfg);                         // throws on bad transform
    make_source(cfg.f_tag, cfg.a);               // throws on bad source
    parse_stepper(cfg.stepper);
    if (!(cfg.b > cfg.a)) {
        throw ConfigError("need b > a");
    }
    require_increasing(cfg.n_list, "n");
    require_increasing(cfg.m_list, "m");
    if (!(cfg.tol > 0.0) || cfg.tol > 1e-3) {
        throw ConfigError("tol must be in (0, 1e-3]");
    }
}

void run_eval(const ExperimentConfig& cfg, std::ostream& os) {
    validate_common(cfg);
    if (cfg.n_list.size() != 1 || cfg.m_list.size() != 1) {
        throw ConfigError("eval takes a single n and a single m");
    }
    const FractionalOrder order = make_order(cfg.alpha);
    const Transform transform = make_transform(cfg);
    const SourceFunction f = make_source(cfg.f_tag, cfg.a);
    const TimeGrid grid = TimeGrid::uniform(cfg.a, cfg.b, cfg.n_list[0]);

    const std::vector<double> values =
        evaluate_on_grid(order, transform, f, grid, cfg.m_list[0], parse_stepper(cfg.stepper));

    os << "t,value\n";
    for (std::size_t k = 0; k < values.size(); ++k) {
        os << format_double(grid.points[k]) << ',' << format_double(values[k]) << '\n';
    }
}

void run_convergence(const ExperimentConfig& cfg, std::ostream& os) {
    validate_common(cfg);
    if (cfg.n_list.size() < 3) {
        throw ConfigError("convergence needs at least 3 grid sizes");
    }
    const FractionalOrder order = make_order(cfg.alpha);
    const Transform transform = make_transform(cfg);
    const SourceFunction f = make_source(cfg.f_tag, cfg.a);
    const Stepper stepper = parse_stepper(cfg.stepper);

    os << "N,M,stepper,max_rel_error,eoc,runtime_ns\n";
    for (int m : cfg.m_list) {
        const double reference = oracle_value(cfg, order, f, cfg.b);
        double prev_err = 0.0;
        bool have_prev = false;
        for (int n : cfg.n_list) {
            const TimeGrid grid = TimeGrid::uniform(cfg.a, cfg.b, n);
            const auto start = std::chrono::steady_clock::now();
            const std::vector<double> values =
                evaluate_on_grid(order, transform, f, grid, m, stepper);
            const auto stop = std::chrono::steady_clock::now();
            const auto ns =
                std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();

            const double diff = std::abs(values.back() - reference);
            const double err =
                (std::abs(reference) < 1e-14) ? diff : diff / std::abs(reference);

            std::string eoc;
            if (have_prev) {
                eoc = (prev_err > 0.0 && err > 0.0)
                          ? format_double(std::log2(prev_err / err))
                          : "nan";
            }
            os << n << ',' << m << ',' << cfg.stepper << ',' << format_double(err) << ','
               << eoc << ',' << ns << '\n';
            prev_err = err;
            have_prev = true;
        }
    }
}

void run_kernel(const ExperimentConfig& cfg, const KernelWindow& window, std::ostream& os) {
    validate_common(cfg);
    if (window.count < 1) {
        throw ConfigError("kernel dump needs at least one probe");
    }
    if (!(window.t >= cfg.a && window.t <= cfg.b)) {
        throw ConfigError("kernel dump needs a <= t <= b");
    }
    const FractionalOrder order = make_order(cfg.alpha);
    const Transform transform = make_transform(cfg);
    const SourceFunction f = make_source(cfg.f_tag, cfg.a);

    std::vector<double> omegas;
    omegas.reserve(window.count);
    for (int i = 0; i < window.count; ++i) {
        const double u = (window.count == 1)
                             ? 0.0
                             : static_cast<double>(i) / static_cast<double>(window.count - 1);
        omegas.push_back(window.omega_min + u * (window.omega_max - window.omega_min));
    }
    for (double w : omegas) {
        if (!transform.contains(w)) {
            throw ConfigError("probe omega = " + std::to_string(w) + " outside the domain");
        }
    }

    os << "omega,psi,phi_abs\n";
    if (window.t == cfg.a) {
        // the kernel vanishes identically at the start time
        for (double w : omegas) {
            os << format_double(w) << ',' << format_double(transform.psi(w)) << ",0.0\n";
        }
        return;
    }
    const auto probes = phi_decay_probe(order, transform, f, cfg.a, window.t, omegas);
    for (std::size_t i = 0; i < probes.size(); ++i) {
        os << format_double(omegas[i]) << ',' << format_double(probes[i].first) << ','
           << format_double(probes[i].second) << '\n';
    }
}

void run_nodes(const ExperimentConfig& cfg, std::ostream& os) {
    validate_common(cfg);
    if (cfg.m_list.size() != 1) {
        throw ConfigError("nodes takes a single m");
    }
    const FractionalOrder order = make_order(cfg.alpha);
    const Transform transform = make_transform(cfg);
    const QuadratureRule rule =
        build_diffusive_rule(order, transform, cfg.m_list[0], cfg.b - cfg.a);

    os << "m,omega,weight,psi,lambda_stiffness\n";
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double psi = std::exp(transform.log_psi(rule.nodes[i]));
        os << (i + 1) << ',' << format_double(rule.nodes[i]) << ','
           << format_double(rule.weights[i]) << ',' << format_double(psi) << ','
           << format_double(psi) << '\n';
    }
}

} // namespace diffrep::bench
