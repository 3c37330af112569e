// Command-line runner: steady-state evaluation, parameter sweeps, time
// evolution, continuum-limit checks, contextuality scans, and a seeded
// invariant suite. Output is CSV with a commented header echoing the config.
//
// Exit codes: 0 success, 1 invariant failure, 2 config error, 3 numerical
// failure.
#include <CLI11.hpp>

#include "rotor/continuum.hpp"
#include "rotor/currents.hpp"
#include "rotor/linalg.hpp"
#include "rotor/master.hpp"
#include "rotor/model.hpp"
#include "rotor/observables.hpp"
#include "rotor/steady_state.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace rotor;

constexpr const char* kVersion = "1.0";

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepSpec {
    std::string variable;
    double start = 0.0;
    double stop = 0.0;
    int points = 0;
};

struct ScenarioConfig {
    RotorParams rotor;
    BathParams bath;
    std::string me = "global";
    std::string initial = "mixed";
    std::string outputs = "steady";
    std::optional<double> gap_tol;
    std::optional<SweepSpec> sweep;
    std::optional<double> temp_b_ratio;  // locks temp_b to ratio * temp_a in sweeps
    // evolve
    double t_final = 100.0;
    double dt = 0.01;
    int stride = 100;
    // continuum-check
    std::vector<int> n_list{11, 31, 101, 301};
    double ell = 1.0;
    double mass = 1.0;

    std::map<std::string, std::string> raw;  // echoed verbatim in the header
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, const std::string& key) {
    try {
        size_t used = 0;
        const double out = std::stod(value, &used);
        if (used != value.size() || !std::isfinite(out)) {
            throw std::invalid_argument(value);
        }
        return out;
    } catch (const std::exception&) {
        throw ConfigError("invalid number for '" + key + "': " + value);
    }
}

SweepSpec parse_sweep(const std::string& value) {
    std::istringstream is(value);
    SweepSpec spec;
    if (!(is >> spec.variable >> spec.start >> spec.stop >> spec.points)) {
        throw ConfigError("sweep expects '<variable> <start> <stop> <points>'");
    }
    std::string rest;
    if (is >> rest) {
        throw ConfigError("trailing tokens in sweep spec: " + rest);
    }
    if (spec.points < 2) {
        throw ConfigError("sweep needs at least 2 points");
    }
    if (!std::isfinite(spec.start) || !std::isfinite(spec.stop)) {
        throw ConfigError("sweep bounds must be finite");
    }
    static const std::vector<std::string> kVars{"tau", "phase", "coupling", "temp_a",
                                               "temp_b"};
    if (std::find(kVars.begin(), kVars.end(), spec.variable) == kVars.end()) {
        throw ConfigError("unknown sweep variable: " + spec.variable);
    }
    return spec;
}

std::vector<int> parse_int_list(const std::string& value) {
    std::vector<int> out;
    std::istringstream is(value);
    std::string token;
    while (std::getline(is, token, ',')) {
        token = trim(token);
        if (token.empty()) {
            continue;
        }
        try {
            out.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw ConfigError("invalid integer in list: " + token);
        }
    }
    if (out.empty()) {
        throw ConfigError("empty integer list");
    }
    return out;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    ScenarioConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') {
            continue;
        }
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
        }
        cfg.raw[key] = value;
        if (key == "tau") {
            cfg.rotor.tau = parse_double(value, key);
        } else if (key == "coupling") {
            cfg.rotor.coupling = parse_double(value, key);
        } else if (key == "phase") {
            cfg.rotor.phase = parse_double(value, key);
        } else if (key == "temp_a") {
            cfg.bath.temp_a = parse_double(value, key);
        } else if (key == "temp_b") {
            cfg.bath.temp_b = parse_double(value, key);
        } else if (key == "g_a") {
            cfg.bath.g_a = parse_double(value, key);
        } else if (key == "g_b") {
            cfg.bath.g_b = parse_double(value, key);
        } else if (key == "me") {
            if (value != "global" && value != "local" && value != "classical") {
                throw ConfigError("me must be global, local, or classical");
            }
            cfg.me = value;
        } else if (key == "initial") {
            cfg.initial = value;
        } else if (key == "outputs") {
            if (value != "steady" && value != "entanglement") {
                throw ConfigError("outputs must be steady or entanglement");
            }
            cfg.outputs = value;
        } else if (key == "temp_b_ratio") {
            cfg.temp_b_ratio = parse_double(value, key);
        } else if (key == "gap_tol") {
            cfg.gap_tol = parse_double(value, key);
        } else if (key == "sweep") {
            cfg.sweep = parse_sweep(value);
        } else if (key == "t_final") {
            cfg.t_final = parse_double(value, key);
        } else if (key == "dt") {
            cfg.dt = parse_double(value, key);
        } else if (key == "stride") {
            cfg.stride = static_cast<int>(parse_double(value, key));
        } else if (key == "n_list") {
            cfg.n_list = parse_int_list(value);
        } else if (key == "ell") {
            cfg.ell = parse_double(value, key);
        } else if (key == "mass") {
            cfg.mass = parse_double(value, key);
        } else {
            throw ConfigError("unknown config key: " + key);
        }
    }
    if (cfg.bath.temp_a <= 0.0 || cfg.bath.temp_b <= 0.0 || cfg.bath.g_a <= 0.0 ||
        cfg.bath.g_b <= 0.0) {
        throw ConfigError("bath parameters must be positive");
    }
    if (cfg.temp_b_ratio) {
        if (*cfg.temp_b_ratio <= 0.0) {
            throw ConfigError("temp_b_ratio must be positive");
        }
        if (!cfg.sweep || cfg.sweep->variable != "temp_a") {
            throw ConfigError("temp_b_ratio requires a sweep over temp_a");
        }
    }
    if (cfg.outputs == "entanglement" && cfg.me != "global") {
        throw ConfigError("outputs = entanglement requires me = global");
    }
    return cfg;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void write_header(std::ostream& os, const std::string& subcommand,
                  const ScenarioConfig& cfg, long seed) {
    os << "# rotor_cli " << subcommand << " (version " << kVersion << ")\n";
    os << "# seed = " << seed << "\n";
    for (const auto& [key, value] : cfg.raw) {
        os << "# " << key << " = " << value << "\n";
    }
}

Generator make_generator(const ScenarioConfig& cfg, const RotorParams& p) {
    if (cfg.me == "local") {
        return build_local(p, cfg.bath);
    }
    if (cfg.me == "classical") {
        return embed_classical(build_classical(p, cfg.bath));
    }
    const double tol = cfg.gap_tol ? *cfg.gap_tol : (p.tau < 0.005 ? 1e-6 : 1e-8);
    return build_global(p, cfg.bath, tol);
}

// Returns the initial state named by the config; sector states are resolved
// against the basis when one is available.
Matrix initial_state(const ScenarioConfig& cfg, const Generator& gen,
                     const SteadyStateBasis* basis) {
    const std::string& spec = cfg.initial;
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "mixed") {
        return Matrix::Identity(9, 9) / 9.0;
    }
    if (kind == "thermal") {
        const double t = arg.empty() ? cfg.bath.temp_b : parse_double(arg, "initial");
        const Matrix h = gen.hamiltonian.cwiseAbs().maxCoeff() > 0.0
                             ? gen.hamiltonian
                             : rotor_hamiltonian(cfg.rotor);
        return thermal_state(h, t).mat();
    }
    if (kind == "coherent" || kind == "coherent-conj") {
        const double delta = arg.empty() ? 0.0 : parse_double(arg, "initial");
        const CoherentInputFamily in = coherent_inputs(delta);
        const Matrix sa = kind == "coherent" ? in.sigma_a.mat()
                                             : Matrix(in.sigma_a.mat().conjugate());
        return kron(sa, in.sigma_b.mat());
    }
    if (kind == "sector") {
        if (basis == nullptr) {
            throw ConfigError("initial = sector:k requires me = global");
        }
        const int k = static_cast<int>(parse_double(arg, "initial"));
        if (k < 1 || k > 3) {
            throw ConfigError("sector index must be 1, 2, or 3");
        }
        return basis->states[static_cast<size_t>(k - 1)].mat();
    }
    throw ConfigError("unknown initial state spec: " + spec);
}

RotorParams with_sweep_value(const ScenarioConfig& cfg, double value,
                             BathParams* bath) {
    RotorParams p = cfg.rotor;
    *bath = cfg.bath;
    if (!cfg.sweep) {
        return p;
    }
    const std::string& var = cfg.sweep->variable;
    if (var == "tau") {
        p.tau = value;
    } else if (var == "phase") {
        p.phase = value;
    } else if (var == "coupling") {
        p.coupling = value;
    } else if (var == "temp_a") {
        bath->temp_a = value;
        if (cfg.temp_b_ratio) {
            bath->temp_b = *cfg.temp_b_ratio * value;
        }
    } else if (var == "temp_b") {
        bath->temp_b = value;
    }
    return p;
}

std::string steady_row(const ScenarioConfig& cfg, const RotorParams& p,
                       const BathParams& bath, double sweep_value) {
    ScenarioConfig point = cfg;
    point.rotor = p;
    point.bath = bath;
    const Generator gen = make_generator(point, p);

    int kernel_dim = 0;
    Matrix steady;
    std::string flag = "ok";
    if (cfg.me == "global") {
        const SteadyStateBasis basis = solve_basis(gen);
        kernel_dim = basis.kernel_dim;
        const Matrix rho0 = initial_state(point, gen, &basis);
        if (cfg.initial.rfind("sector", 0) == 0) {
            steady = rho0;  // already a steady state
            if (kernel_dim != 3) {
                flag = "degenerate";
            }
        } else if (kernel_dim == 3) {
            steady = asymptotic_state(basis, rho0).mat();
        } else {
            // the three-sector mixture no longer spans the steady manifold;
            // fall back to the spectral projector and flag the row
            steady = asymptotic_state_dynamic(gen, rho0).mat();
            flag = "degenerate";
        }
    } else {
        const auto kernel = kernel_basis(superoperator_matrix(gen), 1e-9);
        kernel_dim = static_cast<int>(kernel.size());
        if (kernel_dim != 1) {
            throw std::runtime_error("expected a unique steady state");
        }
        Matrix st = unvec(kernel.front(), 9);
        steady = hermitize(st / st.trace());
        (void)initial_state(point, gen, nullptr);  // validate the spec
    }

    const CurrentAverages cur_a =
        average_current(current_operators(gen, Edge{Particle::A, 1, 2}), steady);
    const CurrentAverages cur_b =
        average_current(current_operators(gen, Edge{Particle::B, 1, 2}), steady);
    const double q_a = heat_flux(gen, steady, Particle::A);
    const double q_b = heat_flux(gen, steady, Particle::B);
    const ContextualityResult ctx = contextuality_witness(gen, steady, Particle::A);

    std::ostringstream os;
    os << num(sweep_value) << ',' << kernel_dim << ',' << flag << ','
       << num(cur_a.tunneling) << ',' << num(cur_a.thermal) << ',' << num(cur_a.total)
       << ',' << num(cur_b.tunneling) << ',' << num(cur_b.thermal) << ','
       << num(cur_b.total) << ',' << num(q_a) << ',' << num(q_b) << ','
       << num(negativity(steady)) << ',' << num(ergotropy(steady, gen.hamiltonian))
       << ',' << num(ctx.min_mh) << ',' << (ctx.is_contextual ? 1 : 0);
    return os.str();
}

const char* kSteadyColumns =
    "value,kernel_dim,flag,j_tun_a,j_th_a,j_tot_a,j_tun_b,j_th_b,j_tot_b,"
    "qdot_a,qdot_b,negativity,ergotropy,min_mh_a,contextual_a";

const char* kEntanglementColumns = "value,delta_max,negativity_at_half_delta";

// Largest admissible input noise delta and the steady negativity reached from
// the half-noise coherent product input.
std::string entanglement_row(const ScenarioConfig& cfg, const RotorParams& p,
                             const BathParams& bath, double sweep_value) {
    const double dm = delta_max(p, bath);
    ScenarioConfig point = cfg;
    point.rotor = p;
    point.bath = bath;
    const Generator gen = make_generator(point, p);
    const CoherentInputFamily in = coherent_inputs(0.5 * dm);
    const Matrix rho0 = kron(in.sigma_a.mat(), in.sigma_b.mat());
    const double neg = negativity(asymptotic_state_dynamic(gen, rho0).mat());
    std::ostringstream os;
    os << num(sweep_value) << ',' << num(dm) << ',' << num(neg);
    return os.str();
}

// Evaluates one row per sweep point on `jobs` workers; row order is fixed by
// the point index regardless of scheduling.
std::vector<std::string> run_sweep(const ScenarioConfig& cfg, int jobs) {
    if (!cfg.sweep) {
        throw ConfigError("sweep subcommand requires a 'sweep' config entry");
    }
    const SweepSpec& spec = *cfg.sweep;
    std::vector<std::string> rows(static_cast<size_t>(spec.points));
    std::vector<std::string> errors(static_cast<size_t>(spec.points));
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int i = next.fetch_add(1); i < spec.points; i = next.fetch_add(1)) {
            const double value =
                spec.start + (spec.stop - spec.start) * i / (spec.points - 1);
            BathParams bath;
            const RotorParams p = with_sweep_value(cfg, value, &bath);
            try {
                rows[static_cast<size_t>(i)] =
                    cfg.outputs == "entanglement"
                        ? entanglement_row(cfg, p, bath, value)
                        : steady_row(cfg, p, bath, value);
            } catch (const std::exception& e) {
                errors[static_cast<size_t>(i)] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    const int n_threads = std::max(1, jobs);
    for (int t = 1; t < n_threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    for (const auto& err : errors) {
        if (!err.empty()) {
            throw std::runtime_error(err);
        }
    }
    return rows;
}

int cmd_steady(const ScenarioConfig& cfg, std::ostream& os, long seed) {
    write_header(os, "steady", cfg, seed);
    os << kSteadyColumns << "\n";
    BathParams bath = cfg.bath;
    os << steady_row(cfg, cfg.rotor, bath, 0.0) << "\n";
    return 0;
}

int cmd_sweep(const ScenarioConfig& cfg, std::ostream& os, long seed, int jobs) {
    const std::vector<std::string> rows = run_sweep(cfg, jobs);
    write_header(os, "sweep", cfg, seed);
    os << (cfg.outputs == "entanglement" ? kEntanglementColumns : kSteadyColumns)
       << "\n";
    for (const auto& row : rows) {
        os << row << "\n";
    }
    return 0;
}

int cmd_evolve(const ScenarioConfig& cfg, std::ostream& os, long seed) {
    if (cfg.dt <= 0.0 || cfg.t_final <= 0.0 || cfg.stride < 1) {
        throw ConfigError("evolve requires positive dt, t_final, and stride");
    }
    const Generator gen = make_generator(cfg, cfg.rotor);
    Matrix rho = initial_state(cfg, gen, nullptr);
    const GeneratorFn lindbladian = [&gen](const Matrix& m) { return apply(gen, m); };
    const CurrentOperators ops_a = current_operators(gen, Edge{Particle::A, 1, 2});
    const CurrentOperators ops_b = current_operators(gen, Edge{Particle::B, 1, 2});

    write_header(os, "evolve", cfg, seed);
    os << "t,energy,j_tot_a,j_tot_b,negativity,ergotropy\n";
    const int steps = static_cast<int>(std::lround(cfg.t_final / cfg.dt));
    for (int s = 0; s <= steps; ++s) {
        if (s % cfg.stride == 0 || s == steps) {
            os << num(s * cfg.dt) << ',' << num((gen.hamiltonian * rho).trace().real())
               << ',' << num(average_current(ops_a, rho).total) << ','
               << num(average_current(ops_b, rho).total) << ',' << num(negativity(rho))
               << ',' << num(ergotropy(rho, gen.hamiltonian)) << "\n";
        }
        if (s < steps) {
            rho = rk4_step(rho, lindbladian, cfg.dt);
        }
    }
    return 0;
}

int cmd_continuum(const ScenarioConfig& cfg, std::ostream& os, long seed) {
    write_header(os, "continuum-check", cfg, seed);
    os << "n,assembled_error,riemann_error_k1\n";
    for (int n : cfg.n_list) {
        if (n < 1) {
            throw ConfigError("n_list entries must be positive");
        }
        ContinuumParams p;
        p.half_width = n;
        p.ell = cfg.ell;
        p.mass = cfg.mass;
        const double err =
            (assembled_current(p, 0) - schroedinger_current(p, 0)).cwiseAbs().maxCoeff();
        const double target = -1.0 / (2.0 * M_PI * M_PI);
        const double riemann = std::abs(riemann_kernel_sum(n, 1) - target);
        os << n << ',' << num(err) << ',' << num(riemann) << "\n";
    }
    return 0;
}

int cmd_contextuality(const ScenarioConfig& cfg, std::ostream& os, long seed,
                      int jobs) {
    ScenarioConfig scan = cfg;
    scan.outputs = "steady";
    if (!scan.sweep) {
        scan.sweep = SweepSpec{"tau", 0.01, 0.45, 45};
    } else if (scan.sweep->variable != "tau") {
        throw ConfigError("contextuality-scan sweeps tau only");
    }
    const std::vector<std::string> rows = run_sweep(scan, jobs);
    write_header(os, "contextuality-scan", cfg, seed);
    os << kSteadyColumns << "\n";
    for (const auto& row : rows) {
        os << row << "\n";
    }
    return 0;
}

struct InvariantReport {
    int failures = 0;

    void check(std::ostream& os, const std::string& name, double residual,
               double tol) {
        const bool ok = residual < tol;
        os << (ok ? "ok   " : "FAIL ") << name << " residual=" << num(residual)
           << " tol=" << num(tol) << "\n";
        if (!ok) {
            ++failures;
        }
    }
};

Matrix random_density_9(std::mt19937& rng) {
    std::normal_distribution<double> nd;
    Matrix g(9, 9);
    for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 9; ++j) {
            g(i, j) = Complex(nd(rng), nd(rng));
        }
    }
    Matrix rho = g * g.adjoint();
    return hermitize(rho / rho.trace().real());
}

int cmd_invariants(const ScenarioConfig& cfg, std::ostream& os, long seed) {
    write_header(os, "invariants", cfg, seed);
    std::mt19937 rng(static_cast<unsigned>(seed));
    InvariantReport report;

    std::uniform_real_distribution<double> omega_d(0.1, 3.0);
    std::uniform_real_distribution<double> beta_d(0.2, 5.0);
    double balance = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double omega = omega_d(rng);
        const double beta = beta_d(rng);
        const double ratio = bath_rate(-omega, beta, 1.0) / bath_rate(omega, beta, 1.0);
        balance = std::max(balance, std::abs(ratio - std::exp(-beta * omega)));
    }
    report.check(os, "bath-rate detailed balance", balance, 1e-12);

    const Generator gen = make_generator(cfg, cfg.rotor);
    double trace_drift = 0.0;
    double herm_drift = 0.0;
    double duality = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix rho = random_density_9(rng);
        const Matrix lrho = apply(gen, rho);
        trace_drift = std::max(trace_drift, std::abs(lrho.trace()));
        herm_drift = std::max(herm_drift, (lrho - lrho.adjoint()).cwiseAbs().maxCoeff());
        const Matrix x = hermitize(random_density_9(rng));
        duality = std::max(duality, std::abs((x * lrho).trace() -
                                             (apply_adjoint(gen, x) * rho).trace()));
    }
    report.check(os, "trace preservation", trace_drift, 1e-12);
    report.check(os, "Hermiticity preservation", herm_drift, 1e-12);
    report.check(os, "adjoint duality", duality, 1e-12);

    double continuity = 0.0;
    for (Particle particle : {Particle::A, Particle::B}) {
        for (int j = 1; j <= 3; ++j) {
            const SiteProjector xj = site_projector(particle, j);
            Matrix inflow = Matrix::Zero(9, 9);
            for (int j2 = 1; j2 <= 3; ++j2) {
                if (j2 != j) {
                    inflow += current_op_general(gen, site_projector(particle, j2), xj);
                }
            }
            continuity = std::max(
                continuity,
                (apply_adjoint(gen, xj.matrix) - inflow).cwiseAbs().maxCoeff());
        }
    }
    report.check(os, "operator continuity", continuity, 1e-11);

    if (cfg.me == "global") {
        const double t = cfg.bath.temp_a;
        const Generator eq_gen =
            build_global(cfg.rotor, BathParams{t, t, cfg.bath.g_a, cfg.bath.g_b},
                         cfg.gap_tol ? *cfg.gap_tol : 1e-8);
        const Matrix rho_th = thermal_state(eq_gen.hamiltonian, t).mat();
        report.check(os, "thermal stationarity at equal temperatures",
                     apply(eq_gen, rho_th).cwiseAbs().maxCoeff(), 1e-9);

        const SteadyStateBasis basis = solve_basis(gen);
        const CurrentAverages a1 = average_current(
            current_operators(gen, Edge{Particle::A, 1, 2}), basis.states[0].mat());
        const CurrentAverages a2 = average_current(
            current_operators(gen, Edge{Particle::A, 1, 2}), basis.states[1].mat());
        const CurrentAverages a3 = average_current(
            current_operators(gen, Edge{Particle::A, 1, 2}), basis.states[2].mat());
        report.check(os, "opposite sector tunneling currents",
                     std::abs(a1.tunneling + a2.tunneling), 1e-9);
        report.check(os, "equal sector thermal currents",
                     std::abs(a1.thermal - a2.thermal), 1e-9);
        report.check(os, "third-sector current vanishes", std::abs(a3.total), 1e-9);

        double lambda_residual = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const Matrix rho0 = random_density_9(rng);
            const WeightDecomposition w = weights(rho0);
            for (int k = 1; k <= 3; ++k) {
                const Complex phase = std::exp(Complex(0.0, -2.0 * M_PI * k / 3.0));
                const double formula =
                    1.0 / 3.0 + 2.0 / 3.0 * (phase * w.theta0).real();
                lambda_residual =
                    std::max(lambda_residual,
                             std::abs(w.lambda[static_cast<size_t>(k - 1)] - formula));
            }
        }
        report.check(os, "sector weight closed form", lambda_residual, 1e-12);
    }

    os << (report.failures == 0 ? "all invariants passed\n"
                                : std::to_string(report.failures) +
                                      " invariant(s) failed\n");
    return report.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-qutrit dissipative rotor toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // accept --config etc. after the subcommand name

    std::string config_path;
    std::string out_path;
    long seed = 0;
    int jobs = 1;
    app.add_option("--config", config_path, "path to a key = value config file");
    app.add_option("--out", out_path, "output CSV path (default: stdout)");
    app.add_option("--seed", seed, "seed for randomized invariants");
    app.add_option("--jobs", jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);

    auto* steady = app.add_subcommand("steady", "steady state at fixed parameters");
    auto* sweep = app.add_subcommand("sweep", "steady-state sweep over one parameter");
    auto* evolve = app.add_subcommand("evolve", "time evolution from an initial state");
    auto* continuum =
        app.add_subcommand("continuum-check", "assembled-current error ladder");
    auto* contextuality =
        app.add_subcommand("contextuality-scan", "Margenau-Hill scan over tau");
    auto* invariants = app.add_subcommand("invariants", "seeded invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ScenarioConfig cfg;
        if (!config_path.empty()) {
            cfg = load_config(config_path);
        } else if (!invariants->parsed()) {
            throw ConfigError("--config is required for this subcommand");
        }

        std::ostringstream buffer;
        int code = 0;
        if (steady->parsed()) {
            code = cmd_steady(cfg, buffer, seed);
        } else if (sweep->parsed()) {
            code = cmd_sweep(cfg, buffer, seed, jobs);
        } else if (evolve->parsed()) {
            code = cmd_evolve(cfg, buffer, seed);
        } else if (continuum->parsed()) {
            code = cmd_continuum(cfg, buffer, seed);
        } else if (contextuality->parsed()) {
            code = cmd_contextuality(cfg, buffer, seed, jobs);
        } else if (invariants->parsed()) {
            code = cmd_invariants(cfg, buffer, seed);
        }

        if (out_path.empty()) {
            std::cout << buffer.str();
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) {
                throw ConfigError("cannot open output file: " + out_path);
            }
            out << buffer.str();
        }
        return code;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}
