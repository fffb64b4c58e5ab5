#include "dicke/run.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "dicke/limit.hpp"
#include "json.hpp"

namespace dicke {

namespace {

using nlohmann::json;

int worker_count() {
    if (const char* env = std::getenv("DICKE_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Index-parallel map; results land at fixed indices, so output order never
// depends on scheduling.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const int workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::ofstream open_output(const RunConfig& config, const std::string& filename) {
    std::filesystem::create_directories(config.out_dir);
    const auto path = std::filesystem::path(config.out_dir) / filename;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    return out;
}

std::string grid_point_label(ModelKind kind, int n_atoms, double beta) {
    std::ostringstream os;
    os << "kind=" << to_string(kind) << " n_atoms=" << n_atoms << " beta=" << format_double(beta);
    return os.str();
}

bool has_kind(const RunConfig& config, ModelKind kind) {
    return std::find(config.kinds.begin(), config.kinds.end(), kind) != config.kinds.end();
}

template <typename Fn>
int run_command(const RunConfig& config, Fn&& body) {
    try {
        config.validate();
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    }
    try {
        body();
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumericError;
    }
    return kExitOk;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "kind,n_atoms,beta,f,u,s,jx2_per_atom2,jz_per_atom,photon_density,cutoff_used\n";
    for (const auto& row : rows) {
        const ThermoPoint& p = row.point;
        out << to_string(row.kind) << ',' << row.n_atoms << ',' << format_double(p.beta) << ','
            << format_double(p.free_energy_per_atom) << ','
            << format_double(p.internal_energy_per_atom) << ','
            << format_double(p.entropy_per_atom) << ',' << format_double(p.jx2_per_atom2) << ','
            << format_double(p.jz_per_atom) << ',';
        if (p.photon_density) out << format_double(*p.photon_density);
        out << ',';
        if (p.cutoff_used) out << *p.cutoff_used;
        out << '\n';
    }
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::vector<double> make_beta_grid(double min, double max, int steps, const std::string& scale) {
    if (steps < 1) throw ConfigError("beta grid: steps must be >= 1");
    if (!(min > 0)) throw ConfigError("beta grid: min must be > 0");
    if (steps == 1) return {min};
    if (!(max > min)) throw ConfigError("beta grid: max must be > min");
    std::vector<double> grid(steps);
    if (scale == "linear") {
        for (int i = 0; i < steps; ++i) {
            grid[i] = min + (max - min) * i / (steps - 1);
        }
    } else if (scale == "log") {
        const double lmin = std::log(min);
        const double lmax = std::log(max);
        for (int i = 0; i < steps; ++i) {
            grid[i] = std::exp(lmin + (lmax - lmin) * i / (steps - 1));
        }
        grid.front() = min;
        grid.back() = max;
    } else {
        throw ConfigError("beta grid: scale must be 'linear' or 'log'");
    }
    return grid;
}

void RunConfig::validate() const {
    if (kinds.empty()) throw ConfigError("kinds must be nonempty");
    if (!(epsilon > 0)) throw ConfigError("epsilon must be > 0");
    if (!(lambda >= 0)) throw ConfigError("lambda must be >= 0");
    if (!(omega > 0)) throw ConfigError("omega must be > 0");
    if (!(tol > 0)) throw ConfigError("tol must be > 0");
    if (atoms.empty()) throw ConfigError("atoms list must be nonempty");
    for (int n : atoms) {
        if (n < 1 || n > 20) throw ConfigError("atom counts must be in [1, 20]");
    }
    if (betas.empty()) throw ConfigError("beta grid must be nonempty");
    for (std::size_t i = 0; i < betas.size(); ++i) {
        if (!(betas[i] > 0)) throw ConfigError("beta grid must be strictly positive");
        if (i > 0 && !(betas[i] > betas[i - 1])) {
            throw ConfigError("beta grid must be strictly increasing");
        }
    }
    for (double e : epsilons) {
        if (!(e > 0)) throw ConfigError("epsilons must be > 0");
    }
    for (double l : lambdas) {
        if (!(l >= 0)) throw ConfigError("lambdas must be >= 0");
    }
    if (format != "csv" && format != "json") throw ConfigError("format must be 'csv' or 'json'");
}

RunConfig load_config(const std::string& path) {
    RunConfig config;
    config.kinds = {ModelKind::Dicke, ModelKind::ExactEffective, ModelKind::ReslenEffective,
                    ModelKind::LibertiZaffino};
    config.atoms = {4, 8, 12};
    config.betas = {0.3, 1.0, 3.0};
    if (path.empty()) return config;

    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse failure: ") + e.what());
    }
    try {
        if (doc.contains("kinds")) {
            config.kinds.clear();
            for (const auto& name : doc.at("kinds")) {
                config.kinds.push_back(model_kind_from_string(name.get<std::string>()));
            }
        }
        if (doc.contains("epsilon")) config.epsilon = doc.at("epsilon").get<double>();
        if (doc.contains("lambda")) config.lambda = doc.at("lambda").get<double>();
        if (doc.contains("omega")) config.omega = doc.at("omega").get<double>();
        if (doc.contains("epsilons")) {
            config.epsilons = doc.at("epsilons").get<std::vector<double>>();
        }
        if (doc.contains("lambdas")) config.lambdas = doc.at("lambdas").get<std::vector<double>>();
        if (doc.contains("atoms")) config.atoms = doc.at("atoms").get<std::vector<int>>();
        if (doc.contains("beta")) {
            const auto& b = doc.at("beta");
            if (b.is_array()) {
                config.betas = b.get<std::vector<double>>();
            } else {
                config.betas = make_beta_grid(b.at("min").get<double>(), b.at("max").get<double>(),
                                              b.at("steps").get<int>(),
                                              b.value("scale", std::string("linear")));
            }
        }
        if (doc.contains("tol")) config.tol = doc.at("tol").get<double>();
        if (doc.contains("out")) config.out_dir = doc.at("out").get<std::string>();
        if (doc.contains("format")) config.format = doc.at("format").get<std::string>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config field error: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return config;
}

void apply_overrides(RunConfig& config, const ConfigOverrides& ov) {
    if (ov.epsilon) config.epsilon = *ov.epsilon;
    if (ov.lambda) config.lambda = *ov.lambda;
    if (ov.omega) config.omega = *ov.omega;
    if (ov.tol) config.tol = *ov.tol;
    if (ov.atoms) config.atoms = *ov.atoms;
    if (ov.beta_min || ov.beta_max || ov.beta_steps || ov.beta_scale) {
        if (!(ov.beta_min && ov.beta_max && ov.beta_steps)) {
            throw ConfigError("--beta-min, --beta-max, --beta-steps must be given together");
        }
        config.betas = make_beta_grid(*ov.beta_min, *ov.beta_max, *ov.beta_steps,
                                      ov.beta_scale.value_or("linear"));
    }
    if (ov.out_dir) config.out_dir = *ov.out_dir;
    if (ov.format) config.format = *ov.format;
}

std::vector<SweepRow> evaluate_sweep(const RunConfig& config) {
    struct GridPoint {
        ModelKind kind;
        int n_atoms;
        double beta;
    };
    std::vector<GridPoint> grid;
    std::vector<ModelKind> kinds = config.kinds;
    std::sort(kinds.begin(), kinds.end());
    kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());
    std::vector<int> atoms = config.atoms;
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    for (ModelKind kind : kinds) {
        for (int n : atoms) {
            for (double beta : config.betas) grid.push_back({kind, n, beta});
        }
    }

    std::vector<SweepRow> rows(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const auto& gp = grid[i];
        ModelParams params{config.epsilon, config.lambda, config.omega, gp.n_atoms};
        try {
            rows[i] = SweepRow{gp.kind, gp.n_atoms,
                               thermo_point(params, gp.kind, gp.beta, config.tol)};
        } catch (const std::exception& e) {
            throw NumericError("at " + grid_point_label(gp.kind, gp.n_atoms, gp.beta) + ": " +
                               e.what());
        }
    });
    return rows;
}

std::string sweep_rows_to_json(const std::vector<SweepRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        const ThermoPoint& p = row.point;
        json obj{{"kind", to_string(row.kind)},
                 {"n_atoms", row.n_atoms},
                 {"beta", p.beta},
                 {"f", p.free_energy_per_atom},
                 {"u", p.internal_energy_per_atom},
                 {"s", p.entropy_per_atom},
                 {"jx2_per_atom2", p.jx2_per_atom2},
                 {"jz_per_atom", p.jz_per_atom}};
        if (p.photon_density) obj["photon_density"] = *p.photon_density;
        if (p.cutoff_used) obj["cutoff_used"] = *p.cutoff_used;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::vector<SweepRow> sweep_rows_from_json(const std::string& text) {
    const json arr = json::parse(text);
    std::vector<SweepRow> rows;
    for (const auto& obj : arr) {
        SweepRow row;
        row.kind = model_kind_from_string(obj.at("kind").get<std::string>());
        row.n_atoms = obj.at("n_atoms").get<int>();
        ThermoPoint& p = row.point;
        p.beta = obj.at("beta").get<double>();
        p.free_energy_per_atom = obj.at("f").get<double>();
        p.internal_energy_per_atom = obj.at("u").get<double>();
        p.entropy_per_atom = obj.at("s").get<double>();
        p.jx2_per_atom2 = obj.at("jx2_per_atom2").get<double>();
        p.jz_per_atom = obj.at("jz_per_atom").get<double>();
        if (obj.contains("photon_density")) {
            p.photon_density = obj.at("photon_density").get<double>();
        }
        if (obj.contains("cutoff_used")) p.cutoff_used = obj.at("cutoff_used").get<int>();
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_sweep(const RunConfig& config) {
    return run_command(config, [&] {
        const auto rows = evaluate_sweep(config);
        if (config.format == "json") {
            auto out = open_output(config, "sweep.json");
            out << sweep_rows_to_json(rows);
        } else {
            auto out = open_output(config, "sweep.csv");
            write_sweep_csv(out, rows);
        }
    });
}

int cmd_tc(const RunConfig& config) {
    return run_command(config, [&] {
        if (has_kind(config, ModelKind::Dicke)) {
            throw ConfigError("tc: kinds must exclude Dicke (no gap equation)");
        }
        const std::vector<double> epsilons =
            config.epsilons.empty() ? std::vector<double>{config.epsilon} : config.epsilons;
        const std::vector<double> lambdas =
            config.lambdas.empty() ? std::vector<double>{config.lambda} : config.lambdas;

        std::vector<ModelKind> kinds = config.kinds;
        std::sort(kinds.begin(), kinds.end());
        kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());

        auto out = open_output(config, "tc.csv");
        out << "kind,epsilon,lambda,beta_c,t_c,exists\n";
        for (ModelKind kind : kinds) {
            for (double eps : epsilons) {
                for (double lam : lambdas) {
                    const GapSolution sol = critical_beta(kind, eps, lam);
                    out << to_string(kind) << ',' << format_double(eps) << ','
                        << format_double(lam) << ',';
                    if (sol.beta_c) {
                        out << format_double(*sol.beta_c) << ','
                            << format_double(1.0 / *sol.beta_c) << ",true\n";
                    } else {
                        out << ",,false\n";
                    }
                }
            }
        }
    });
}

int cmd_compare(const RunConfig& config) {
    return run_command(config, [&] {
        if (!has_kind(config, ModelKind::Dicke)) {
            throw ConfigError("compare: kinds must include Dicke");
        }
        std::vector<int> atoms = config.atoms;
        std::sort(atoms.begin(), atoms.end());
        atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
        const int n_max = atoms.back();

        struct CompareRow {
            double f_dicke, f_exact, f_reslen, f_lz, f_limit;
        };
        std::vector<CompareRow> rows(config.betas.size());
        parallel_for(config.betas.size(), [&](std::size_t i) {
            const double beta = config.betas[i];
            ModelParams params{config.epsilon, config.lambda, config.omega, n_max};
            try {
                const int cutoff = adaptive_cutoff(params, beta, config.tol);
                rows[i].f_dicke = free_energy_per_atom(params, ModelKind::Dicke, beta, cutoff);
                rows[i].f_exact = free_energy_per_atom(params, ModelKind::ExactEffective, beta);
                rows[i].f_reslen = free_energy_per_atom(params, ModelKind::ReslenEffective, beta);
                rows[i].f_lz = free_energy_per_atom(params, ModelKind::LibertiZaffino, beta);
                rows[i].f_limit = limit_free_energy(ModelKind::ExactEffective, beta,
                                                    config.epsilon, config.lambda)
                                      .free_energy;
            } catch (const std::exception& e) {
                throw NumericError("at " + grid_point_label(ModelKind::Dicke, n_max, beta) +
                                   ": " + e.what());
            }
        });

        auto out = open_output(config, "compare.csv");
        out << "beta,f_dicke,f_exact,f_reslen,f_lz,f_limit_exact,"
               "d_dicke_exact,d_reslen_exact,d_lz_exact\n";
        for (std::size_t i = 0; i < config.betas.size(); ++i) {
            const auto& r = rows[i];
            out << format_double(config.betas[i]) << ',' << format_double(r.f_dicke) << ','
                << format_double(r.f_exact) << ',' << format_double(r.f_reslen) << ','
                << format_double(r.f_lz) << ',' << format_double(r.f_limit) << ','
                << format_double(std::abs(r.f_dicke - r.f_exact)) << ','
                << format_double(std::abs(r.f_reslen - r.f_exact)) << ','
                << format_double(std::abs(r.f_lz - r.f_exact)) << '\n';
        }

        struct ConvPoint {
            int n_atoms;
            double beta;
            double delta;
        };
        std::vector<ConvPoint> conv;
        for (int n : atoms) {
            for (double beta : config.betas) conv.push_back({n, beta, 0.0});
        }
        parallel_for(conv.size(), [&](std::size_t i) {
            auto& cp = conv[i];
            ModelParams params{config.epsilon, config.lambda, config.omega, cp.n_atoms};
            try {
                const int cutoff = adaptive_cutoff(params, cp.beta, config.tol);
                const double fd = free_energy_per_atom(params, ModelKind::Dicke, cp.beta, cutoff);
                const double fe =
                    free_energy_per_atom(params, ModelKind::ExactEffective, cp.beta);
                cp.delta = std::abs(fd - fe);
            } catch (const std::exception& e) {
                throw NumericError("at " +
                                   grid_point_label(ModelKind::Dicke, cp.n_atoms, cp.beta) +
                                   ": " + e.what());
            }
        });
        auto cout_file = open_output(config, "convergence.csv");
        cout_file << "n_atoms,beta,delta_dicke_exact\n";
        for (const auto& cp : conv) {
            cout_file << cp.n_atoms << ',' << format_double(cp.beta) << ','
                      << format_double(cp.delta) << '\n';
        }
    });
}

int cmd_converge(const RunConfig& config) {
    return run_command(config, [&] {
        if (!has_kind(config, ModelKind::Dicke)) {
            throw ConfigError("converge: kinds must include Dicke");
        }
        const int n = *std::max_element(config.atoms.begin(), config.atoms.end());
        ModelParams params{config.epsilon, config.lambda, config.omega, n};

        auto out = open_output(config, "converge.csv");
        out << "beta,cutoff,f\n";
        for (double beta : config.betas) {
            int converged = -1;
            try {
                converged = adaptive_cutoff(params, beta, config.tol);
            } catch (const std::exception& e) {
                throw NumericError("at " + grid_point_label(ModelKind::Dicke, n, beta) + ": " +
                                   e.what());
            }
            const double l2n = 4.0 * params.lambda * params.lambda * params.n_atoms /
                               (params.omega * params.omega);
            const int m0 = std::max(20, static_cast<int>(std::ceil(l2n)) +
                                            static_cast<int>(std::ceil(10.0 / beta)));
            for (int m = m0; m <= converged + 10; m += 10) {
                const double f = free_energy_per_atom(params, ModelKind::Dicke, beta, m);
                out << format_double(beta) << ',' << m << ',' << format_double(f) << '\n';
            }
        }
    });
}

}  // namespace dicke
