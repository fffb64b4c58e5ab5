#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dicke/run.hpp"
#include "doctest.h"

using namespace dicke;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path temp_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("dicke_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

RunConfig small_config() {
    RunConfig config;
    config.kinds = {ModelKind::ExactEffective};
    config.epsilon = 1.0;
    config.lambda = 0.0;
    config.atoms = {2};
    config.betas = {1.0};
    return config;
}

}  // namespace

TEST_CASE("beta grid construction") {
    const auto lin = make_beta_grid(1.0, 3.0, 5, "linear");
    REQUIRE(lin.size() == 5);
    CHECK(lin[0] == doctest::Approx(1.0));
    CHECK(lin[2] == doctest::Approx(2.0));
    CHECK(lin[4] == doctest::Approx(3.0));

    const auto log = make_beta_grid(0.1, 10.0, 3, "log");
    REQUIRE(log.size() == 3);
    CHECK(log[0] == doctest::Approx(0.1));
    CHECK(log[1] == doctest::Approx(1.0));
    CHECK(log[2] == doctest::Approx(10.0));

    CHECK_THROWS_AS(make_beta_grid(0.0, 1.0, 3, "linear"), ConfigError);
    CHECK_THROWS_AS(make_beta_grid(1.0, 0.5, 3, "linear"), ConfigError);
    CHECK_THROWS_AS(make_beta_grid(1.0, 2.0, 0, "linear"), ConfigError);
    CHECK_THROWS_AS(make_beta_grid(1.0, 2.0, 3, "cubic"), ConfigError);
}

TEST_CASE("config validation") {
    RunConfig config = small_config();
    CHECK_NOTHROW(config.validate());

    config.betas.clear();
    CHECK_THROWS_AS(config.validate(), ConfigError);

    config = small_config();
    config.betas = {1.0, 0.5};
    CHECK_THROWS_AS(config.validate(), ConfigError);

    config = small_config();
    config.atoms = {21};
    CHECK_THROWS_AS(config.validate(), ConfigError);

    config = small_config();
    config.kinds.clear();
    CHECK_THROWS_AS(config.validate(), ConfigError);

    config = small_config();
    config.format = "xml";
    CHECK_THROWS_AS(config.validate(), ConfigError);
}

TEST_CASE("config file loading and overrides") {
    const fs::path dir = temp_dir("config");
    const fs::path cfg = dir / "run.json";
    {
        std::ofstream out(cfg);
        out << R"({
            "kinds": ["ExactEffective", "ReslenEffective"],
            "epsilon": 2.0,
            "lambda": 0.5,
            "atoms": [2, 4],
            "beta": {"min": 0.5, "max": 2.0, "steps": 4, "scale": "linear"},
            "tol": 1e-7,
            "format": "json"
        })";
    }
    RunConfig config = load_config(cfg.string());
    CHECK(config.kinds.size() == 2);
    CHECK(config.epsilon == 2.0);
    CHECK(config.betas.size() == 4);
    CHECK(config.format == "json");

    ConfigOverrides ov;
    ov.epsilon = 1.5;
    ov.beta_min = 1.0;
    ov.beta_max = 2.0;
    ov.beta_steps = 2;
    apply_overrides(config, ov);
    CHECK(config.epsilon == 1.5);
    REQUIRE(config.betas.size() == 2);
    CHECK(config.betas[0] == doctest::Approx(1.0));

    CHECK_THROWS_AS(load_config((dir / "missing.json").string()), ConfigError);
    {
        std::ofstream out(dir / "bad.json");
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_config((dir / "bad.json").string()), ConfigError);
}

TEST_CASE("format_double round-trips") {
    for (double x : {0.0, 1.0, -0.8132616875182228, 1e-300, 3.141592653589793, 1e17}) {
        const std::string s = format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
}

TEST_CASE("sweep evaluation and JSON round-trip") {
    RunConfig config = small_config();
    const auto rows = evaluate_sweep(config);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].kind == ModelKind::ExactEffective);
    CHECK(rows[0].n_atoms == 2);
    CHECK(rows[0].point.free_energy_per_atom ==
          doctest::Approx(-std::log(2.0 * std::cosh(0.5))).epsilon(1e-9));

    const std::string json_text = sweep_rows_to_json(rows);
    const auto parsed = sweep_rows_from_json(json_text);
    REQUIRE(parsed.size() == rows.size());
    CHECK(parsed[0].kind == rows[0].kind);
    CHECK(parsed[0].n_atoms == rows[0].n_atoms);
    CHECK(parsed[0].point.beta == rows[0].point.beta);
    CHECK(parsed[0].point.free_energy_per_atom == rows[0].point.free_energy_per_atom);
    CHECK(parsed[0].point.internal_energy_per_atom == rows[0].point.internal_energy_per_atom);
    CHECK(parsed[0].point.entropy_per_atom == rows[0].point.entropy_per_atom);
    CHECK(parsed[0].point.jx2_per_atom2 == rows[0].point.jx2_per_atom2);
    CHECK(parsed[0].point.jz_per_atom == rows[0].point.jz_per_atom);
    CHECK(parsed[0].point.photon_density == rows[0].point.photon_density);
    CHECK(parsed[0].point.cutoff_used == rows[0].point.cutoff_used);
}

TEST_CASE("cmd_sweep writes deterministic files") {
    RunConfig config = small_config();
    config.kinds = {ModelKind::Dicke, ModelKind::ExactEffective};
    config.atoms = {2};
    config.betas = {0.5, 1.0};
    config.lambda = 0.5;

    const fs::path dir_a = temp_dir("sweep_a");
    const fs::path dir_b = temp_dir("sweep_b");
    config.out_dir = dir_a.string();
    REQUIRE(cmd_sweep(config) == kExitOk);
    config.out_dir = dir_b.string();
    REQUIRE(cmd_sweep(config) == kExitOk);
    CHECK(read_file(dir_a / "sweep.csv") == read_file(dir_b / "sweep.csv"));

    const std::string csv = read_file(dir_a / "sweep.csv");
    CHECK(csv.rfind("kind,n_atoms,beta,f,u,s,jx2_per_atom2,jz_per_atom,photon_density,cutoff_used",
                    0) == 0);
    // one header + 4 rows
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);

    config.format = "json";
    config.out_dir = dir_a.string();
    REQUIRE(cmd_sweep(config) == kExitOk);
    const auto rows = sweep_rows_from_json(read_file(dir_a / "sweep.json"));
    CHECK(rows.size() == 4);
}

TEST_CASE("command config errors") {
    RunConfig config = small_config();
    config.betas.clear();
    CHECK(cmd_sweep(config) == kExitConfigError);

    config = small_config();
    config.kinds = {ModelKind::Dicke, ModelKind::ExactEffective};
    CHECK(cmd_tc(config) == kExitConfigError);

    config = small_config();  // no Dicke
    CHECK(cmd_compare(config) == kExitConfigError);
    CHECK(cmd_converge(config) == kExitConfigError);
}

TEST_CASE("cmd_tc gap equation output") {
    RunConfig config = small_config();
    config.kinds = {ModelKind::ExactEffective, ModelKind::LibertiZaffino};
    config.epsilon = 1.0;
    config.lambdas = {0.3, 1.0};
    const fs::path dir = temp_dir("tc");
    config.out_dir = dir.string();
    REQUIRE(cmd_tc(config) == kExitOk);

    const std::string csv = read_file(dir / "tc.csv");
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "kind,epsilon,lambda,beta_c,t_c,exists");
    int exists_true = 0, exists_false = 0;
    while (std::getline(in, line)) {
        if (line.find(",true") != std::string::npos) ++exists_true;
        if (line.find(",,false") != std::string::npos) ++exists_false;
    }
    // exact: λ=0.3 none, λ=1 yes; LZ: both
    CHECK(exists_true == 3);
    CHECK(exists_false == 1);
}

TEST_CASE("cmd_converge ladder") {
    RunConfig config = small_config();
    config.kinds = {ModelKind::Dicke};
    config.lambda = 0.0;
    config.atoms = {2};
    config.betas = {1.0};
    const fs::path dir = temp_dir("converge");
    config.out_dir = dir.string();
    REQUIRE(cmd_converge(config) == kExitOk);

    const std::string csv = read_file(dir / "converge.csv");
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "beta,cutoff,f");
    std::vector<double> fs_col;
    while (std::getline(in, line)) {
        const auto last = line.rfind(',');
        fs_col.push_back(std::strtod(line.c_str() + last + 1, nullptr));
    }
    REQUIRE(fs_col.size() >= 2);
    CHECK(std::abs(fs_col[fs_col.size() - 1] - fs_col[fs_col.size() - 2]) < config.tol);
}
