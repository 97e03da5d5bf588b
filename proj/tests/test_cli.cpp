#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "../src/cli/commands.hpp"
#include "../src/cli/csv.hpp"
#include "../src/cli/run_config.hpp"
#include "gausslind/errors.hpp"

using namespace gausslind;
using namespace gausslind::cli;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("gausslind_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

fs::path write_file(const fs::path& dir, const std::string& name,
                    const std::string& body) {
    const fs::path p = dir / name;
    std::ofstream out(p, std::ios::binary);
    out << body;
    return p;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("format_sci emits 12 significant digits") {
    CHECK(format_sci(0.25) == "2.50000000000e-01");
    CHECK(format_sci(0.0) == "0.00000000000e+00");
    CHECK(format_sci(-0.0) == "0.00000000000e+00");
    CHECK(format_sci(-12.5) == "-1.25000000000e+01");
    CHECK(format_sci(4.5e-13) == "4.50000000000e-13");
}

TEST_CASE("config file parsing: comments, blanks, key = value") {
    TempDir tmp;
    const auto path = write_file(tmp.path, "run.conf",
                                 "# run setup\n"
                                 "profile.type = inverted\n"
                                 "\n"
                                 "bath.k = 1.5  # strong damping\n"
                                 "initial.r = 1\n"
                                 "grid.t_max = 20\n"
                                 "grid.n_steps = 11\n"
                                 "engine = both\n");
    const auto kv = parse_config_file(path);
    REQUIRE(kv.size() == 6);
    CHECK(kv[0].key == "profile.type");
    CHECK(kv[0].value == "inverted");
    CHECK(kv[0].line == 2);
    CHECK(kv[1].value == "1.5");

    const RunConfig config = build_config(kv, {});
    CHECK(std::holds_alternative<InvertedProfile>(config.profile));
    CHECK(config.bath.k == 1.5);
    CHECK(config.initial.r == 1.0);
    CHECK(config.t_max == 20.0);
    CHECK(config.n_steps == 11);
    CHECK(config.engine == Engine::both);
}

TEST_CASE("config errors carry location and field") {
    TempDir tmp;
    const auto no_eq = write_file(tmp.path, "a.conf", "profile.type\n");
    CHECK_THROWS_WITH_AS(parse_config_file(no_eq),
                         doctest::Contains("line 1"), ConfigError);

    const auto unknown = parse_config_file(
        write_file(tmp.path, "b.conf", "\n\nbath.spring = 2\n"));
    CHECK_THROWS_WITH_AS(build_config(unknown, {}),
                         doctest::Contains("line 3"), ConfigError);

    const auto bad_num =
        parse_config_file(write_file(tmp.path, "c.conf", "bath.k = fast\n"));
    CHECK_THROWS_WITH_AS(build_config(bad_num, {}),
                         doctest::Contains("bath.k"), ConfigError);

    const auto negative =
        parse_config_file(write_file(tmp.path, "d.conf", "initial.nu = -1\n"));
    CHECK_THROWS_AS(build_config(negative, {}), ConfigError);

    const auto stray_gamma = parse_config_file(write_file(
        tmp.path, "e.conf", "profile.type = constant\nprofile.gamma = 1\n"));
    CHECK_THROWS_AS(build_config(stray_gamma, {}), ConfigError);
}

TEST_CASE("flag overrides beat file values") {
    TempDir tmp;
    const auto kv = parse_config_file(
        write_file(tmp.path, "run.conf", "bath.k = 1.5\nbath.n_bar = 3\n"));
    const RunConfig config = build_config(kv, {{"bath.k", "0.25", 0}});
    CHECK(config.bath.k == 0.25);
    CHECK(config.bath.n_bar == 3.0);
}

TEST_CASE("tabulated profile loads from a table file") {
    TempDir tmp;
    const auto table = write_file(tmp.path, "w2.dat",
                                  "# t omega^2\n"
                                  "0 1.0\n"
                                  "5 2.0\n"
                                  "10 1.5\n");
    const RunConfig config = build_config(
        {{"profile.type", "tabulated", 1},
         {"profile.table", table.string(), 2}},
        {});
    REQUIRE(std::holds_alternative<TabulatedProfile>(config.profile));
    CHECK(omega_squared(config.profile, 2.5) == doctest::Approx(1.5));
}

TEST_CASE("trajectory CSV schema") {
    RunConfig config;
    config.profile = InvertedProfile{1.0};
    config.bath.k = 1.5;
    config.initial.r = 1.0;
    config.t_max = 2.0;
    config.n_steps = 5;

    std::ostringstream out, diag;
    cmd_evolve(config, out, diag);
    const std::string text = out.str();
    CHECK(text.substr(0, text.find('\n')) ==
          "t,D,S,sigma_qq,sigma_qp,sigma_pp,r,nu,mean_q,mean_p");
    CHECK(count_lines(text) == 6);
    CHECK(diag.str().empty());
    CHECK(text.find("2.50000000000e-01") != std::string::npos);
}

TEST_CASE("evolve output is deterministic") {
    RunConfig config;
    config.profile = SqrtRampProfile{1.0, 1.0};
    config.bath.k = 1.0;
    config.n_steps = 21;

    std::ostringstream a, b, diag;
    cmd_evolve(config, a, diag);
    cmd_evolve(config, b, diag);
    CHECK(a.str() == b.str());
}

TEST_CASE("both engines emit a paired CSV and a deviation diagnostic") {
    RunConfig config;
    config.profile = InvertedProfile{1.0};
    config.bath.k = 1.0;
    config.initial.r = 1.0;
    config.t_max = 5.0;
    config.n_steps = 11;
    config.engine = Engine::both;

    std::ostringstream out, diag;
    cmd_evolve(config, out, diag);
    const std::string header = out.str().substr(0, out.str().find('\n'));
    CHECK(header.find("D_oracle") != std::string::npos);
    CHECK(header.find("mean_p_oracle") != std::string::npos);
    REQUIRE(!diag.str().empty());
    CHECK(diag.str().front() == '#');
    // the engines should agree to well under a part in a million
    const double dev = std::strtod(
        diag.str().substr(diag.str().rfind(' ')).c_str(), nullptr);
    CHECK(dev < 1e-6);
}

TEST_CASE("entropy slope recovers a linear tail") {
    Trajectory traj;
    for (int i = 0; i <= 100; ++i) {
        TrajectorySample s;
        s.t = 0.1 * i;
        s.entropy = 3.0 + 2.0 * s.t;
        traj.push_back(s);
    }
    CHECK(entropy_slope(traj) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("sweep writes per-k files and a summary") {
    TempDir tmp;
    RunConfig config;
    config.profile = InvertedProfile{1.0};
    config.initial.r = 1.0;
    config.t_max = 4.0;
    config.n_steps = 17;

    const auto rows = cmd_sweep(config, {0.5, 1.0, 1.5}, tmp.path, 2);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].k == 0.5);
    CHECK(rows[2].k == 1.5);
    CHECK(fs::exists(tmp.path / "sweep_k0.5.csv"));
    CHECK(fs::exists(tmp.path / "sweep_k1.csv"));
    CHECK(fs::exists(tmp.path / "sweep_k1.5.csv"));

    const std::string summary = read_file(tmp.path / "summary.csv");
    CHECK(summary.substr(0, summary.find('\n')) ==
          "k,final_D,final_S,entropy_slope");
    CHECK(count_lines(summary) == 4);
    // stronger damping pins the determinant lower at fixed time
    CHECK(rows[2].final_det < rows[0].final_det);
}

TEST_CASE("sweep matches between serial and parallel execution") {
    TempDir serial, parallel;
    RunConfig config;
    config.profile = ConstantProfile{1.0};
    config.initial.nu = 1.0;
    config.t_max = 3.0;
    config.n_steps = 9;

    cmd_sweep(config, {0.2, 0.9, 1.7}, serial.path, 1);
    cmd_sweep(config, {0.2, 0.9, 1.7}, parallel.path, 3);
    for (const char* name :
         {"sweep_k0.2.csv", "sweep_k0.9.csv", "sweep_k1.7.csv",
          "summary.csv"})
        CHECK(read_file(serial.path / name) == read_file(parallel.path / name));
}

TEST_CASE("figures command writes datasets and a plot script") {
    TempDir tmp;
    cmd_figures(2, tmp.path);
    for (const char* name :
         {"figure2_k0.5.csv", "figure2_k1.csv", "figure2_k1.5.csv"})
        CHECK(fs::exists(tmp.path / name));
    const std::string script = read_file(tmp.path / "figure2.gp");
    CHECK(script.find("set datafile separator ','") != std::string::npos);
    CHECK(script.find("using 1:3") != std::string::npos);
    CHECK(script.find("figure2_k1.5.csv") != std::string::npos);

    const std::string csv = read_file(tmp.path / "figure2_k1.5.csv");
    CHECK(count_lines(csv) == 202);

    CHECK_THROWS_AS(cmd_figures(3, tmp.path), ConfigError);
}

#ifdef GAUSSLIND_CLI_PATH
TEST_CASE("process exit codes: success, config error, numeric failure") {
    TempDir tmp;
    const std::string exe = GAUSSLIND_CLI_PATH;
    const std::string out_csv = (tmp.path / "out.csv").string();

    auto run = [](const std::string& cmd) {
        const int raw = std::system((cmd + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(raw);
    };

    CHECK(run(exe + " evolve --bath.k 0.5 --grid.n_steps 3 --out " + out_csv) ==
          0);
    CHECK(run(exe + " evolve --bath.k -1 --out " + out_csv) == 2);
    CHECK(run(exe + " evolve --no.such.key 1 --out " + out_csv) == 2);
    CHECK(run(exe + " figures 7") == 2);
    // beyond the tabulated range: the run itself cannot be configured
    const auto table = write_file(tmp.path, "w2.dat", "0 1\n1 1\n");
    CHECK(run(exe + " evolve --profile.type tabulated --profile.table " +
              table.string() + " --grid.t_max 5 --out " + out_csv) == 2);
    CHECK(run(exe + " sweep --k 0.5 --out-dir " + (tmp.path / "s").string() +
              " --tolerances.ode nonsense") == 2);
    // a frequency scale the integrator cannot resolve: numeric failure
    const auto stiff = write_file(tmp.path, "stiff.dat", "0 1e28\n2 1e28\n");
    CHECK(run(exe + " evolve --profile.type tabulated --profile.table " +
              stiff.string() + " --grid.t_max 1 --grid.n_steps 3 --out " +
              out_csv) == 3);
}

TEST_CASE("jobs default comes from the environment") {
    TempDir tmp;
    const std::string exe = GAUSSLIND_CLI_PATH;
    const std::string cmd =
        "GAUSSLIND_JOBS=2 " + exe + " sweep --k 0.5,1.5 --grid.n_steps 5 " +
        "--profile.type constant --out-dir " + tmp.path.string() +
        " > /dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    CHECK(fs::exists(tmp.path / "summary.csv"));
}
#endif
