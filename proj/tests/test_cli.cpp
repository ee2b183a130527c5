#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(MISFIT_SIM_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path = fs::temp_directory_path() / ("misfit_cli_" + std::to_string(::getpid()));
    TempDir() { fs::create_directories(path); }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("run writes the csv and exits 0") {
    TempDir dir;
    const auto cfg = dir.path / "plan.cfg";
    std::ofstream(cfg) << "model = static\nn_agents = 100\nn_periods = 3\nn_runs = 4\nsweep.sigma = 0.1,0.5\n";
    const auto out = dir.path / "out.csv";
    CHECK(run("run --config " + cfg.string() + " --out " + out.string() + " --workers 2 --histogram") == 0);
    const std::string csv = slurp(out);
    CHECK(csv.starts_with("sigma,period,statistic,mean,std,n_runs\n"));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * 3 * 4);
    const std::string hist = slurp(dir.path / "out_histogram.csv");
    CHECK(hist.starts_with("# bin_edges=0,1,"));

    // Same seed, different worker count: identical bytes.
    const auto again = dir.path / "again.csv";
    CHECK(run("run --config " + cfg.string() + " --out " + again.string() + " --workers 1") == 0);
    CHECK(slurp(again) == csv);

    const auto reseeded = dir.path / "reseeded.csv";
    CHECK(run("run --config " + cfg.string() + " --out " + reseeded.string() + " --seed 7") == 0);
    CHECK(slurp(reseeded) != csv);
}

TEST_CASE("bad config fails without output") {
    TempDir dir;
    const auto cfg = dir.path / "typo.cfg";
    std::ofstream(cfg) << "model = static\nn_agnets = 100\n";
    const auto out = dir.path / "out.csv";
    CHECK(run("run --config " + cfg.string() + " --out " + out.string()) != 0);
    CHECK_FALSE(fs::exists(out));
}

TEST_CASE("unwritable output fails") {
    TempDir dir;
    const auto cfg = dir.path / "plan.cfg";
    std::ofstream(cfg) << "model = static\nn_agents = 20\nn_runs = 1\n";
    CHECK(run("run --config " + cfg.string() + " --out " + (dir.path / "missing" / "x.csv").string()) != 0);
}

TEST_CASE("presets and graph") {
    CHECK(run("presets") == 0);
    CHECK(run("presets misfits_desk") == 0);
    CHECK(run("presets nope") != 0);
    TempDir dir;
    const auto edges = dir.path / "g.txt";
    CHECK(run("graph --n 5 --k 2 --beta 0 --out " + edges.string()) == 0);
    CHECK(slurp(edges) == "0 1\n0 4\n1 2\n2 3\n3 4\n");
    CHECK(run("graph --n 5 --k 3 --beta 0") != 0);
}

TEST_CASE("workers from the environment") {
    TempDir dir;
    const auto cfg = dir.path / "plan.cfg";
    std::ofstream(cfg) << "model = static\nn_agents = 50\nn_periods = 2\nn_runs = 3\n";
    CHECK(run("run --config " + cfg.string() + " --out " + (dir.path / "a.csv").string()) == 0);
    ::setenv("MISFIT_SIM_WORKERS", "3", 1);
    CHECK(run("run --config " + cfg.string() + " --out " + (dir.path / "b.csv").string()) == 0);
    ::unsetenv("MISFIT_SIM_WORKERS");
    CHECK(slurp(dir.path / "a.csv") == slurp(dir.path / "b.csv"));
}
