#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "nnequiv/model.hpp"
#include "test_env.hpp"

using nnequiv::testing::cli_path;
using nnequiv::testing::fixture;
using nnequiv::testing::run_command;

namespace fs = std::filesystem;

namespace {

std::string cli(const std::string& args) { return cli_path() + " " + args; }

std::string solver_flag() { return " --solver " + nnequiv::testing::test_solver().executable; }

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / ("nnequiv-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("check exit codes") {
    const std::string fig1 = fixture("fig1.json");
    const std::string pert = fixture("fig1_bias_pert.json");
    CHECK(run_command(cli("check " + fig1 + " " + fig1 + " --relation strict" + solver_flag())).exit_code == 0);

    const auto sat = run_command(cli("check " + fig1 + " " + pert + " --relation strict" + solver_flag()));
    CHECK(sat.exit_code == 1);
    CHECK(sat.output.find("certified") != std::string::npos);

    CHECK(run_command(cli("check " + fig1 + " " + fig1 + " --relation strict --inject-drop-relation" + solver_flag()))
              .exit_code == 4);
    CHECK(run_command(cli("check " + fig1 + " " + fig1 + " --relation strict --solver " +
                          std::string(NNEQUIV_FAKE_SOLVERS_DIR) + "/garbage.sh"))
              .exit_code == 2);
}

TEST_CASE("usage errors exit 3") {
    const std::string fig1 = fixture("fig1.json");
    const auto missing = run_command(cli("check " + fig1 + " " + fig1));
    CHECK(missing.exit_code == 3);
    CHECK(missing.output.find("--relation") != std::string::npos);

    const auto topk = run_command(cli("encode " + fig1 + " " + fig1 + " --relation topk --k 3"));
    CHECK(topk.exit_code == 3);
    CHECK(topk.output.find("k <= m") != std::string::npos);

    CHECK(run_command(cli("check " + fig1 + " " + fig1 + " --relation l1")).exit_code == 3);
    CHECK(run_command(cli("check " + fig1 + " " + fig1 + " --relation l1 --epsilon 1/3")).exit_code == 3);
    CHECK(run_command(cli("check " + fig1 + " " + fig1 + " --relation cosine")).exit_code == 3);
    CHECK(run_command(cli("eval " + fig1 + " 0")).exit_code == 3);
    CHECK(run_command(cli("eval /nonexistent.json 0,0")).exit_code == 3);
    CHECK(run_command(cli("frobnicate")).exit_code == 3);
    CHECK(run_command(cli("--help")).exit_code == 0);
}

TEST_CASE("encode matches the golden file") {
    const auto r = run_command(cli("encode " + fixture("fig1.json") + " " + fixture("fig1.json") + " --relation strict"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == slurp(nnequiv::testing::golden("fig1_strict_self.smt2")));
}

TEST_CASE("eval") {
    const auto r = run_command(cli("eval " + fixture("fig1.json") + " 0,0 --float"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("y1 = 3 ") != std::string::npos);
    CHECK(r.output.find("y2 = -1 ") != std::string::npos);
    const auto mpc = run_command(cli("eval " + fixture("mpc.json") + " 0,0,0,0,0,0"));
    CHECK(mpc.exit_code == 0);
    CHECK(mpc.output.find("y1 = ") != std::string::npos);
    CHECK(mpc.output.find("y2") == std::string::npos);
}

TEST_CASE("oracle, params and perturb") {
    const std::string fig1 = fixture("fig1.json");
    CHECK(run_command(cli("oracle " + fig1 + " " + fig1 + " --relation strict --bits")).exit_code == 0);
    CHECK(run_command(cli("oracle " + fig1 + " " + fixture("fig1_bias_pert.json") + " --relation strict")).exit_code ==
          1);

    const auto params = run_command(cli("params " + fixture("mnist_1_1.json")));
    CHECK(params.exit_code == 0);
    CHECK(params.output == "7960\n");

    const fs::path dir = scratch_dir();
    const fs::path out = dir / "pert.json";
    const fs::path log = dir / "pert.changes.json";
    const auto pert = run_command(cli("perturb " + fig1 + " --count 1 --seed 7 -o " + out.string() + " --changelog " +
                                      log.string()));
    CHECK(pert.exit_code == 0);
    const auto changes = nlohmann::json::parse(slurp(log));
    CHECK(changes["changes"].size() == 1);
    CHECK(changes["seed"] == 7);
    const nnequiv::Network copy = nnequiv::load_network_file(out.string());
    CHECK(copy.name == "fig1_pert");

    const auto again = run_command(cli("perturb " + fig1 + " --count 1 --seed 7 -o " + (dir / "again.json").string() +
                                       " --changelog " + (dir / "again.changes.json").string()));
    CHECK(again.exit_code == 0);
    CHECK(slurp(dir / "again.json") == slurp(out));
    fs::remove_all(dir);
}

TEST_CASE("reports and batches") {
    const fs::path dir = scratch_dir();
    const std::string fig1 = fixture("fig1.json");
    const std::string pert = fixture("fig1_bias_pert.json");
    const fs::path report = dir / "report.json";
    const auto r = run_command(cli("check " + fig1 + " " + pert + " --relation l1 --epsilon 5 --timeout 600 --report " +
                                   report.string() + " --keep-query " + (dir / "q.smt2").string() + solver_flag()));
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp(report));
    CHECK(j["relation"]["epsilon"] == "5");
    CHECK(j["timeout_seconds"] == 600.0);
    CHECK(j["exit_code"] == 0);
    CHECK(fs::exists(dir / "q.smt2"));

    const fs::path manifest = dir / "batch.json";
    std::ofstream(manifest) << nlohmann::json{{"checks",
                                               {{{"a", fig1}, {"b", fig1}, {"relation", "strict"}},
                                                {{"a", fig1}, {"b", pert}, {"relation", "argmax"}},
                                                {{"a", fig1}, {"b", pert}, {"relation", "linf"}, {"epsilon", "1"}}}}}
                                   .dump();
    const fs::path all = dir / "all.json";
    const auto b = run_command(cli("batch " + manifest.string() + " --jobs 2 --report " + all.string() + solver_flag()));
    const auto arr = nlohmann::json::parse(slurp(all));
    REQUIRE(arr.size() == 3);
    CHECK(arr[0]["exit_code"] == 0);
    CHECK(arr[2]["exit_code"] == 1);
    CHECK(b.exit_code == 1);
    fs::remove_all(dir);
}
