#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "qgeom/report.hpp"

namespace {

std::string cli_path() {
  const char* p = std::getenv("QGEOM_CLI_PATH");
  return p ? p : "";
}

int run(const std::string& args, const std::filesystem::path& out) {
  std::string cmd = cli_path() + " " + args + " > " + out.string() + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("in-process report serialization is deterministic") {
  qgeom::VerifyConfig cfg;
  cfg.suite = "reconstruct";
  cfg.cases = 10;
  std::string a = qgeom::report_json(qgeom::run_verification(cfg)).dump(2);
  std::string b = qgeom::report_json(qgeom::run_verification(cfg)).dump(2);
  REQUIRE(a == b);

  qgeom::SuiteReport rep = qgeom::run_verification(cfg);
  REQUIRE(rep.all_passed);
  std::ostringstream csv;
  qgeom::write_report_csv(csv, rep);
  REQUIRE(csv.str().rfind("name,paper_ref,residual,threshold,status\n", 0) == 0);
  REQUIRE(csv.str().find("\r") == std::string::npos);
}

TEST_CASE("unknown suite name is rejected") {
  qgeom::VerifyConfig cfg;
  cfg.suite = "nonsense";
  REQUIRE_THROWS_AS(qgeom::run_verification(cfg), qgeom::ParameterError);
}

TEST_CASE("command-line binary", "[cli]") {
  if (cli_path().empty()) {
    SKIP("QGEOM_CLI_PATH not set");
  }
  auto tmp = std::filesystem::temp_directory_path() / "qgeom_cli_test";
  std::filesystem::create_directories(tmp);

  SECTION("verify exits 0 and reports every entry as passing") {
    auto out = tmp / "verify.json";
    int rc = run("verify --suite fields --cases 5 --seed 7 --output json", out);
    REQUIRE(rc == 0);
    std::string body = slurp(out);
    REQUIRE(body.find("\"all_passed\": true") != std::string::npos);
    REQUIRE(body.find("\"paper_ref\"") != std::string::npos);
  }

  SECTION("negative controls report expected-nonzero deviations") {
    auto out = tmp / "controls.json";
    int rc = run("verify --suite negative-controls --seed 7 --cases 10", out);
    REQUIRE(rc == 0);
    std::string body = slurp(out);
    REQUIRE(body.find("expected-nonzero") != std::string::npos);
  }

  SECTION("bad flag values exit 2") {
    auto out = tmp / "bad.txt";
    REQUIRE(run("verify --dim 9", out) == 2);
    REQUIRE(run("frobnicate", out) == 2);
  }

  SECTION("flow exports a CSV trajectory") {
    auto out = tmp / "flow.csv";
    int rc = run("flow --hamiltonian harmonic --omega 1.0 --t-end 0.25 --step 1e-3 "
                 "--cutoff 4",
                 out);
    REQUIRE(rc == 0);
    std::string body = slurp(out);
    REQUIRE(body.rfind("t,re_z0,im_z0", 0) == 0);
  }

  SECTION("config file supplies defaults, flags override") {
    auto cfgfile = tmp / "qgeom.cfg";
    std::ofstream(cfgfile) << "cutoff = 5\nseed = 9\n";
    auto out = tmp / "cfg.json";
    int rc = run("verify --suite reconstruct --config " + cfgfile.string() +
                     " --cases 5",
                 out);
    REQUIRE(rc == 0);
    std::string body = slurp(out);
    REQUIRE(body.find("\"cutoff\": 5") != std::string::npos);
    REQUIRE(body.find("\"seed\": 9") != std::string::npos);
  }
}
