#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

#ifndef THINLAT_CLI
#error "THINLAT_CLI must point at the CLI binary"
#endif

struct Workspace {
  fs::path dir;
  Workspace() {
    dir = fs::temp_directory_path() / ("thinlat-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Workspace() { fs::remove_all(dir); }
};

int run(const Workspace& ws, const std::string& args) {
  std::string cmd = "cd '" + ws.dir.string() + "' && '" + THINLAT_CLI + "' " + args + " >cli.out 2>cli.err";
  int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -2;
}

json read_cert(const Workspace& ws, const std::string& command) {
  std::ifstream in(ws.dir / "thinlat-certs" / (command + ".json"));
  REQUIRE(in.good());
  json j;
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("cli pipeline, gating, exit codes, determinism") {
  Workspace ws;

  SUBCASE("malformed flag is an input error") {
    CHECK(run(ws, "verify --no-such-flag") == 3);
    CHECK(run(ws, "density --t 0") == 3);
  }

  SUBCASE("downstream commands refuse to run before verify") {
    CHECK(run(ws, "trace-cert --radius 3") == 3);
    CHECK(run(ws, "form --radius 2") == 3);
    CHECK(run(ws, "specialize --d 2") == 3);
  }

  SUBCASE("full pipeline") {
    REQUIRE(run(ws, "verify --radius 3") == 0);
    json verify1 = read_cert(ws, "verify");
    CHECK(verify1.at("verdicts").at("relator_identity_rho") == "PASS");
    CHECK(verify1.at("witnesses").contains("relator"));

    // determinism: identical inputs give identical bodies modulo timing
    REQUIRE(run(ws, "verify --radius 3") == 0);
    json verify2 = read_cert(ws, "verify");
    CHECK(verify1.at("content_hash") == verify2.at("content_hash"));

    CHECK(run(ws, "trace-cert --seed-a 5 --seed-b 5") == 3);  // bases must be independent
    REQUIRE(run(ws, "trace-cert --radius 4") == 0);
    json tc = read_cert(ws, "trace-cert");
    CHECK(tc.at("witnesses").at("intersection_excluding_v").empty());
    CHECK(tc.at("upstream").at("verify") == verify2.at("content_hash"));

    // the two family trace tables coincide at v = 2t
    REQUIRE(run(ws, "verify --radius 3 --family rho --out rho.json") == 0);
    REQUIRE(run(ws, "verify --radius 3 --family phi --out phi.json") == 0);
    json rho_table, phi_table;
    {
      std::ifstream a(ws.dir / "rho.json"), b(ws.dir / "phi.json");
      json ja, jb;
      a >> ja;
      b >> jb;
      rho_table = ja.at("witnesses").at("trace_table");
      phi_table = jb.at("witnesses").at("trace_table");
    }
    CHECK(rho_table == phi_table);

    REQUIRE(run(ws, "form --radius 3") == 0);

    CHECK(run(ws, "specialize --d 4 --radius 3") == 3);  // not square-free
    REQUIRE(run(ws, "specialize --d 2 --radius 3") == 0);
    json sp = read_cert(ws, "specialize");
    CHECK(sp.at("verdicts").at("hermitian") == "PASS");
    CHECK(sp.at("verdicts").at("integer_diagonal_nonzero") == "PASS");
    CHECK(sp.at("witnesses").at("j_diagonal").size() == 4);

    // staleness: corrupting the verify certificate breaks the chain
    {
      auto path = ws.dir / "thinlat-certs" / "verify.json";
      json tampered = verify2;
      tampered["witnesses"]["relator"] = "x";
      std::ofstream out(path);
      out << tampered.dump(2) << "\n";
    }
    CHECK(run(ws, "trace-cert --radius 3") == 3);
    REQUIRE(run(ws, "verify --radius 3") == 0);  // restore

    REQUIRE(run(ws, "density --t 1 --radius 6") == 0);
    json den = read_cert(ws, "density");
    CHECK(den.at("witnesses").at("adjoint_span_dimension") == 225);
    CHECK(den.at("verdicts").at("longitude_inverse_eigenvalue") == "PASS");
    CHECK(den.at("witnesses").contains("proximality_table"));

    // the hyperbolic point is not Zariski dense in SL(4): check fails
    CHECK(run(ws, "density --t 1/2 --radius 3") == 2);

    REQUIRE(run(ws, "verify --radius 3") == 0);
    REQUIRE(run(ws, "report --out report.md") == 0);
    std::ifstream rep(ws.dir / "report.md");
    std::string content((std::istreambuf_iterator<char>(rep)), std::istreambuf_iterator<char>());
    CHECK(content.find("thinlat pipeline report") != std::string::npos);
    CHECK(content.find("verify") != std::string::npos);

    CHECK(run(ws, "verify --radius 2 --markdown") == 0);
  }
}
