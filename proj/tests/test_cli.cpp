// End-to-end coverage of the command-line surface: golden output for the
// documented examples, JSON mode determinism, and exit-code contracts
// (0 success, 1 domain error, 2 usage error).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../tools/cli_app.hpp"

namespace {

struct RunResult {
  int rc;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int rc = polyharm::cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  TempFile(std::string name, const std::string& content)
      : path(std::move(name)) {
    std::ofstream(path) << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

const char* kCross = R"({"dim":2,"radius":"1","atoms":[
  {"point":["1","0"],"weight":"1/4"},
  {"point":["-1","0"],"weight":"1/4"},
  {"point":["0","1"],"weight":"1/4"},
  {"point":["0","-1"],"weight":"1/4"}]})";

const char* kOrigin =
    R"({"dim":2,"radius":"1","atoms":[{"point":["0","0"],"weight":"1"}]})";

}  // namespace

TEST_CASE("degree command") {
  auto r = run_cli({"degree", "--dim", "2", "--poly", "x1^2+x2^2"});
  CHECK(r.rc == 0);
  CHECK(r.out == "1\n");
  CHECK(r.err.empty());

  auto j = run_cli({"degree", "--dim", "2", "--poly", "x1^2+x2^2", "--json"});
  CHECK(j.rc == 0);
  CHECK(nlohmann::json::parse(j.out)["degree"] == 1);
}

TEST_CASE("np command") {
  auto r = run_cli({"np", "--dim", "2", "--poly", "x1^2+x2^2-1"});
  CHECK(r.rc == 0);
  CHECK(r.out == "1\nformula=search=1\n");

  auto j = run_cli({"np", "--dim", "2", "--poly", "x1^2+x2^2-1", "--json"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["np"] == 1);
  CHECK(doc["formula"] == 1);
  CHECK(doc["search"] == 1);
  CHECK(doc["agree"] == true);
}

TEST_CASE("almansi command") {
  auto r = run_cli({"almansi", "--dim", "2", "--poly", "x1^2+x2^2"});
  CHECK(r.rc == 0);
  CHECK(r.out == "h0 = 0\nh1 = 1\n");
}

TEST_CASE("basis command") {
  auto r = run_cli({"basis", "--dim", "2", "--degree", "2"});
  CHECK(r.rc == 0);
  CHECK(r.out ==
        "m=1 norm_sq=1/2: x1^2 - x2^2\n"
        "m=2 norm_sq=1/8: x1*x2\n");
}

TEST_CASE("moments command") {
  TempFile f("cli_origin_moments.json", kOrigin);
  auto r = run_cli({"moments", "--measure", f.path, "--tmax", "1",
                    "--kmax", "1"});
  CHECK(r.rc == 0);
  CHECK(r.out ==
        "0 0 1 1\n"
        "0 1 1 0\n"
        "0 1 2 0\n"
        "1 0 1 0\n"
        "1 1 1 0\n"
        "1 1 2 0\n");
}

TEST_CASE("markov series and eval commands") {
  TempFile f("cli_origin_series.json", kOrigin);
  auto r = run_cli({"markov-series", "--measure", f.path, "--smax", "4"});
  CHECK(r.rc == 0);
  CHECK(r.out == "0 0 1 1\n");  // only the mass term for an origin atom

  auto j = run_cli(
      {"markov-series", "--measure", f.path, "--smax", "4", "--json"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["dim"] == 2);
  CHECK(doc["s_max"] == 4);
  REQUIRE(doc["coeffs"].size() == 1);
  CHECK(doc["coeffs"][0]["value"] == "1");

  auto e = run_cli({"markov-eval", "--measure", f.path, "--zeta", "2",
                    "--theta", "1,0"});
  CHECK(e.rc == 0);
  CHECK(e.out == "0.5 0\n");

  auto g = run_cli({"markov-eval", "--measure", f.path, "--grid",
                    "2,0:4,0:2", "--theta", "1,0"});
  CHECK(g.rc == 0);
  CHECK(g.out ==
        "zeta_re,zeta_im,value_re,value_im\n"
        "2,0,0.5,0\n"
        "4,0,0.25,0\n");

  auto bad = run_cli({"markov-eval", "--measure", f.path, "--theta", "1,0"});
  CHECK(bad.rc == 1);
  CHECK(bad.err.find("error:") == 0);
}

TEST_CASE("support command verdicts") {
  TempFile f("cli_cross.json", kCross);
  auto yes = run_cli({"support", "--poly", "x1^2+x2^2-1", "--measure",
                      f.path, "--smax", "12"});
  CHECK(yes.rc == 0);
  CHECK(yes.out == "supported\n");

  auto und = run_cli({"support", "--poly", "x1^2+x2^2-1", "--measure",
                      f.path, "--smax", "5"});
  CHECK(und.rc == 0);
  CHECK(und.out == "undecided (sufficient s_max = 10)\n");

  TempFile off("cli_off.json",
               R"({"dim":2,"radius":"1","atoms":[
                 {"point":["1","0"],"weight":"1"},
                 {"point":["1/2","0"],"weight":"1"}]})");
  auto no = run_cli({"support", "--poly", "x1^2+x2^2-1", "--measure",
                     off.path, "--smax", "12"});
  CHECK(no.rc == 0);
  CHECK(no.out.rfind("not_supported", 0) == 0);
}

TEST_CASE("identity and orthogonality commands") {
  TempFile f("cli_cross_id.json", kCross);
  auto id = run_cli({"identity-check", "--poly", "x1*x2", "--measure",
                     f.path, "--smax", "6"});
  CHECK(id.rc == 0);
  CHECK(id.out == "identity holds up to s_max=6\n");

  auto ortho = run_cli({"ortho-check", "--poly", "x1^2+x2^2-1",
                        "--measure", f.path, "--order", "4"});
  CHECK(ortho.rc == 0);
  CHECK(ortho.out == "true\n");

  auto not_ortho = run_cli({"ortho-check", "--poly", "x1", "--measure",
                            f.path, "--order", "2"});
  CHECK(not_ortho.rc == 0);
  CHECK(not_ortho.out == "false\n");
}

TEST_CASE("second-kind and rest commands") {
  TempFile f("cli_cross_sk.json", kCross);
  auto sk = run_cli({"second-kind", "--poly", "x1^2+x2^2-1", "--measure",
                     f.path, "--kmax", "5"});
  CHECK(sk.rc == 0);
  CHECK(sk.out ==
        "k=0 m=1 p: 1\n"
        "k=4 m=1 p: 1\n");

  // Every rest coefficient of the variety polynomial vanishes.
  auto rest = run_cli({"rest", "--poly", "x1^2+x2^2-1", "--measure",
                       f.path, "--smax", "6"});
  CHECK(rest.rc == 0);
  CHECK(rest.out.empty());
}

TEST_CASE("density-rank and separate commands") {
  TempFile f("cli_cross_rank.json", kCross);
  auto rank = run_cli({"density-rank", "--poly", "x1^2+x2^2-1",
                       "--measure", f.path, "--degree-max", "2"});
  CHECK(rank.rc == 0);
  CHECK(rank.out.rfind("order=1 atoms=4 basis=5 rank=4 full_rank=true", 0) ==
        0);
  CHECK(rank.out.find("witness = ") != std::string::npos);

  TempFile mu2("cli_mu2.json",
               R"({"dim":2,"radius":"1","atoms":[
                 {"point":["1","0"],"weight":"1/2"},
                 {"point":["-1","0"],"weight":"1/2"}]})");
  TempFile nu2("cli_nu2.json",
               R"({"dim":2,"radius":"1","atoms":[
                 {"point":["0","1"],"weight":"1/2"},
                 {"point":["0","-1"],"weight":"1/2"}]})");
  auto sep = run_cli({"separate", "--poly", "x1^2+x2^2-1", "--measure",
                      mu2.path, "--other", nu2.path, "--degree-max", "8"});
  CHECK(sep.rc == 0);
  CHECK(sep.out == "separated at degree 2 by x1^2 - x2^2: 1 vs -1\n");

  auto eq = run_cli({"separate", "--poly", "x1^2+x2^2-1", "--measure",
                     mu2.path, "--other", mu2.path, "--degree-max", "4"});
  CHECK(eq.rc == 0);
  CHECK(eq.out == "equal\n");
}

TEST_CASE("JSON output is byte deterministic") {
  TempFile f("cli_cross_det.json", kCross);
  const std::vector<std::string> cmd = {
      "support", "--poly", "x1^2+x2^2-1", "--measure", f.path,
      "--smax",  "12",     "--json"};
  auto a = run_cli(cmd);
  auto b = run_cli(cmd);
  CHECK(a.rc == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["verdict"] == "supported");
}

TEST_CASE("exit codes distinguish usage and domain errors") {
  // Usage errors: 2.
  CHECK(run_cli({}).rc == 2);
  CHECK(run_cli({"frobnicate"}).rc == 2);
  CHECK(run_cli({"degree", "--dim", "2"}).rc == 2);  // missing --poly

  // Help: 0.
  CHECK(run_cli({"--help"}).rc == 0);
  CHECK(run_cli({"degree", "--help"}).rc == 0);

  // Domain errors: 1, message on stderr.
  auto bad_poly = run_cli({"degree", "--dim", "2", "--poly", "x3"});
  CHECK(bad_poly.rc == 1);
  CHECK(bad_poly.err.rfind("error:", 0) == 0);

  auto bad_file = run_cli({"moments", "--measure", "no_such_file.json",
                           "--tmax", "1", "--kmax", "1"});
  CHECK(bad_file.rc == 1);
  CHECK(bad_file.err.rfind("error:", 0) == 0);
}
