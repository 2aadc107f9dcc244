#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "stablerep/cli.hpp"
#include "stablerep/json_io.hpp"

using namespace stablerep;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("homdim") {
  Result r = run({"homdim", "--shape", "1", "--type", "1"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out).at("count") == 2);

  Result empty = run({"homdim", "--shape", "", "--type", "1"});
  REQUIRE(empty.code == 0);
  CHECK(Json::parse(empty.out).at("count") == 1);
}

TEST_CASE("tabloids lists stable tabloids") {
  Result r = run({"tabloids", "--shape", "1,1", "--type", "1"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("count") == 3);
  CHECK(j.at("tabloids").size() == 3);
}

TEST_CASE("structconst emits interpolated polynomials") {
  Result r = run({"structconst", "--shape", "1", "--mid", "1", "--type", "1",
                  "--alpha", "dp", "--beta", "dp"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j.at("terms").size() == 2);
  // terms are ordered by tabloid; the identity tabloid ([[0,1]]) follows [[1,0]]
  for (const Json& term : j.at("terms")) {
    IvPoly poly = ivpoly_from_json(term.at("poly"));
    bool is_dp = term.at("tau").at("counts") == Json::parse("[[1,0]]");
    CHECK(poly.equals(IvPoly::binomial(1) + IvPoly::constant(is_dp ? -2 : -1)));
  }
}

TEST_CASE("structconst with a level emits integers") {
  Result r = run({"structconst", "--shape", "1", "--mid", "1", "--type", "1",
                  "--alpha", "dp", "--beta", "dp", "--n", "5"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  for (const Json& term : j.at("terms")) {
    bool is_dp = term.at("tau").at("counts") == Json::parse("[[1,0]]");
    CHECK(term.at("value") == (is_dp ? 3 : 4));
  }
}

TEST_CASE("d-dim and specht-dim") {
  Result r = run({"d-dim", "--lambda", "3,1", "--p", "2"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out).at("dim") == 2);

  Result s = run({"specht-dim", "--lambda", "3,1"});
  REQUIRE(s.code == 0);
  CHECK(Json::parse(s.out).at("count") == 3);
}

TEST_CASE("decomp two-row") {
  Result r = run({"decomp", "--n", "4", "--m", "1", "--p", "2"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out).at("multiplicities") == Json::parse("[1,1]"));
}

TEST_CASE("check-equiv") {
  Result r = run({"check-equiv", "--r", "1", "--p", "2", "--n", "5", "--m", "7"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out).at("agree") == true);

  Result bad = run({"check-equiv", "--r", "1", "--p", "2", "--n", "5", "--m", "6"});
  REQUIRE(bad.code == 0);
  Json j = Json::parse(bad.out);
  CHECK(j.at("agree") == false);
  CHECK(j.at("witnesses").size() > 0);
}

TEST_CASE("eval-t") {
  Result r = run({"eval-t", "--shape", "1", "--mid", "1", "--type", "1", "--alpha", "dp",
                  "--beta", "dp", "--p", "2", "--t-residue", "0", "--t-exp", "2"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  REQUIRE(j.at("terms").size() == 1);
  CHECK(j.at("terms")[0].at("tau").at("counts") == Json::parse("[[0,1]]"));
  CHECK(j.at("terms")[0].at("value") == 1);
}

TEST_CASE("tensor, restrict, induce") {
  Result t = run({"tensor", "--lambda", "1", "--mu", "1"});
  REQUIRE(t.code == 0);
  CHECK(Json::parse(t.out).at("summands").size() == 2);

  Result c = run({"tensor", "--lambda", "1", "--mu", "1", "--n", "5"});
  REQUIRE(c.code == 0);
  Json cj = Json::parse(c.out);
  CHECK(cj.at("summands").size() == 2);

  Result res = run({"restrict", "--lambda", "1", "--ell", "1"});
  REQUIRE(res.code == 0);
  CHECK(Json::parse(res.out).at("pairs").size() == 2);

  Result ind = run({"induce", "--mu", "1", "--lambda", "1"});
  REQUIRE(ind.code == 0);
  CHECK(Json::parse(ind.out).at("result") == Json::parse("[1,1]"));
}

TEST_CASE("interp and period") {
  Result r = run({"interp", "--base", "0", "--values", "0,1,3,6"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("diffs") == Json::parse("[0,1,1]"));

  Result p = run({"period", "--offset", "0", "--diffs", "0,0,1", "--p", "2"});
  REQUIRE(p.code == 0);
  CHECK(Json::parse(p.out).at("period") == 4);
}

TEST_CASE("fi over a range") {
  std::string path = "cli_fi_pres.json";
  {
    std::ofstream f(path);
    f << R"({"generators":[1],"relations":[0],
            "map":[[[{"tabloid":{"shape":[],"type":[1],"counts":[]},
                      "poly":{"offset":0,"diffs":[1]}}]]]})";
  }
  Result r = run({"fi", "--file", path, "--n0", "4", "--n1", "12", "--p", "2"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("levels").size() == 9);
  CHECK(j.at("levels")[0].at("dim") == 3);
  CHECK(j.at("levels")[0].at("invariants") == 1);
  CHECK(j.at("invariants_period").at("period") == 2);
  CHECK(j.at("invariants_period").at("preperiod") == 0);
  std::remove(path.c_str());
}

TEST_CASE("csv output for flat tables") {
  Result r = run({"--format", "csv", "d-dim", "--lambda", "3,1", "--p", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "dim\n2\n");

  Result bad = run({"--format", "csv", "structconst", "--shape", "1", "--mid", "1",
                    "--type", "1", "--alpha", "dp", "--beta", "dp"});
  CHECK(bad.code == 2);
}

TEST_CASE("tabloid arguments accept JSON and reject mismatches") {
  Result ok = run({"structconst", "--shape", "1", "--mid", "1", "--type", "1", "--alpha",
                   R"({"shape":[1],"type":[1],"counts":[[1,0]]})", "--beta", "id", "--n", "6"});
  CHECK(ok.code == 0);

  Result mismatch = run({"structconst", "--shape", "1", "--mid", "1", "--type", "1",
                         "--alpha", R"({"shape":[2],"type":[1],"counts":[[2,0]]})",
                         "--beta", "id", "--n", "6"});
  CHECK(mismatch.code == 2);
}

TEST_CASE("usage and computational errors are separated") {
  CHECK(run({"homdim", "--shape", "1"}).code == 2);          // missing flag
  CHECK(run({"homdim", "--shape", "1,2", "--type", "1"}).code == 2);  // bad partition
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"fi", "--file", "no_such_file.json", "--n0", "4", "--n1", "8", "--p", "2"})
            .code == 2);

  Result comp = run({"d-dim", "--lambda", "3,1", "--p", "4"});  // not a prime
  CHECK(comp.code == 1);
  CHECK(Json::parse(comp.err).contains("error"));

  Result tworow = run({"decomp", "--n", "4", "--m", "3", "--p", "2"});  // m > n/2
  CHECK(tworow.code == 1);
  CHECK(Json::parse(tworow.err).contains("error"));

  Result toosmall = run({"tensor", "--lambda", "2", "--mu", "1", "--n", "3"});
  CHECK(toosmall.code == 1);
}

TEST_CASE("byte-identical output for identical invocations") {
  std::vector<std::vector<std::string>> invocations = {
      {"homdim", "--shape", "1,1", "--type", "2"},
      {"structconst", "--shape", "1", "--mid", "1", "--type", "1", "--alpha", "dp",
       "--beta", "dp"},
      {"decomp", "--n", "8", "--m", "2", "--p", "2", "--seed", "5"},
      {"tensor", "--lambda", "2", "--mu", "1,1"},
      {"check-equiv", "--r", "1", "--p", "3", "--n", "4", "--m", "7"},
  };
  for (const auto& args : invocations) {
    Result a = run(args);
    Result b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("worker count does not change results") {
  Result serial = run({"check-equiv", "--r", "2", "--p", "2", "--n", "5", "--m", "7"});
  Result parallel =
      run({"check-equiv", "--r", "2", "--p", "2", "--n", "5", "--m", "7", "--jobs", "2"});
  REQUIRE(serial.code == 0);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("help exits cleanly") {
  CHECK(run({"--help"}).code == 0);
}
