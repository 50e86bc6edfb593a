#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "commsplit/cli.hpp"
#include "commsplit/io.hpp"

using namespace commsplit;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  int code = cli::run(args, out, err, &in);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({"poset", "--n", "2"}).code == 1);           // missing --m
  CHECK(run({"poset", "--n", "2", "--m", "2", "--bogus"}).code == 1);
  CHECK(run({"summands", "--family", "Q", "--m", "2", "--n", "2"}).code == 1);
  CHECK(run({"summands", "--family", "SOodd", "--m", "2", "--n", "2"}).code == 1);
  CHECK(run({"modp", "--p", "6", "--n", "4"}).code == 1);
  CHECK(run({"modp", "--p", "3", "--n", "3"}).code == 1);
}

TEST_CASE("help exits 0") {
  RunResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("poset") != std::string::npos);
}

TEST_CASE("poset csv output") {
  RunResult r = run({"poset", "--n", "1", "--m", "2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "partition,weight,in_s,inverted_primes\n"
        "2|0,0,false,\n"
        "1|1,1,true,\n"
        "0|2,2,true,\n");
  RunResult h = run({"poset", "--n", "1", "--m", "2", "--hasse"});
  CHECK(h.out == "child,parent\n2|0,1|1\n1|1,0|2\n");
}

TEST_CASE("summands csv reproduces the rank-2 table") {
  RunResult r = run({"summands", "--family", "U", "--m", "2", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("partition,flag_poly,D,series,agree") == 0);
  CHECK(r.out.find("0|1|0|1,1 + t^2,3,t^3 + t^5,true") != std::string::npos);
  CHECK(r.out.find("# splitting identity: PASS") != std::string::npos);
  CHECK(r.out.find("# series valid after inverting m! = 2") != std::string::npos);
  // 10 data rows: header + 10 + 4 trailing comment lines.
  int lines = 0;
  for (char c : r.out) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 15);
}

TEST_CASE("summands caveat names the symplectic localization") {
  RunResult r = run({"summands", "--family", "Sp", "--m", "1", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# series valid after inverting 2^m*m! = 2") !=
        std::string::npos);
}

TEST_CASE("homology pretty output matches the worked series") {
  RunResult r = run({"homology", "--family", "U", "--m", "2", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + 2*t + 2*t^2 + 4*t^3 + 5*t^4 + 2*t^5\n");
  RunResult so = run({"homology", "--family", "SOodd", "--m", "1", "--n", "1"});
  CHECK(so.out.find("# identity component") != std::string::npos);
  CHECK(so.out.find("1 + t^3") != std::string::npos);
}

TEST_CASE("modp pretty output shows both assemblies") {
  RunResult r = run({"modp", "--p", "2", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("closed: 1 + t^6 + t^7 + t^8 + t^9 + t^10") != std::string::npos);
  CHECK(r.out.find("gysin:  1 + t^6 + t^7 + t^8 + t^9 + t^10") != std::string::npos);
  CHECK(r.out.find("agree: true") != std::string::npos);
}

TEST_CASE("output is byte-deterministic") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"summands", "--family", "U", "--m", "2", "--n", "2", "--format", "json"},
           {"generate", "--n", "2", "--parts", "1,0,1,0", "--seed", "42"},
           {"poset", "--n", "2", "--m", "2", "--hasse"}}) {
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("generate then classify round trip through files") {
  std::string tuple_file = "cli_test_tuple.json";
  RunResult g = run({"generate", "--n", "2", "--parts", "1,1,2,2", "--seed", "9",
                     "--out", tuple_file});
  REQUIRE(g.code == 0);
  RunResult c = run({"classify", "--in", tuple_file});
  CHECK(c.code == 0);
  Json report = Json::parse(c.out);
  CHECK(report["partition"]["parts"]["00"] == 1);
  CHECK(report["partition"]["parts"]["01"] == 1);
  CHECK(report["partition"]["parts"]["10"] == 2);
  CHECK(report["partition"]["parts"]["11"] == 2);
  CHECK(report["ambiguous"] == false);
  std::remove(tuple_file.c_str());
}

TEST_CASE("classify reads stdin and maps numerical failure to exit 3") {
  UnitaryTuple t{2, 2, {ComplexMatrix(2, 2), ComplexMatrix(2, 2)}};
  t.matrices[0] << 0, 1, 1, 0;
  t.matrices[1] << 1, 0, 0, -1;
  RunResult r = run({"classify"}, tuple_to_json(t).dump());
  CHECK(r.code == 3);
  CHECK(r.err.find("numerical failure") != std::string::npos);
}

TEST_CASE("classify honors tolerance overrides") {
  // Entries at distance ~1e-4 from 1: bit 1 under the default 1e-6, bit 0
  // once --tol-one is loosened past it.
  UnitaryTuple t{1, 1, {ComplexMatrix(1, 1)}};
  t.matrices[0](0, 0) = std::polar(1.0, 1e-4);
  RunResult strict = run({"classify"}, tuple_to_json(t).dump());
  REQUIRE(strict.code == 0);
  CHECK(Json::parse(strict.out)["partition"]["parts"]["1"] == 1);
  RunResult loose =
      run({"classify", "--tol-one", "1e-2"}, tuple_to_json(t).dump());
  REQUIRE(loose.code == 0);
  CHECK(Json::parse(loose.out)["partition"]["parts"]["0"] == 1);
}

TEST_CASE("generate --diagonal emits the exact torus tuple") {
  RunResult r = run({"generate", "--n", "1", "--parts", "1,1", "--seed", "3",
                     "--diagonal"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["n"] == 1);
  CHECK(j["m"] == 2);
  // First diagonal entry is exactly 1 (bit 0 block comes first).
  CHECK(j["matrices"][0][0][0][0] == 1.0);
  CHECK(j["matrices"][0][0][0][1] == 0.0);
}
