#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "weylwalk/cli.hpp"

using weylwalk::run_cli;
using Json = nlohmann::ordered_json;

namespace {

// Scratch files under the system temp directory, removed on destruction.
class Scratch {
 public:
  Scratch() {
    dir_ = std::filesystem::temp_directory_path() /
           ("weylwalk-cli-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  ~Scratch() { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }
  std::string write(const std::string& name, const std::string& text) const {
    const std::string p = path(name);
    std::ofstream f(p, std::ios::binary);
    f << text;
    return p;
  }
  static std::string slurp(const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
  }
  static Json load(const std::string& p) { return Json::parse(slurp(p)); }

 private:
  std::filesystem::path dir_;
};

const char* kDeltaState = R"([
  {"x": [0, 0, 0],
   "up":   {"re": "1", "im": "0", "log2_den": 0},
   "down": {"re": "0", "im": "0", "log2_den": 0}}
])";

}  // namespace

TEST_CASE("propagate: frozen corner value as JSON") {
  Scratch tmp;
  const std::string out = tmp.path("corner.json");
  CHECK(run_cli({"propagate", "--to", "2,2,2", "--t", "2", "--out", out}) == 0);
  const Json j = Scratch::load(out);
  CHECK(j["t"] == 2);
  CHECK(j["chirality"] == "+");
  CHECK(j["from"] == Json::array({0, 0, 0}));
  CHECK(j["to"] == Json::array({2, 2, 2}));
  CHECK(j["entries"][0][1]["re"] == "0");
  CHECK(j["entries"][0][1]["im"] == "-1");
  CHECK(j["entries"][0][1]["log2_den"] == 3);
  CHECK(j["entries"][0][0]["re"] == "0");
  CHECK(j["entries"][0][0]["log2_den"] == 0);
  CHECK(j["float_view"][0][1] == Json::array({0.0, -0.125}));
}

TEST_CASE("propagate: zero steps, negative chirality, csv") {
  Scratch tmp;
  const std::string out = tmp.path("id.json");
  CHECK(run_cli({"propagate", "--from", "3,1,-1", "--to", "3,1,-1", "--t", "0",
                 "--chi", "-", "--out", out}) == 0);
  const Json j = Scratch::load(out);
  CHECK(j["chirality"] == "-");
  CHECK(j["entries"][0][0]["re"] == "1");
  CHECK(j["entries"][0][1]["re"] == "0");
  CHECK(j["entries"][1][1]["re"] == "1");

  const std::string csv = tmp.path("corner.csv");
  CHECK(run_cli({"propagate", "--to", "2,2,2", "--t", "2", "--format", "csv",
                 "--out", csv}) == 0);
  const std::string text = Scratch::slurp(csv);
  CHECK(text.rfind("t,chirality,from_x1,", 0) == 0);
  CHECK(text.find("2,+,0,0,0,2,2,2,0,1,0,-1,3,0,-0.125") != std::string::npos);
  // Header plus one line per matrix entry.
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}

TEST_CASE("propagate: usage errors and cone misses") {
  CHECK(run_cli({"propagate", "--to", "1,0,0", "--t", "1"}) == 64);  // parity
  CHECK(run_cli({"propagate", "--to", "1,2", "--t", "1"}) == 64);
  CHECK(run_cli({"propagate", "--to", "a,b,c", "--t", "1"}) == 64);
  CHECK(run_cli({"propagate", "--to", "0,0,0", "--t", "-1"}) == 64);
  CHECK(run_cli({"propagate", "--t", "1"}) == 64);  // --to is required

  // Outside the cone: strict mode signals it, default mode emits zeros.
  CHECK(run_cli({"propagate", "--to", "4,4,4", "--t", "1", "--strict"}) == 2);
  Scratch tmp;
  const std::string out = tmp.path("zero.json");
  CHECK(run_cli({"propagate", "--to", "4,4,4", "--t", "1", "--out", out}) == 0);
  const Json j = Scratch::load(out);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      CHECK(j["entries"][r][c]["re"] == "0");
      CHECK(j["entries"][r][c]["im"] == "0");
    }
}

TEST_CASE("evolve: one step of a point source") {
  Scratch tmp;
  const std::string state = tmp.write("delta.json", kDeltaState);
  const std::string out = tmp.path("evolved.json");
  CHECK(run_cli({"evolve", "--state", state, "--t", "1", "--out", out}) == 0);
  const Json j = Scratch::load(out);
  CHECK(j["t"] == 1);
  CHECK(j["engine"] == "step");
  CHECK(j["site_count"] == 4);
  CHECK(j["norm2"]["re"] == "1");
  CHECK(j["norm2"]["im"] == "0");
  CHECK(j["norm2"]["log2_den"] == 0);
  REQUIRE(j["sites"].size() == 4);
  double total = 0;
  for (const auto& row : j["sites"]) total += row["probability"].get<double>();
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("evolve: both engines produce the same state") {
  Scratch tmp;
  const std::string state = tmp.write("delta.json", kDeltaState);
  const std::string a = tmp.path("step.json"), b = tmp.path("convolve.json");
  CHECK(run_cli({"evolve", "--state", state, "--t", "4", "--out", a}) == 0);
  CHECK(run_cli({"evolve", "--state", state, "--t", "4", "--engine", "convolve",
                 "--out", b}) == 0);
  const Json ja = Scratch::load(a), jb = Scratch::load(b);
  CHECK(jb["engine"] == "convolve");
  CHECK(ja["sites"] == jb["sites"]);
  CHECK(ja["norm2"] == jb["norm2"]);

  const std::string csv = tmp.path("evolved.csv");
  CHECK(run_cli({"evolve", "--state", state, "--t", "1", "--format", "csv",
                 "--out", csv}) == 0);
  const std::string text = Scratch::slurp(csv);
  CHECK(text.rfind("x1,x2,x3,up_re,", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}

TEST_CASE("evolve: malformed input files") {
  Scratch tmp;
  CHECK(run_cli({"evolve", "--state", tmp.path("missing.json"), "--t", "1"}) ==
        65);
  const std::string bad = tmp.write("bad.json", "{ not json");
  CHECK(run_cli({"evolve", "--state", bad, "--t", "1"}) == 65);
  const std::string badrow = tmp.write("badrow.json", R"([{"x": [0,0]}])");
  CHECK(run_cli({"evolve", "--state", badrow, "--t", "1"}) == 65);
  const std::string mixed = tmp.write("mixed.json", R"([
    {"x": [0,0,0], "up": {"re":"1","im":"0","log2_den":0},
                   "down": {"re":"0","im":"0","log2_den":0}},
    {"x": [1,1,1], "up": {"re":"1","im":"0","log2_den":0},
                   "down": {"re":"0","im":"0","log2_den":0}}
  ])");
  CHECK(run_cli({"evolve", "--state", mixed, "--t", "1"}) == 65);
}

TEST_CASE("cone: full table and thread determinism") {
  Scratch tmp;
  const std::string a = tmp.path("cone1.json"), b = tmp.path("cone4.json");
  CHECK(run_cli({"cone", "--t", "2", "--out", a}) == 0);
  CHECK(run_cli({"cone", "--t", "2", "--jobs", "4", "--out", b}) == 0);
  const Json j = Scratch::load(a);
  CHECK(j["site_count"] == 27);
  CHECK(j["propagators"].size() == 27);
  CHECK(j["from"] == Json::array({0, 0, 0}));
  CHECK(Scratch::slurp(a) == Scratch::slurp(b));

  CHECK(run_cli({"cone", "--t", "2", "--jobs", "0"}) == 64);
}

TEST_CASE("verify: quick level passes") {
  Scratch tmp;
  const std::string out = tmp.path("verify.txt");
  CHECK(run_cli({"verify", "--level", "quick", "--out", out}) == 0);
  const std::string text = Scratch::slurp(out);
  CHECK(text.find("PASS  one-step-unitarity") != std::string::npos);
  CHECK(text.find("suites passed") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("verify: single suite, json format, injected fault") {
  Scratch tmp;
  const std::string out = tmp.path("verify.json");
  CHECK(run_cli({"verify", "--suite", "one-step-unitarity", "--level", "quick",
                 "--format", "json", "--out", out}) == 0);
  const Json j = Scratch::load(out);
  CHECK(j["passed"] == true);
  REQUIRE(j["suites"].size() == 1);
  CHECK(j["suites"][0]["suite"] == "one-step-unitarity");
  CHECK(j["suites"][0]["passed"] == true);
  CHECK(j["suites"][0]["checks"].get<std::int64_t>() > 0);

  // A corrupted hopping matrix must be caught.
  const std::string fout = tmp.path("fault.txt");
  CHECK(run_cli({"verify", "--suite", "one-step-unitarity", "--level", "quick",
                 "--inject-fault", "--out", fout}) == 1);
  CHECK(Scratch::slurp(fout).find("FAIL") != std::string::npos);

  CHECK(run_cli({"verify", "--suite", "no-such-suite"}) == 64);
}

TEST_CASE("bench: budget gates the engines") {
  Scratch tmp;
  const std::string out = tmp.path("bench.json");
  CHECK(run_cli({"bench", "--t-max", "2", "--budget", "1", "--out", out}) == 0);
  const Json j = Scratch::load(out);
  CHECK(j["t_max"] == 2);
  std::vector<std::string> engines;
  for (const auto& row : j["rows"]) {
    engines.push_back(row["engine"].get<std::string>());
    CHECK(row["seconds"].get<double>() >= 0);
    CHECK(row["sites"].get<std::int64_t>() >= 1);
  }
  // Closed form always runs; with budget 1 only the one-triple t=1 cell is
  // cheap enough for enumeration, and no stepping or cone fill fits.
  CHECK(std::count(engines.begin(), engines.end(), "closed-form") == 2);
  CHECK(std::count(engines.begin(), engines.end(), "enumeration") == 1);
  CHECK(std::count(engines.begin(), engines.end(), "stepping") == 0);
  CHECK(std::count(engines.begin(), engines.end(), "cone-closed-form") == 0);
}

TEST_CASE("top-level usage") {
  CHECK(run_cli({"--help"}) == 0);
  CHECK(run_cli({}) == 64);
  CHECK(run_cli({"bogus"}) == 64);
  CHECK(run_cli({"propagate", "--to", "0,0,0", "--t", "1", "--chi", "x"}) == 64);
  CHECK(run_cli({"evolve", "--state", "s.json", "--t", "1", "--engine", "x"}) ==
        64);
}
