#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "harness/config.hpp"
#include "harness/runner.hpp"

namespace fs = std::filesystem;
using namespace shallowpack::harness;

namespace {

fs::path scratch_dir() {
  const char* env = std::getenv("SHALLOWPACK_TEST_TMP");
  fs::path dir = env ? fs::path(env) : fs::temp_directory_path() / "shallowpack_cli_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;
};

Invocation cli(const std::string& args) {
  const auto out = scratch_dir() / "stdout.txt";
  const auto err = scratch_dir() / "stderr.txt";
  const std::string cmd = std::string(SHALLOWPACK_CLI_PATH) + " " + args + " > " + out.string() +
                          " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  Invocation inv;
  inv.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  inv.out = read_file(out);
  inv.err = read_file(err);
  return inv;
}

ConfigFile parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::size_t error_line(const std::string& text) {
  try {
    auto cfg = parse(text);
    for (const auto& e : cfg.experiments) validate(e);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return 0;
}

const char* kGridConfig =
    "# lower bound\n"
    "[grid]\n"
    "kind = grid-lowerbound\n"
    "n = 64\n"
    "delta = 4\n";

const char* kTailConfig =
    "[tail]\n"
    "kind = tail\n"
    "n = 32\n"
    "k = 8\n"
    "m = 9\n"
    "t = 2e, 8, 12\n"
    "trials = 500\n"
    "seed = 3\n";

}  // namespace

TEST_CASE("config parsing") {
  auto cfg = parse(std::string(kGridConfig) + "\n; second\n" + kTailConfig);
  REQUIRE(cfg.experiments.size() == 2);
  const auto& tail = cfg.experiments[1];
  CHECK(tail.name == "tail");
  CHECK(tail.kind() == "tail");
  CHECK(tail.get_size("n") == 32);
  CHECK(tail.get_u64("seed", 0) == 3);
  CHECK(tail.get_u64("missing", 7) == 7);
  const auto ts = tail.get_doubles("t");
  REQUIRE(ts.size() == 3);
  CHECK(ts[0] == doctest::Approx(2 * 2.718281828459045));
  CHECK(ts[2] == 12.0);
  CHECK(tail.find("k")->line == 11);
  CHECK_THROWS_AS(tail.get_size("absent"), ConfigError);
}

TEST_CASE("config round trip") {
  auto cfg = parse(std::string(kGridConfig) + kTailConfig);
  auto again = parse(serialize(cfg));
  CHECK(serialize(again) == serialize(cfg));
  REQUIRE(again.experiments.size() == cfg.experiments.size());
  for (std::size_t i = 0; i < cfg.experiments.size(); ++i) {
    CHECK(again.experiments[i].name == cfg.experiments[i].name);
    REQUIRE(again.experiments[i].entries.size() == cfg.experiments[i].entries.size());
    for (std::size_t j = 0; j < cfg.experiments[i].entries.size(); ++j) {
      CHECK(again.experiments[i].entries[j].key == cfg.experiments[i].entries[j].key);
      CHECK(again.experiments[i].entries[j].value == cfg.experiments[i].entries[j].value);
    }
  }
}

TEST_CASE("config diagnostics name the line") {
  CHECK(error_line("[a]\nkind = grid-lowerbound\nn = sixty\ndelta = 4\n") == 3);
  CHECK(error_line("[a]\nkind = nope\n") == 2);
  CHECK(error_line("[a]\nkind = grid-lowerbound\nn = 64\ndelta = 4\ncolour = red\n") == 5);
  CHECK(error_line("[a]\nkind = tail\nn = 32\nk = 8\nm = 9\nt = 2e\ntrials = 0\n") == 7);
  CHECK(error_line("[a]\nkind = grid-lowerbound\nn = 64\nn = 32\n") == 4);
  CHECK(error_line("[a]\nkind = grid-lowerbound\n[a]\n") == 3);
  CHECK(error_line("[a]\njust text\n") == 2);
  CHECK(error_line("n = 4\n") == 1);
  CHECK(error_line("[a]\nkind = grid-lowerbound\nn = 64\ndelta = 4\nformat = xml\n") == 5);
  CHECK(error_line(kGridConfig) == 0);
}

TEST_CASE("overrides replace seed, trials and format everywhere") {
  auto cfg = parse(std::string(kGridConfig) + kTailConfig);
  apply(cfg, Overrides{11, 20, "json"});
  for (const auto& e : cfg.experiments) {
    CHECK(e.get_u64("seed", 0) == 11);
    CHECK(e.get_size("trials") == 20);
    CHECK(e.get_string("format") == "json");
  }
}

TEST_CASE("grid experiment verifies the construction") {
  auto cfg = parse(kGridConfig);
  auto result = run_experiment(cfg.experiments[0]);
  CHECK(result.verified);
  CHECK(result.text.find("256") != std::string::npos);
  CHECK(result.text == run_experiment(cfg.experiments[0]).text);
}

TEST_CASE("runs are reproducible and seed-dependent") {
  auto cfg = parse(kTailConfig);
  const auto a = run_experiment(cfg.experiments[0]).text;
  const auto b = run_experiment(cfg.experiments[0]).text;
  CHECK(a == b);
  CHECK(a.rfind("n,k,sample_size,trials,t,threshold,empirical,exact,bound", 0) == 0);
  apply(cfg, Overrides{4, std::nullopt, "json"});
  const auto json = run_experiment(cfg.experiments[0]).text;
  CHECK(json.front() == '{');
}

TEST_CASE("fit exponents") {
  std::istringstream square("x,packing_size\n2,4\n4,16\n8,64\n");
  auto f = fit_exponents(square, "x");
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.points == 3);
  std::istringstream flat("x,y\n2,3\n4,3\n8,3\n");
  CHECK(fit_exponents(flat, "x", "y").slope == doctest::Approx(0.0));
  std::istringstream block("x,y\n2,2\n4,4\n8,8\ntotal\n1\n");
  CHECK(fit_exponents(block, "x", "y").slope == doctest::Approx(1.0));
  std::istringstream short_csv("x,y\n2,4\n4,16\n");
  CHECK_THROWS_AS(fit_exponents(short_csv, "x", "y"), std::invalid_argument);
  std::istringstream missing("x,y\n2,4\n4,16\n8,1\n");
  CHECK_THROWS_AS(fit_exponents(missing, "z", "y"), std::invalid_argument);
  std::istringstream zero("x,y\n2,4\n0,16\n8,1\n");
  CHECK_THROWS_AS(fit_exponents(zero, "x", "y"), std::invalid_argument);
}

TEST_CASE("cli run writes byte-identical output") {
  const auto out = scratch_dir() / "tail.csv";
  fs::remove(out);
  const auto cfg = write_file("tail.ini", std::string(kTailConfig) + "output = " + out.string() + "\n");
  REQUIRE(cli("run " + cfg.string()).code == 0);
  const auto first = read_file(out);
  REQUIRE(cli("run " + cfg.string()).code == 0);
  CHECK(read_file(out) == first);
  CHECK_FALSE(first.empty());
  REQUIRE(cli("run " + cfg.string() + " --seed 9 --format json").code == 0);
  CHECK(read_file(out).front() == '{');
}

TEST_CASE("cli exit codes") {
  const auto grid = write_file("grid.ini", kGridConfig);
  auto ok = cli("run " + grid.string());
  CHECK(ok.code == 0);
  CHECK(ok.out.find("256") != std::string::npos);

  const auto bad = write_file("bad.ini", "[a]\nkind = grid-lowerbound\nn = 64\ndelta = four\n");
  auto invalid = cli("run " + bad.string());
  CHECK(invalid.code == 1);
  CHECK(invalid.err.find("line 4") != std::string::npos);
  CHECK(invalid.err.find("delta") != std::string::npos);

  CHECK(cli("run " + (scratch_dir() / "does_not_exist.ini").string()).code == 1);
  CHECK(cli("run " + grid.string() + " --format xml").code == 1);
  CHECK(cli("bogus").code == 1);

  const auto blocker = write_file("blocker", "x");
  const auto unwritable = write_file(
      "unwritable.ini", std::string(kGridConfig) + "output = " + (blocker / "out.csv").string() + "\n");
  CHECK(cli("run " + unwritable.string()).code == 2);
}

TEST_CASE("cli gen and fit") {
  const auto sys = scratch_dir() / "grid.txt";
  REQUIRE(cli("gen grid --n 16 --delta 2 -o " + sys.string()).code == 0);
  CHECK(read_file(sys).rfind("n=16 m=64\n", 0) == 0);

  const auto half = scratch_dir() / "half.txt";
  const auto pts = scratch_dir() / "half.csv";
  REQUIRE(cli("gen halfplanes --n 10 --seed 3 -o " + half.string() + " --points " + pts.string()).code == 0);
  CHECK(read_file(half).rfind("n=10 m=92\n", 0) == 0);
  CHECK(read_file(pts).rfind("dim=2\n", 0) == 0);
  CHECK(cli("gen cubes -o " + half.string()).code == 1);

  const auto csv = write_file("fit.csv", "delta,packing_size\n4,64\n8,16\n16,4\n");
  auto fit = cli("fit " + csv.string() + " --col delta");
  CHECK(fit.code == 0);
  CHECK(fit.out == "slope,slope_se,points\n-2,0,3\n");
  CHECK(cli("fit " + csv.string() + " --col n").code == 1);
}

TEST_CASE("thread cap does not change results") {
  const auto out1 = scratch_dir() / "scale1.csv";
  const auto out4 = scratch_dir() / "scale4.csv";
  const std::string body =
      "[scale]\nkind = packing-scaling\ngenerator = halfplanes\nn = 64\nk = 16\n"
      "delta = 4, 8, 16\nsweep = delta\ntrials = 4\nseed = 2\n";
  const auto c1 = write_file("scale1.ini", body + "output = " + out1.string() + "\n");
  const auto c4 = write_file("scale4.ini", body + "output = " + out4.string() + "\n");
  REQUIRE(std::system(("SHALLOWPACK_THREADS=1 " + std::string(SHALLOWPACK_CLI_PATH) + " run " +
                       c1.string() + " > /dev/null").c_str()) == 0);
  REQUIRE(std::system(("SHALLOWPACK_THREADS=4 " + std::string(SHALLOWPACK_CLI_PATH) + " run " +
                       c4.string() + " > /dev/null").c_str()) == 0);
  CHECK(read_file(out1) == read_file(out4));
}
