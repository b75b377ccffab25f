#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <sys/wait.h>

#include "doctest.h"

#include "grassmann/cli.hpp"
#include "grassmann/ring_cache.hpp"

using namespace grassmann;
namespace fs = std::filesystem;
namespace ec = grassmann::cli::exit_code;

namespace {

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;
};

Invocation run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "grassmann");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Invocation r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("grassmann-cli-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Compares with tests/golden/<name>; GRASSMANN_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string& name, const std::string& actual) {
  const fs::path file = fs::path(GOLDEN_DIR) / name;
  const char* update = std::getenv("GRASSMANN_UPDATE_GOLDEN");
  if (update && std::string(update) == "1") {
    std::ofstream(file, std::ios::binary) << actual;
    return;
  }
  REQUIRE_MESSAGE(fs::exists(file), "missing golden file " << file);
  CHECK(slurp(file) == actual);
}

}  // namespace

TEST_CASE("golden output") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
      {"ring_2_1.txt", {"ring", "2", "1"}},
      {"ring_4_2.txt", {"ring", "4", "2"}},
      {"ring_4_2.json", {"--format", "json", "ring", "4", "2"}},
      {"ring_4_3.txt", {"ring", "4", "3"}},
      {"verify_facts_4_2.txt", {"verify-facts", "4", "2"}},
      {"verify_facts_6_3.json", {"--format", "json", "verify-facts", "6", "3"}},
      {"certify_1_2_5_3.txt", {"certify", "1", "2", "5", "3"}},
      {"certify_2_3_9_5.json", {"--format", "json", "certify", "2", "3", "9", "5"}},
      {"certify_2_2_8_5.txt", {"certify", "2", "2", "8", "5"}},
      {"conjecture_4_2.json", {"--format", "json", "conjecture", "4", "2"}},
      {"scan_small.ndjson", {"--format", "json", "scan", "--k-max", "1", "--l-max", "2", "--m-max", "6",
                             "--n-max", "4"}},
  };
  for (const auto& [name, args] : cases) {
    CAPTURE(name);
    const auto r = run_cli(args);
    CHECK(r.err.empty());
    check_golden(name, r.out);
  }
}

TEST_CASE("json output parses and carries a schema") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "json", "ring", "5", "2"},
           {"--format", "json", "verify-facts", "5", "2"},
           {"--format", "json", "certify", "1", "2", "6", "4"},
           {"--format", "json", "conjecture", "5", "2"}}) {
    const auto r = run_cli(args);
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j.contains("schema"));
    CHECK(run_cli(args).out == r.out);
  }
  const auto scan = run_cli({"--format", "json", "scan", "--k-max", "1", "--l-max", "2", "--m-max", "7", "--n-max", "4"});
  CHECK(scan.code == 0);
  std::istringstream lines(scan.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = Json::parse(line);
    CHECK(j["schema"] == "grassmann.rigidity_certificate/1");
    CHECK(j["conclusion"] == "only-trivial");
    ++count;
  }
  CHECK(count > 0);
}

TEST_CASE("invalid parameters") {
  const auto r = run_cli({"ring", "1", "1"});
  CHECK(r.code == ec::invalid);
  CHECK(r.err.find("n >= 2") != std::string::npos);
  CHECK(run_cli({"ring", "4", "4"}).code == ec::invalid);
  CHECK(run_cli({"verify-facts", "3", "0"}).code == ec::invalid);
  CHECK(run_cli({"conjecture", "2", "5"}).code == ec::invalid);
  CHECK(run_cli({"ring", "four", "2"}).code == ec::invalid);
  CHECK(run_cli({}).code == ec::invalid);
  CHECK(run_cli({"--format", "xml", "ring", "4", "2"}).code == ec::invalid);
  CHECK(run_cli({"--help"}).code == ec::ok);
}

TEST_CASE("certify exit codes") {
  CHECK(run_cli({"certify", "1", "2", "5", "3"}).code == ec::ok);
  CHECK(run_cli({"certify", "2", "3", "9", "5"}).code == ec::ok);
  CHECK(run_cli({"certify", "2", "2", "8", "5"}).code == ec::unverified);
  CHECK(run_cli({"--budget-steps", "1", "certify", "3", "4", "8", "6"}).code == ec::inconclusive);
  CHECK(run_cli({"--budget-steps", "1", "conjecture", "5", "2"}).code == ec::inconclusive);
  CHECK(run_cli({"conjecture", "5", "2"}).code == ec::ok);
}

TEST_CASE("exit codes partition outcomes") {
  const std::vector<int> fixed{ec::ok, ec::failed, ec::invalid, ec::integrity, ec::unverified, ec::inconclusive,
                               ec::witness, ec::internal};
  CHECK(std::set<int>(fixed.begin(), fixed.end()).size() == fixed.size());

  std::set<int> conclusions;
  for (auto c : {Conclusion::only_trivial, Conclusion::witness, Conclusion::inconclusive,
                 Conclusion::unverified_hypotheses})
    conclusions.insert(cli::exit_code_for(c));
  CHECK(conclusions.size() == 4);
  CHECK(cli::exit_code_for(Conclusion::only_trivial) == ec::ok);
  CHECK(cli::exit_code_for(Conclusion::witness) == ec::witness);
  CHECK(cli::exit_code_for(Conclusion::inconclusive) == ec::inconclusive);
  CHECK(cli::exit_code_for(Conclusion::unverified_hypotheses) == ec::unverified);

  std::set<int> outcomes;
  for (auto o : {Outcome::only_trivial, Outcome::witness, Outcome::inconclusive})
    outcomes.insert(cli::exit_code_for(o));
  CHECK(outcomes.size() == 3);
  for (int code : outcomes) CHECK(conclusions.count(code) == 1);
  for (int code : conclusions)
    CHECK((code != ec::failed && code != ec::invalid && code != ec::integrity && code != ec::internal));
}

TEST_CASE("cache hit and miss give identical output") {
  TempDir dir;
  const std::vector<std::string> base{"--cache-dir", dir.path.string()};
  for (const auto& cmd : std::vector<std::vector<std::string>>{{"verify-facts", "5", "2"},
                                                               {"--format", "json", "certify", "2", "3", "9", "5"},
                                                               {"ring", "6", "3"}}) {
    auto args = base;
    args.insert(args.end(), cmd.begin(), cmd.end());
    const auto miss = run_cli(args);
    const auto hit = run_cli(args);
    const auto uncached = run_cli(cmd);
    CHECK(miss.code == 0);
    CHECK(hit.out == miss.out);
    CHECK(hit.code == miss.code);
    CHECK(uncached.out == miss.out);
  }
  CHECK(fs::exists(dir.path / "ring-5-2.v1.json"));
  CHECK(fs::exists(dir.path / "ring-9-3.v1.json"));
}

TEST_CASE("cache directory from the environment") {
  TempDir dir;
  ::setenv(kCacheDirEnv, dir.path.c_str(), 1);
  const auto r = run_cli({"ring", "5", "2"});
  ::unsetenv(kCacheDirEnv);
  CHECK(r.code == 0);
  CHECK(fs::exists(dir.path / "ring-5-2.v1.json"));
}

TEST_CASE("corrupted cache gives an integrity error") {
  TempDir dir;
  CHECK(run_cli({"--cache-dir", dir.path.string(), "verify-facts", "4", "2"}).code == 0);
  const auto file = dir.path / "ring-4-2.v1.json";
  Json doc = Json::parse(slurp(file));
  doc["table"]["degrees"][2]["reduction"][0][0] = "7";
  std::ofstream(file, std::ios::binary | std::ios::trunc) << doc.dump();
  const auto r = run_cli({"--cache-dir", dir.path.string(), "verify-facts", "4", "2"});
  CHECK(r.code == ec::integrity);
  CHECK(r.err.find("checksum") != std::string::npos);
}

TEST_CASE("certificate files replay") {
  TempDir dir;
  const auto file = (dir.path / "cert.json").string();
  const auto written = run_cli({"certify", "2", "3", "9", "5", "--output", file});
  CHECK(written.code == 0);
  const auto replay = run_cli({"replay-cert", file});
  CHECK(replay.code == ec::ok);

  Json doc = Json::parse(slurp(file));
  doc["conclusion"] = "witness";
  std::ofstream(file, std::ios::binary | std::ios::trunc) << doc.dump();
  const auto mismatch = run_cli({"replay-cert", file});
  CHECK(mismatch.code == ec::failed);
  CHECK(mismatch.out.find("/conclusion") != std::string::npos);

  std::ofstream(file, std::ios::binary | std::ios::trunc) << "{not json";
  CHECK(run_cli({"replay-cert", file}).code == ec::integrity);
  CHECK(run_cli({"replay-cert", (dir.path / "absent.json").string()}).code == ec::integrity);
}

TEST_CASE("scan policies") {
  const auto empty = run_cli({"scan", "--k-max", "1", "--n-max", "2", "--m-max", "3"});
  CHECK(empty.code == ec::ok);
  CHECK(empty.out.empty());

  const auto starved = run_cli({"--format", "json", "--budget-steps", "1", "scan", "--k-min", "3", "--k-max", "3",
                                "--l-min", "4", "--l-max", "4", "--m-max", "9", "--n-max", "6"});
  CHECK(starved.code == ec::inconclusive);
  std::istringstream lines(starved.out);
  std::string line;
  std::map<std::string, std::string> conclusions;
  while (std::getline(lines, line)) {
    const auto j = Json::parse(line);
    conclusions[j["parameters"].dump()] = j["conclusion"];
  }
  // The starved tuple is reported and the scan goes on to the next one.
  REQUIRE(conclusions.size() == 2);
  CHECK(conclusions[R"({"k":3,"l":4,"m":8,"n":6})"] == "inconclusive");
  CHECK(conclusions[R"({"k":3,"l":4,"m":9,"n":6})"] == "only-trivial");

  const auto serial = run_cli({"--format", "json", "scan", "--m-max", "8", "--jobs", "1"});
  const auto parallel = run_cli({"--format", "json", "scan", "--m-max", "8", "--jobs", "4"});
  CHECK(serial.code == 0);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("the installed binary reports statuses") {
  auto status = [](const std::string& args) {
    const std::string cmd = std::string(CLI_BINARY) + " " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("ring 4 2") == ec::ok);
  CHECK(status("ring 1 1") == ec::invalid);
  CHECK(status("certify 2 2 8 5") == ec::unverified);
}
