#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hgsearch/cli.hpp"
#include "hgsearch/serialize.hpp"

using hgsearch::cli::run;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("hgsearch_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("eval") {
  auto r = call({"eval", "--a", "2", "--b", "0", "--c", "0", "--b0", "1/3", "--c0", "-1/3", "--x", "-1", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "-3\n");
  auto u = call({"eval", "--a", "1", "--b", "0", "--c", "0", "--b0", "2", "--c0", "-1", "--x", "3", "--n", "2"});
  CHECK(u.code == 1);
  CHECK(u.out == "undefined\n");
  auto q = call({"eval", "--a", "1", "--b", "0", "--c", "0", "--b0", "2", "--c0", "5", "--x", "quad:1/2+1/2*sqrt(-3)",
                 "--n", "1", "--json"});
  CHECK(q.code == 0);
  auto j = nlohmann::json::parse(q.out);
  CHECK(j.contains("value"));
}

TEST_CASE("guess") {
  auto r = call({"guess", "--a", "1", "--b", "0", "--c", "0", "--b0", "2", "--c0", "5", "--x", "1", "--degree", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(n+3)/(n+5)") != std::string::npos);
  auto no = call({"guess", "--a", "1", "--b", "0", "--c", "0", "--b0", "1/3", "--c0", "1/5", "--x", "2", "--degree", "2"});
  CHECK(no.code == 1);
}

TEST_CASE("solvex on the omega family") {
  auto r = call({"solvex", "--a", "1", "--b", "-3", "--c", "-2", "--b0", "-1", "--c0", "0", "--degree", "10", "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  int strange = 0;
  for (const auto& c : j.at("candidates")) {
    if (c.at("classification") == "Strange" && !c.at("suppressed").get<bool>()) ++strange;
  }
  CHECK(strange == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"eval", "--a", "1"}).code == 2);
  CHECK(call({"eval", "--a", "1", "--b", "0", "--c", "0", "--b0", "two", "--c0", "5", "--x", "1", "--n", "1"}).code == 2);
  CHECK(call({"search", "--grid-bound", "0", "--out", "x"}).code == 2);
  CHECK(call({"search", "--grid-bound", "1", "--denominator", "2", "--all-denominators-up-to", "2", "--out", "x"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("I/O errors exit 3") {
  CHECK(call({"report", "/nonexistent/dir/catalog.jsonl"}).code == 3);
  CHECK(call({"search", "--grid-bound", "1", "--out", "/nonexistent/dir/cat.jsonl"}).code == 3);
}

TEST_CASE("search, report, dedup") {
  fs::path dir = scratch_dir("search");
  const std::string cat = (dir / "cat.jsonl").string();
  auto s = call({"search", "--grid-bound", "1", "--denominator", "2", "--degree", "2", "--jobs", "1", "--out", cat});
  CHECK(s.code == 0);
  auto summary = nlohmann::json::parse(s.out);
  CHECK(summary.at("grid_size") == 225);
  auto rep = call({"report", cat, "--audit"});
  CHECK(rep.code == 0);
  CHECK(rep.out.find("suppressed") != std::string::npos);
  auto d = call({"dedup", cat, "--out", (dir / "clean.jsonl").string()});
  CHECK(d.code == 0);
  fs::remove_all(dir);
}

TEST_CASE("verify commands") {
  auto t = call({"verify-theorem1", "--r-max", "2", "--b", "1/3", "--b", "-5/2", "--n-max", "4"});
  CHECK(t.code == 0);
  auto c = call({"verify-conjecture1", "--i-min", "0", "--i-max", "0", "--j-min", "-1", "--j-max", "0"});
  CHECK(c.code == 0);
}
