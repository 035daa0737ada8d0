#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "doctest.h"
#include "mub/cli.hpp"
#include "mub/io.hpp"

using namespace mub;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "mubtool");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("mubtool_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen, drop, complete, verify") {
  TempDir tmp;
  const auto full = tmp / "full.json", part = tmp / "part.json", done = tmp / "done.json",
             report = tmp / "report.json";
  CHECK(run({"gen", "--dim", "5", "--out", full}).status == exit_code::ok);
  CHECK(run({"drop", "--in", full, "--index", "2", "--out", part}).status == exit_code::ok);
  CHECK(read_collection(part).collection.bases.size() == 5);
  const auto c = run({"complete", "--in", part, "--seed", "7", "--out", done, "--report", report});
  CHECK(c.status == exit_code::ok);
  CHECK(fs::exists(report));
  const auto v = run({"verify", "--in", done});
  CHECK(v.status == exit_code::ok);
  CHECK(v.out.find("\"pass\": true") != std::string::npos);
  CHECK(read_collection(done).collection.bases.size() == 6);
}

TEST_CASE("exit statuses") {
  TempDir tmp;
  const auto full = tmp / "full.json", dup = tmp / "dup.json";
  const auto g6 = run({"gen", "--dim", "6", "--out", tmp / "x.json"});
  CHECK(g6.status == exit_code::not_prime_power);
  CHECK(g6.err.find("6 is not a prime power") != std::string::npos);

  CHECK(run({"gen", "--dim", "3", "--bogus", "--out", full}).status == exit_code::usage);
  CHECK(run({}).status == exit_code::usage);
  CHECK(run({"--help"}).status == exit_code::ok);

  REQUIRE(run({"gen", "--dim", "3", "--out", full}).status == exit_code::ok);
  CHECK(run({"drop", "--in", full, "--index", "4", "--out", dup}).status == exit_code::usage);
  CHECK(run({"verify", "--in", tmp / "missing.json"}).status == exit_code::no_input);
  CHECK(run({"complete", "--in", full, "--out", tmp / "y.json"}).status == exit_code::not_mub);

  // A duplicated basis breaks unbiasedness.
  auto f = read_collection(full);
  f.collection.bases[3] = f.collection.bases[2];
  write_text(dup, serialize(f));
  const auto v = run({"verify", "--in", dup});
  CHECK(v.status == exit_code::verify_failed);
  CHECK(v.out.find("\"pass\": false") != std::string::npos);

  write_text(dup, "{not json");
  CHECK(run({"verify", "--in", dup}).status == exit_code::bad_input);
  CHECK(run({"gen", "--dim", "3", "--out", "/nonexistent/dir/f.json"}).status == exit_code::cant_create);
}
