#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "gsb/cli.hpp"
#include "gsb/io.hpp"

using namespace gsb;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;

  std::string last_line() const {
    const auto end = out.find_last_not_of('\n');
    const auto start = out.rfind('\n', end);
    return out.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
  }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("gsb_cli_" + name)).string();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("complete G2 prints the basis and a summary") {
  const Result r = run({"complete", "--type", "G2"});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "alphabet: x1 x2\nx1 x1 - 1\nx2 x2 - 1\nx2 x1 x2 x1 x2 x1 - x1 x2 x1 x2 x1 x2\n"));
  CHECK(r.last_line().rfind("status=complete elements=3 ", 0) == 0);
}

TEST_CASE("complete writes the output file") {
  const std::string path = temp_path("f4.basis");
  const Result r = run({"complete", "--type", "F4", "--output", path, "--threads", "2"});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "elements=21"));
  CHECK(read_basis(read_file(path)).size() == 21);
  std::filesystem::remove(path);
}

TEST_CASE("truncation exits 2") {
  const std::string pres = temp_path("custom.pres");
  write_file(pres, "generators: a b\nb a b = a b b\n");
  const Result r = run({"complete", "--file", pres, "--max-degree", "10"});
  CHECK(r.code == cli::kTruncated);
  CHECK(contains(r.last_line(), "status=truncated"));
  CHECK(contains(r.last_line(), "reason="));
  std::filesystem::remove(pres);
}

TEST_CASE("checkpoint and resume reproduce the basis") {
  const std::string out1 = temp_path("e6a.basis"), out2 = temp_path("e6b.basis");
  CHECK(run({"complete", "--type", "E6", "--output", out1, "--checkpoint-every", "1"}).code == cli::kOk);
  REQUIRE(std::filesystem::exists(out1 + ".ckpt"));
  const Result resumed = run({"complete", "--resume", out1 + ".ckpt", "--output", out2});
  CHECK(resumed.code == cli::kOk);
  CHECK(read_file(out1) == read_file(out2));
  for (const auto& p : {out1, out1 + ".ckpt", out2}) std::filesystem::remove(p);
}

TEST_CASE("verify G2 and F4 exit 0") {
  const Result g2 = run({"verify", "--type", "G2"});
  CHECK(g2.code == cli::kOk);
  CHECK(contains(g2.last_line(), "match=exact"));
  const Result f4 = run({"verify", "--type", "F4"});
  CHECK(f4.code == cli::kOk);
  CHECK(contains(f4.last_line(), "match=leading-words"));
  CHECK(contains(f4.out, "claim alpha11 same-lead oracle=holds"));
  CHECK(contains(f4.out, "claim theta7 match oracle=holds"));
}

TEST_CASE("verify against a basis file") {
  const std::string path = temp_path("g2.basis");
  write_file(path, run({"complete", "--type", "G2"}).out.substr(0, run({"complete", "--type", "G2"}).out.rfind("status=")));
  CHECK(run({"verify", "--type", "G2", "--basis", path}).code == cli::kOk);
  CHECK(run({"verify", "--basis", path}).code == cli::kOk);
  write_file(path, "alphabet: x1 x2\nx1 x1 - 1\nx2 x2 - 1\nx1 x2 x1 - x2 x1\n");
  const Result open = run({"verify", "--basis", path});
  CHECK(open.code == cli::kMismatch);
  CHECK(contains(open.out, "witness "));
  CHECK(contains(open.last_line(), "closed=no"));
  std::filesystem::remove(path);
}

TEST_CASE("verify E7 as printed reports the failing claims") {
  const Result r = run({"verify", "--type", "E7", "--as-printed"});
  CHECK(r.code == cli::kMismatch);
  CHECK(contains(r.out, "oracle=fails"));
  CHECK(contains(r.out, "misoriented"));
  CHECK(contains(r.out, "unclaimed "));
  CHECK(contains(r.last_line(), "variant=as-printed"));
  CHECK(contains(r.last_line(), "not_in_ideal=6"));
  const Result c = run({"verify", "--type", "E7", "--corrected"});
  CHECK(contains(c.last_line(), "not_in_ideal=0"));
  CHECK(contains(c.last_line(), "oracle_failures=0"));
}

TEST_CASE("verify without a printed basis is a usage error") {
  CHECK(run({"verify", "--type", "A3"}).code == cli::kUsage);
  CHECK(run({"verify", "--type", "G2", "--as-printed", "--corrected"}).code == cli::kUsage);
}

TEST_CASE("nf") {
  CHECK(run({"nf", "--type", "G2", "x1 x1"}).out.rfind("1\n", 0) == 0);
  CHECK(run({"nf", "--type", "G2", "x2 x1 x2 x1 x2 x1"}).out.rfind("x1 x2 x1 x2 x1 x2\n", 0) == 0);
  CHECK(run({"nf", "--type", "E6", "x5 x3 x5"}).out.rfind("x3 x5 x3\n", 0) == 0);
  CHECK(run({"nf", "--type", "G2", "x1 x7"}).code == cli::kUsage);
}

TEST_CASE("nf refuses unverified bases unless forced") {
  const std::string path = temp_path("open.basis");
  write_file(path, "alphabet: x1 x2\nx1 x1 - 1\nx2 x2 - 1\nx1 x2 x1 - x2 x1\n");
  const Result refused = run({"nf", "--basis", path, "x1 x2 x1"});
  CHECK(refused.code == cli::kUsage);
  CHECK(contains(refused.err, "--force"));
  const Result forced = run({"nf", "--basis", path, "--force", "x1 x2 x1"});
  CHECK(forced.code == cli::kOk);
  CHECK(forced.out.rfind("x2 x1\n", 0) == 0);
  std::filesystem::remove(path);
}

TEST_CASE("count and growth") {
  const Result f4 = run({"count", "--type", "F4"});
  CHECK(f4.code == cli::kOk);
  CHECK(f4.out.rfind("1152\n", 0) == 0);
  CHECK(contains(f4.last_line(), "oracle=1152 agree=yes"));
  const Result g2 = run({"growth", "--type", "G2"});
  CHECK(g2.out.rfind("0 1\n1 2\n2 2\n3 2\n4 2\n5 2\n6 1\ntotal 12\n", 0) == 0);
  CHECK(contains(g2.last_line(), "palindromic=yes"));
}

TEST_CASE("count on an infinite language exits 3") {
  const std::string pres = temp_path("inf.json");
  write_file(pres, R"({"n": 2, "matrix": [[1, 0], [0, 1]], "marking": ["a", "b"]})");
  const Result r = run({"count", "--file", pres, "--horizon", "5"});
  CHECK(r.code == cli::kInfinite);
  CHECK(r.out.rfind("0 1\n1 2\n2 2\n3 2\n4 2\n5 2\n", 0) == 0);
  CHECK(contains(r.last_line(), "finite=no horizon=5"));
  std::filesystem::remove(pres);
}

TEST_CASE("oracle") {
  const Result r = run({"oracle", "--type", "G2", "--samples", "200", "--seed", "7"});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "roots 12\norder 12\n"));
  CHECK(contains(r.last_line(), "cross_check=pass"));
  const Result skip = run({"oracle", "--type", "E8", "--samples", "0"});
  CHECK(skip.code == cli::kOk);
  CHECK(contains(skip.out, "roots 240\norder 696729600\n"));
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"complete"}).code == cli::kUsage);
  CHECK(run({"complete", "--type", "H4"}).code == cli::kUsage);
  CHECK(run({"complete", "--type", "G2", "--file", "x"}).code == cli::kUsage);
  CHECK(run({"complete", "--file", temp_path("missing")}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
  const std::string bad = temp_path("bad.pres");
  write_file(bad, "generators: a\na a = c\n");
  const Result r = run({"complete", "--file", bad});
  CHECK(r.code == cli::kUsage);
  CHECK(contains(r.err, "2:7"));
  std::filesystem::remove(bad);
}

TEST_CASE("output does not depend on the thread count") {
  const Result one = run({"complete", "--type", "E6", "--threads", "1"});
  const Result four = run({"complete", "--type", "E6", "--threads", "4"});
  CHECK(one.out.substr(0, one.out.rfind("status=")) == four.out.substr(0, four.out.rfind("status=")));
  const Result o1 = run({"oracle", "--type", "F4", "--threads", "1"});
  const Result o4 = run({"oracle", "--type", "F4", "--threads", "4"});
  CHECK(o1.out.substr(0, o1.out.rfind("roots=")) == o4.out.substr(0, o4.out.rfind("roots=")));
}
