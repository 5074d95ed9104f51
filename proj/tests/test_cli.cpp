#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "skein/annular.hpp"
#include "skein/format.hpp"

using namespace skein;

namespace {

struct Outcome {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr discarded.
Outcome run(const std::string& args) {
  const char* bin = std::getenv("SKEIN_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "SKEIN_CLI is not set");
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Outcome o;
  std::array<char, 4096> buf{};
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) o.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return o;
}

}  // namespace

TEST_CASE("eval prints the skein class as JSON") {
  const Outcome o = run("eval --n 2 --word \"t s1 t s1^-1\"");
  CHECK(o.status == 0);
  CHECK(o.out == "{\"t^2\":\"-A^-2\",\"t^0\":\"-A^2\"}\n");
}

TEST_CASE("invariant of the unknot") {
  const Outcome o = run("invariant --n 1 --word \"\" --format text");
  CHECK(o.status == 0);
  CHECK(o.out == "1\n");
}

TEST_CASE("strand count is inferred") {
  CHECK(run("eval --word \"t s1 t s1^-1\"").out == run("eval --n 2 --word \"t s1 t s1^-1\"").out);
}

TEST_CASE("presentation text") {
  const Outcome o = run("presentation --N 2 --format text");
  CHECK(o.status == 0);
  CHECK(o.out.find("row 2: (A^0-A^8) t^2 = (-A^8+A^12)*t^0") != std::string::npos);
  CHECK(o.out.find("free part: t^0") != std::string::npos);
}

TEST_CASE("system csv") {
  const Outcome o = run("system --N 3 --format csv");
  CHECK(o.status == 0);
  CHECK(o.out.rfind("n,diagonal,rhs_support,rhs\n", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("").status == 2);
  CHECK(run("eval --n 2 --word \"t q\"").status == 2);
  CHECK(run("eval --n 1 --word \"s2\"").status == 2);
  CHECK(run("eval --n 2 --word t --format csv").status == 2);
  CHECK(run("eval --n 2 --word t --format yaml").status == 2);
  CHECK(run("eval --n 4 --word \"s1 s2 s3 s1 s2 s3 s1 s2 s3\" --cap 3").status == 1);
}

TEST_CASE("output is deterministic") {
  const std::string args = "system --N 4";
  const Outcome a = run(args), b = run(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("JSON output round-trips") {
  constexpr std::uint64_t kSeed = 9501;
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> pick(0, 3);
  const std::array<const char*, 4> letters{"t", "t^-1", "s1", "s1^-1"};
  for (int trial = 0; trial < 12; ++trial) {
    std::string w;
    for (int i = 0; i < 1 + trial % 5; ++i) w += std::string(w.empty() ? "" : " ") + letters[pick(rng)];
    const Outcome o = run("eval --n 2 --word \"" + w + "\"");
    REQUIRE(o.status == 0);
    CHECK_MESSAGE(skein_vector_from_json(Json::parse(o.out)) == evaluate_closure(parse_word(w, 2)), w);
  }
  const Outcome t = run("trace --n 2 --word \"t s1 t s1\"");
  REQUIRE(t.status == 0);
  CHECK(to_json(trace_polynomial_from_json(Json::parse(t.out))) == Json::parse(t.out));
}
