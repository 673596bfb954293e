#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string &args) {
  std::string cmd = std::string(GRIG_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' '))
    s.pop_back();
  return s;
}

} // namespace

TEST_CASE("cli: basic commands") {
  CHECK(trim(run("reduce abcd").out) == "a");
  CHECK(run("eq bc d").status == 0);
  CHECK(run("order ab").status == 0);
  CHECK(trim(run("order ab").out) == "16");
  CHECK(run("--order-cap 3 order ab").status == 3);
  CHECK(trim(run("act a 0110").out) == "1110");
  CHECK(trim(run("first-active d").out) == "2");
  CHECK(trim(run("lift b").out) == "ada");
  CHECK(trim(run("lift --second c").out) == "b");
}

TEST_CASE("cli: exit codes") {
  CHECK(run("reduce abxa").status == 2);
  CHECK(run("lemma1 --k 1^+1 --g b --m 1").status == 2);
  CHECK(run("quotient --level 9").status == 3);
  CHECK(run("--level-cap 1 first-active d").status == 3);
  CHECK(run("lemma1 --k 1^+1 --g 1 --m 3").status == 0);
  CHECK(run("lemma2 --x a --y b --m 2").status == 0);
  CHECK(run("engel-probe --g a --x b -N 10").status == 0);
  CHECK(run("engel-probe --g ad --x cabababab -N 10").status == 1);
  CHECK(run("search-pair -N 0").status == 2);
}

TEST_CASE("cli: json output is deterministic") {
  Run a = run("--json replay-left --x a -N 3");
  Run b = run("--json replay-left --x a -N 3");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["kind"] == "BoundedLeftRefutation");

  Run s1 = run("--json --seed 5 survey --samples 5 -N 20");
  Run s2 = run("--json --seed 5 survey --samples 5 -N 20");
  CHECK(s1.out == s2.out);
  CHECK(nlohmann::json::parse(s1.out).contains("depth_histogram"));
}

TEST_CASE("cli: verify accepts emitted and rejects tampered certificates") {
  auto dir = std::filesystem::temp_directory_path() / "grig_cli_test";
  std::filesystem::create_directories(dir);
  auto good = dir / "good.json", bad = dir / "bad.json";
  REQUIRE(run("replay-right --x a -N 2 --out " + good.string()).status == 0);
  CHECK(run("verify " + good.string()).status == 0);

  nlohmann::json j;
  {
    std::ifstream in(good);
    in >> j;
  }
  j["inputs"]["x"] = "1";
  {
    std::ofstream out(bad);
    out << j.dump();
  }
  CHECK(run("verify " + bad.string()).status == 1);
  std::filesystem::remove_all(dir);
}
