// Spawns the installed CLI binary and checks the documented contract:
// verbs, exit codes, and byte-stable JSON.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

std::string cli_path() {
  const char* path = std::getenv("BRAIDFORGE_CLI");
  REQUIRE_MESSAGE(path != nullptr, "BRAIDFORGE_CLI must point at the binary");
  return path;
}

RunResult run(const std::string& args, const std::string& stdin_data = "") {
  std::string cmd;
  if (!stdin_data.empty()) cmd += "printf '%s' \"" + stdin_data + "\" | ";
  cmd += cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    output.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("build emits braid text") {
  RunResult r = run("build \"torus 2 3\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2: 1 1 1\n");
  CHECK(run("build \"klink 6,2 4,3\"").exit_code == 0);
  CHECK(run("build \"cable (torus 2 3) 2 -1\"").output.substr(0, 2) == "4:");
  // stdin input
  CHECK(run("build -", "ttk 5 4 2 1").output ==
        "5: 1 2 3 4 1 2 3 4 1 2 3 4 1 2 3 4 1 1\n");
  // relaxed mode admits non-canonical K-specs
  CHECK(run("build \"klink 3,1 4,1\"").exit_code == 1);
  RunResult relaxed = run("build --relaxed \"klink 3,1 4,1\"");
  CHECK(relaxed.exit_code == 0);
  CHECK(relaxed.output == "4: 1 2 1 2 3\n");
  // multi-component cables are permitted and flagged
  RunResult link_cable = run("build \"cable (torus 2 3) 2 0\"");
  CHECK(link_cable.exit_code == 0);
  CHECK(link_cable.output.find("2 components") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("build \"torus 2\"").exit_code == 1);
  CHECK(run("build \"nosuch 2 3\"").exit_code == 1);
  CHECK(run("inv \"3: 5\"").exit_code == 1);
  CHECK(run("verify --suite nosuch").exit_code == 1);
  CHECK(run("nosuchverb").exit_code == 1);
  CHECK(run("verify").exit_code == 1);
}

TEST_CASE("inv computes invariants from braid text or family specs") {
  RunResult r = run("inv \"2: 1 1 1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("components: 1") != std::string::npos);
  CHECK(r.output.find("alexander: 1 - 1*t + 1*t^2") != std::string::npos);
  CHECK(r.output.find("jones: 1*t + 1*t^3 - 1*t^4") != std::string::npos);
  CHECK(r.output.find("genus: 1") != std::string::npos);

  RunResult alexander_only = run("inv --alexander \"torus 2 5\"");
  CHECK(alexander_only.output ==
        "alexander: 1 - 1*t + 1*t^2 - 1*t^3 + 1*t^4\n");

  RunResult identify = run("inv --identify-torus \"ttk 3 2 2 1\"");
  CHECK(identify.output.find("consistent with T(5,2)") != std::string::npos);

  RunResult json = run("inv --format json \"2: 1 1 1\"");
  CHECK(json.exit_code == 0);
  CHECK(json.output.find("\"components\":1") != std::string::npos);

  // explicit jones request over the cap is a resource failure (exit 2)
  RunResult capped = run("inv --jones \"torus 12 5\"");
  CHECK(capped.exit_code == 2);
}

TEST_CASE("verify drives suites with the documented exit codes") {
  CHECK(run("verify --list").output.find("lemmaSymmetry") !=
        std::string::npos);
  RunResult suite = run("verify --suite toruslemma --params \"5 2 1\"");
  CHECK(suite.exit_code == 0);
  CHECK(suite.output.find("all cases as expected") != std::string::npos);

  RunResult compare =
      run("verify --compare \"torus 2 3\" --with \"klink 5,2 2,2\"");
  CHECK(compare.exit_code == 3);  // T(2,3) vs T(2,7): distinct

  RunResult same = run(
      "verify --compare \"klink 5,2 2,2\" --with \"torus 2 7\"");
  CHECK(same.exit_code == 0);

  RunResult chirality = run(
      "verify --compare \"2: 1 1 1\" --with \"2: -1 -1 -1\" --level full");
  CHECK(chirality.exit_code == 3);
  RunResult blind = run(
      "verify --compare \"2: 1 1 1\" --with \"2: -1 -1 -1\" "
      "--level alexander");
  CHECK(blind.exit_code == 0);
}

TEST_CASE("json output is byte-stable across runs") {
  std::string cmd = "verify --suite lemma3 --format json";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  RunResult fa = run("inv --format json \"klink 5,2 2,2\"");
  RunResult fb = run("inv --format json \"klink 5,2 2,2\"");
  CHECK(fa.output == fb.output);
}

TEST_CASE("scan emits the evidence table") {
  RunResult r = run("scan --pmax 6 --qmax 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("suite scan") != std::string::npos);
  RunResult json = run("scan --pmax 6 --qmax 2 --format json");
  CHECK(json.output.find("\"suite\":\"scan\"") != std::string::npos);
}

TEST_CASE("render draws the grid") {
  RunResult r = run("render \"2: 1 -1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "| |\n\\ /\n/ \\\n");
  CHECK(run("render \"3:\"").output == "| | |\n");
}

TEST_CASE("env var caps the Jones computation") {
  std::string cmd = "env BRAIDFORGE_JONES_MAX_STRANDS=3 \"" + cli_path() +
                    "\" inv --jones \"torus 4 3\" 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    output.append(buf.data(), got);
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 2);
  CHECK(output.find("strands") != std::string::npos);
}
