// Command-line front end. Everything goes through the public C API.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "braidforge/braidforge.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitMismatch = 3;

struct BraidDeleter {
  void operator()(bf_braid* w) const { bf_braid_free(w); }
};
struct PolyDeleter {
  void operator()(bf_poly* p) const { bf_poly_free(p); }
};
using BraidPtr = std::unique_ptr<bf_braid, BraidDeleter>;
using PolyPtr = std::unique_ptr<bf_poly, PolyDeleter>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  bf_string_free(s);
  return out;
}

int status_exit_code(bf_status status) {
  switch (status) {
    case BF_OK: return kExitOk;
    case BF_ERR_INVALID_ARGUMENT:
    case BF_ERR_PARSE: return kExitUsage;
    default: return kExitResource;
  }
}

[[noreturn]] void fail(bf_status status) {
  std::cerr << "error: " << bf_last_error() << "\n";
  std::exit(status_exit_code(status));
}

std::string read_input(const std::string& arg) {
  if (arg != "-") return arg;
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

BraidPtr load_braid(const std::string& arg, bool relaxed) {
  std::string text = read_input(arg);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  bf_braid* w = nullptr;
  bf_status status;
  if (first != std::string::npos && std::isdigit(static_cast<unsigned char>(text[first])))
    status = bf_braid_parse(text.c_str(), &w);
  else
    status = bf_braid_build_family(text.c_str(), relaxed ? 1 : 0, &w);
  if (status != BF_OK) fail(status);
  return BraidPtr(w);
}

void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << out_path << "\n";
    std::exit(kExitUsage);
  }
  f << payload;
  if (payload.empty() || payload.back() != '\n') f << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid families, exact knot invariants and cable checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", bf_version());

  std::string out_path;
  app.add_option("--out", out_path, "write the primary output to a file");

  // build ------------------------------------------------------------------
  auto* build = app.add_subcommand(
      "build", "construct a braid word from a family spec");
  std::string build_spec;
  bool relaxed = false;
  build->add_option("spec", build_spec,
                    "family spec, e.g. 'ttk 5 4 2 1' or 'klink 6,2 4,3'; "
                    "'-' reads stdin")
      ->required();
  build->add_flag("--relaxed", relaxed, "allow unordered K-link specs");

  // inv --------------------------------------------------------------------
  auto* inv = app.add_subcommand("inv", "compute invariants of a closure");
  std::string inv_input, inv_format = "text";
  bool want_alexander = false, want_jones = false, want_genus = false,
       want_components = false, want_identify = false;
  inv->add_option("input", inv_input,
                  "braid text ('2: 1 1 1') or family spec; '-' reads stdin")
      ->required();
  inv->add_flag("--alexander", want_alexander, "Alexander polynomial");
  inv->add_flag("--jones", want_jones, "Jones polynomial");
  inv->add_flag("--genus", want_genus, "positive braid genus");
  inv->add_flag("--components", want_components, "component count");
  inv->add_flag("--identify-torus", want_identify,
                "search for a matching torus knot");
  inv->add_option("--format", inv_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // verify -----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite_id, suite_params, verify_format = "text";
  std::string compare_a, compare_b, compare_level = "full";
  bool list_suites = false, with_timings = false;
  verify->add_option("--suite", suite_id, "suite id (see --list)");
  verify->add_option("--params", suite_params,
                     "parameter tuples, e.g. '5 2 1; 7 2 2' (default: the "
                     "suite's standard set)");
  verify->add_flag("--list", list_suites, "list available suites");
  verify->add_option("--compare", compare_a, "braid/family spec, left side");
  verify->add_option("--with", compare_b, "braid/family spec, right side");
  verify->add_option("--level", compare_level, "full or alexander")
      ->check(CLI::IsMember({"full", "alexander"}));
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timings", with_timings,
                   "include timings in text output");

  // scan -------------------------------------------------------------------
  auto* scan = app.add_subcommand(
      "scan", "survey twisted torus knots T(p,q;r,1) for cable fingerprints");
  int p_max = 0, q_max = 0;
  long long crossing_cap = 600;
  std::string scan_format = "text";
  scan->add_option("--pmax", p_max, "largest p to enumerate")->required();
  scan->add_option("--qmax", q_max, "largest q (default p-1)");
  scan->add_option("--cap", crossing_cap, "crossing cap per instance");
  scan->add_option("--format", scan_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // render -----------------------------------------------------------------
  auto* render = app.add_subcommand("render", "ASCII diagram of a braid");
  std::string render_input;
  render->add_option("input", render_input,
                     "braid text or family spec; '-' reads stdin")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (build->parsed()) {
    std::string spec_text = read_input(build_spec);
    BraidPtr w = load_braid(spec_text, relaxed);
    char* text = nullptr;
    if (bf_status s = bf_braid_format(w.get(), &text); s != BF_OK) fail(s);
    emit(out_path, take_string(text));
    int32_t components = bf_braid_component_count(w.get());
    std::size_t first = spec_text.find_first_not_of(" \t\r\n");
    if (components > 1 && first != std::string::npos &&
        spec_text.compare(first, 5, "cable") == 0)
      std::cerr << "note: cable closure has " << components
                << " components (winding and twist count share a factor)\n";
    return kExitOk;
  }

  if (inv->parsed()) {
    BraidPtr w = load_braid(inv_input, false);
    bool all = !want_alexander && !want_jones && !want_genus &&
               !want_components && !want_identify;
    if (inv_format == "json") {
      char* json = nullptr;
      if (bf_status s = bf_fingerprint_json(w.get(), nullptr, &json);
          s != BF_OK)
        fail(s);
      emit(out_path, take_string(json));
      return kExitOk;
    }
    std::ostringstream out;
    if (all || want_components)
      out << "components: " << bf_braid_component_count(w.get()) << "\n";
    if (all || want_alexander) {
      bf_poly* poly = nullptr;
      if (bf_status s = bf_alexander(w.get(), &poly); s != BF_OK) fail(s);
      PolyPtr guard(poly);
      char* text = nullptr;
      if (bf_status s = bf_poly_text(poly, 1, &text); s != BF_OK) fail(s);
      std::string rendered = take_string(text);
      out << "alexander: " << rendered;
      if (rendered == "0") out << " (degenerate: split closure)";
      out << "\n";
    }
    if (all || want_jones) {
      bf_poly* poly = nullptr;
      bf_status s = bf_jones(w.get(), nullptr, &poly);
      if (s == BF_OK) {
        PolyPtr guard(poly);
        char* text = nullptr;
        if (bf_status st = bf_poly_text(poly, 4, &text); st != BF_OK) fail(st);
        out << "jones: " << take_string(text) << "\n";
      } else if (s == BF_ERR_RESOURCE && all) {
        out << "jones: skipped (" << bf_last_error() << ")\n";
      } else {
        fail(s);
      }
    }
    if (all || want_genus) {
      int64_t genus = 0;
      bf_status s = bf_positive_braid_genus(w.get(), &genus);
      if (s == BF_OK)
        out << "genus: " << genus << "\n";
      else if (all)
        out << "genus: not applicable (" << bf_last_error() << ")\n";
      else
        fail(s);
    }
    if (want_identify) {
      int32_t found = 0;
      int64_t p = 0, q = 0;
      if (bf_status s = bf_identify_torus_knot(w.get(), nullptr, &found, &p, &q);
          s != BF_OK)
        fail(s);
      if (found)
        out << "torus match: consistent with T(" << p << "," << q
            << ") (not a proof)\n";
      else
        out << "torus match: none\n";
    }
    emit(out_path, out.str());
    return kExitOk;
  }

  if (verify->parsed()) {
    if (list_suites) {
      char* text = nullptr;
      if (bf_status s = bf_suite_list(&text); s != BF_OK) fail(s);
      emit(out_path, take_string(text));
      return kExitOk;
    }
    if (!compare_a.empty() || !compare_b.empty()) {
      if (compare_a.empty() || compare_b.empty()) {
        std::cerr << "error: --compare needs --with\n";
        return kExitUsage;
      }
      BraidPtr a = load_braid(compare_a, false);
      BraidPtr b = load_braid(compare_b, false);
      char* json = nullptr;
      int32_t distinct = 0;
      if (bf_status s = bf_check_equivalent(
              a.get(), b.get(), compare_level == "full" ? 1 : 0, nullptr,
              &json, &distinct);
          s != BF_OK)
        fail(s);
      emit(out_path, take_string(json));
      return distinct ? kExitMismatch : kExitOk;
    }
    if (suite_id.empty()) {
      std::cerr << "error: verify needs --suite, --compare or --list\n";
      return kExitUsage;
    }
    char* json = nullptr;
    char* text = nullptr;
    int32_t all_expected = 0;
    bf_status s = bf_run_suite(suite_id.c_str(), suite_params.c_str(), nullptr,
                               with_timings ? 1 : 0, &json, &text,
                               &all_expected);
    if (s != BF_OK) fail(s);
    std::string json_str = take_string(json);
    std::string text_str = take_string(text);
    emit(out_path, verify_format == "json" ? json_str : text_str);
    return all_expected ? kExitOk : kExitMismatch;
  }

  if (scan->parsed()) {
    char* json = nullptr;
    char* text = nullptr;
    int32_t all_expected = 0;
    bf_status s = bf_scan_conjecture(p_max, q_max, crossing_cap, nullptr,
                                     &json, &text, &all_expected);
    if (s != BF_OK) fail(s);
    std::string json_str = take_string(json);
    std::string text_str = take_string(text);
    emit(out_path, scan_format == "json" ? json_str : text_str);
    return all_expected ? kExitOk : kExitMismatch;
  }

  if (render->parsed()) {
    BraidPtr w = load_braid(render_input, false);
    char* text = nullptr;
    if (bf_status s = bf_braid_render_ascii(w.get(), &text); s != BF_OK)
      fail(s);
    emit(out_path, take_string(text));
    return kExitOk;
  }

  return kExitUsage;
}
