// Exercises the shared-library C surface only.
#include "braidforge/braidforge.h"

#include <cstring>
#include <string>

#include "doctest.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  bf_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("braid lifecycle through the C API") {
  bf_braid* w = nullptr;
  REQUIRE(bf_braid_parse("2: 1 1 1", &w) == BF_OK);
  CHECK(bf_braid_strands(w) == 2);
  CHECK(bf_braid_letter_count(w) == 3);
  int32_t letters[3];
  CHECK(bf_braid_letters(w, letters, 3) == BF_OK);
  CHECK(letters[0] == 1);

  char* text = nullptr;
  REQUIRE(bf_braid_format(w, &text) == BF_OK);
  CHECK(take(text) == "2: 1 1 1");

  bf_braid* composed = nullptr;
  REQUIRE(bf_braid_compose(w, w, &composed) == BF_OK);
  CHECK(bf_braid_letter_count(composed) == 6);
  CHECK(bf_braid_exponent_sum(composed) == 6);
  CHECK(bf_braid_component_count(w) == 1);

  bf_braid* inv = nullptr;
  REQUIRE(bf_braid_inverse(w, &inv) == BF_OK);
  CHECK(bf_braid_exponent_sum(inv) == -3);

  int32_t images[2];
  REQUIRE(bf_braid_permutation(w, images, 2) == BF_OK);
  CHECK(images[0] == 1);
  CHECK(images[1] == 0);

  bf_braid* destabilized = nullptr;
  bf_braid* single = nullptr;
  REQUIRE(bf_braid_parse("2: 1", &single) == BF_OK);
  REQUIRE(bf_braid_apply_move(single, BF_MOVE_DESTABILIZE, 0, 0,
                              &destabilized) == BF_OK);
  CHECK(bf_braid_strands(destabilized) == 1);

  bf_braid_free(w);
  bf_braid_free(composed);
  bf_braid_free(inv);
  bf_braid_free(single);
  bf_braid_free(destabilized);
}

TEST_CASE("errors come back as status codes with messages") {
  bf_braid* w = nullptr;
  CHECK(bf_braid_parse("3: 5", &w) == BF_ERR_PARSE);
  CHECK(std::strlen(bf_last_error()) > 0);
  CHECK(bf_braid_parse(nullptr, &w) == BF_ERR_INVALID_ARGUMENT);
  CHECK(bf_braid_build_family("torus 1 1", 0, &w) == BF_ERR_INVALID_ARGUMENT);

  int32_t letters[] = {3};
  CHECK(bf_braid_make(2, letters, 1, &w) == BF_ERR_INVALID_ARGUMENT);

  REQUIRE(bf_braid_build_family("torus 5 4", 0, &w) == BF_OK);
  bf_limits tight{3, 200};
  bf_poly* poly = nullptr;
  CHECK(bf_jones(w, &tight, &poly) == BF_ERR_RESOURCE);
  int64_t genus = 0;
  CHECK(bf_positive_braid_genus(w, &genus) == BF_OK);
  CHECK(genus == 6);
  bf_braid_free(w);
}

TEST_CASE("invariants and polynomial values through the C API") {
  bf_braid* w = nullptr;
  REQUIRE(bf_braid_build_family("ttk 5 4 2 1", 0, &w) == BF_OK);

  bf_poly* delta = nullptr;
  REQUIRE(bf_alexander(w, &delta) == BF_OK);

  // zero-framed cable identity through C calls alone
  bf_poly* companion = nullptr;
  REQUIRE(bf_torus_alexander(2, 3, &companion) == BF_OK);
  bf_poly* cable = nullptr;
  REQUIRE(bf_cable_alexander(companion, 2, 11, &cable) == BF_OK);
  CHECK(bf_poly_equal(delta, cable) == 1);

  bf_poly* wrong = nullptr;
  REQUIRE(bf_cable_alexander(companion, 2, 5, &wrong) == BF_OK);
  CHECK(bf_poly_equal(delta, wrong) == 0);

  char* text = nullptr;
  REQUIRE(bf_poly_text(companion, 1, &text) == BF_OK);
  CHECK(take(text) == "1 - 1*t + 1*t^2");

  char* json = nullptr;
  REQUIRE(bf_poly_json(companion, 1, &json) == BF_OK);
  CHECK(take(json).find("\"terms\":[[0,1],[1,-1],[2,1]]") !=
        std::string::npos);

  int32_t found = 0;
  int64_t p = 0, q = 0;
  REQUIRE(bf_identify_torus_knot(w, nullptr, &found, &p, &q) == BF_OK);
  CHECK(found == 0);

  char* fp = nullptr;
  REQUIRE(bf_fingerprint_json(w, nullptr, &fp) == BF_OK);
  std::string fp_str = take(fp);
  CHECK(fp_str.find("\"components\":1") != std::string::npos);
  CHECK(fp_str.find("\"genus\":7") != std::string::npos);

  bf_poly_free(delta);
  bf_poly_free(companion);
  bf_poly_free(cable);
  bf_poly_free(wrong);
  bf_braid_free(w);
}

TEST_CASE("jones through the C API") {
  bf_braid* w = nullptr;
  REQUIRE(bf_braid_parse("2: 1 1 1", &w) == BF_OK);
  bf_poly* v = nullptr;
  REQUIRE(bf_jones(w, nullptr, &v) == BF_OK);
  char* text = nullptr;
  REQUIRE(bf_poly_text(v, 4, &text) == BF_OK);
  CHECK(take(text) == "1*t + 1*t^3 - 1*t^4");
  bf_poly_free(v);
  bf_braid_free(w);
}

TEST_CASE("verification through the C API") {
  bf_braid* a = nullptr;
  bf_braid* b = nullptr;
  REQUIRE(bf_braid_build_family("torus 2 3", 0, &a) == BF_OK);
  REQUIRE(bf_braid_build_family("torus 2 5", 0, &b) == BF_OK);
  char* json = nullptr;
  int32_t distinct = 0;
  REQUIRE(bf_check_equivalent(a, b, 1, nullptr, &json, &distinct) == BF_OK);
  CHECK(distinct == 1);
  CHECK(take(json).find("\"status\":\"distinct\"") != std::string::npos);

  char* list = nullptr;
  REQUIRE(bf_suite_list(&list) == BF_OK);
  CHECK(take(list).find("toruslemma") != std::string::npos);

  char* report_json = nullptr;
  char* report_text = nullptr;
  int32_t ok = 0;
  REQUIRE(bf_run_suite("lemma3", "1", nullptr, 0, &report_json, &report_text,
                       &ok) == BF_OK);
  CHECK(ok == 1);
  CHECK(take(report_json).find("\"all_expected\":true") != std::string::npos);
  CHECK(take(report_text).find("all cases as expected") != std::string::npos);
  CHECK(bf_run_suite("nope", "", nullptr, 0, &report_json, &report_text,
                     &ok) == BF_ERR_INVALID_ARGUMENT);

  char* scan_json = nullptr;
  REQUIRE(bf_scan_conjecture(6, 2, 600, nullptr, &scan_json, nullptr, &ok) ==
          BF_OK);
  CHECK(take(scan_json).find("\"suite\":\"scan\"") != std::string::npos);

  char* ascii = nullptr;
  REQUIRE(bf_braid_render_ascii(a, &ascii) == BF_OK);
  CHECK(take(ascii).find("\\ /") != std::string::npos);

  bf_braid_free(a);
  bf_braid_free(b);
}
