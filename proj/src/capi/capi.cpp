#include "braidforge/braidforge.h"

#include <cstring>
#include <sstream>
#include <string>

#include "core/braid.hpp"
#include "core/burau.hpp"
#include "core/errors.hpp"
#include "core/families.hpp"
#include "core/invariants.hpp"
#include "core/json_io.hpp"
#include "core/laurent.hpp"
#include "core/render.hpp"
#include "core/temperley_lieb.hpp"
#include "core/verify.hpp"

namespace {

thread_local std::string g_last_error = "no error";

braidforge::BraidWord* unwrap(bf_braid* w) {
  return reinterpret_cast<braidforge::BraidWord*>(w);
}
const braidforge::BraidWord* unwrap(const bf_braid* w) {
  return reinterpret_cast<const braidforge::BraidWord*>(w);
}
bf_braid* wrap(braidforge::BraidWord w) {
  return reinterpret_cast<bf_braid*>(
      new braidforge::BraidWord(std::move(w)));
}

braidforge::LaurentPoly* unwrap(bf_poly* p) {
  return reinterpret_cast<braidforge::LaurentPoly*>(p);
}
const braidforge::LaurentPoly* unwrap(const bf_poly* p) {
  return reinterpret_cast<const braidforge::LaurentPoly*>(p);
}
bf_poly* wrap(braidforge::LaurentPoly p) {
  return reinterpret_cast<bf_poly*>(
      new braidforge::LaurentPoly(std::move(p)));
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

braidforge::JonesLimits to_limits(const bf_limits* limits) {
  braidforge::JonesLimits out = braidforge::JonesLimits::from_env();
  if (limits) {
    if (limits->jones_max_strands > 0)
      out.max_strands = limits->jones_max_strands;
    if (limits->jones_max_crossings > 0)
      out.max_crossings = limits->jones_max_crossings;
  }
  return out;
}

template <typename Fn>
bf_status guarded(Fn&& fn) {
  try {
    fn();
    return BF_OK;
  } catch (const braidforge::ParseError& e) {
    g_last_error = e.what();
    return BF_ERR_PARSE;
  } catch (const braidforge::ResourceError& e) {
    g_last_error = e.what();
    return BF_ERR_RESOURCE;
  } catch (const braidforge::OverflowError& e) {
    g_last_error = e.what();
    return BF_ERR_OVERFLOW;
  } catch (const braidforge::ValidationError& e) {
    g_last_error = e.what();
    return BF_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BF_ERR_INTERNAL;
  }
}

std::vector<std::vector<long long>> parse_param_tuples(const char* params) {
  std::vector<std::vector<long long>> out;
  if (!params) return out;
  std::string text(params);
  std::stringstream tuples(text);
  std::string tuple;
  while (std::getline(tuples, tuple, ';')) {
    std::stringstream values(tuple);
    std::vector<long long> row;
    long long v;
    while (values >> v) row.push_back(v);
    if (!row.empty()) out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

extern "C" {

const char* bf_version(void) { return "0.1.0"; }

const char* bf_last_error(void) { return g_last_error.c_str(); }

void bf_string_free(char* s) { delete[] s; }

/* --- braid words --------------------------------------------------------- */

bf_status bf_braid_parse(const char* text, bf_braid** out) {
  return guarded([&] {
    if (!text || !out) throw braidforge::ValidationError("null argument");
    *out = wrap(braidforge::parse_braid_text(text));
  });
}

bf_status bf_braid_make(int32_t strands, const int32_t* letters,
                        int64_t letter_count, bf_braid** out) {
  return guarded([&] {
    if (!out || (letter_count > 0 && !letters))
      throw braidforge::ValidationError("null argument");
    std::vector<int> ls(letters, letters + letter_count);
    *out = wrap(braidforge::make_braid(strands, std::move(ls)));
  });
}

bf_status bf_braid_build_family(const char* spec, int32_t relaxed,
                                bf_braid** out) {
  return guarded([&] {
    if (!spec || !out) throw braidforge::ValidationError("null argument");
    *out = wrap(braidforge::build_family(
        spec, relaxed ? braidforge::SpecMode::relaxed
                      : braidforge::SpecMode::strict));
  });
}

void bf_braid_free(bf_braid* w) { delete unwrap(w); }

int32_t bf_braid_strands(const bf_braid* w) { return unwrap(w)->strands(); }

int64_t bf_braid_letter_count(const bf_braid* w) {
  return unwrap(w)->crossing_count();
}

bf_status bf_braid_letters(const bf_braid* w, int32_t* buffer,
                           int64_t buffer_len) {
  return guarded([&] {
    const auto& ls = unwrap(w)->letters();
    if (buffer_len < static_cast<int64_t>(ls.size()))
      throw braidforge::ValidationError("letter buffer too small");
    for (std::size_t i = 0; i < ls.size(); ++i) buffer[i] = ls[i];
  });
}

bf_status bf_braid_format(const bf_braid* w, char** out) {
  return guarded([&] { *out = dup_string(unwrap(w)->format()); });
}

bf_status bf_braid_render_ascii(const bf_braid* w, char** out) {
  return guarded([&] { *out = dup_string(braidforge::render_ascii(*unwrap(w))); });
}

bf_status bf_braid_compose(const bf_braid* a, const bf_braid* b,
                           bf_braid** out) {
  return guarded([&] { *out = wrap(braidforge::compose(*unwrap(a), *unwrap(b))); });
}

bf_status bf_braid_inverse(const bf_braid* w, bf_braid** out) {
  return guarded([&] { *out = wrap(braidforge::inverse(*unwrap(w))); });
}

int64_t bf_braid_exponent_sum(const bf_braid* w) {
  return braidforge::exponent_sum(*unwrap(w));
}

int32_t bf_braid_component_count(const bf_braid* w) {
  return braidforge::component_count(*unwrap(w));
}

bf_status bf_braid_permutation(const bf_braid* w, int32_t* images,
                               int64_t buffer_len) {
  return guarded([&] {
    braidforge::Permutation p = braidforge::permutation_of(*unwrap(w));
    if (buffer_len < p.size())
      throw braidforge::ValidationError("permutation buffer too small");
    for (int i = 0; i < p.size(); ++i) images[i] = p.images[i];
  });
}

bf_status bf_braid_apply_move(const bf_braid* w, bf_move_kind kind,
                              int32_t pos, int32_t arg, bf_braid** out) {
  return guarded([&] {
    braidforge::Move m;
    m.kind = static_cast<braidforge::Move::Kind>(kind);
    m.pos = pos;
    m.arg = arg;
    *out = wrap(braidforge::apply_move(*unwrap(w), m));
  });
}

/* --- invariants ----------------------------------------------------------- */

bf_status bf_alexander(const bf_braid* w, bf_poly** out) {
  return guarded([&] { *out = wrap(braidforge::alexander(*unwrap(w))); });
}

bf_status bf_torus_alexander(int64_t p, int64_t q, bf_poly** out) {
  return guarded([&] { *out = wrap(braidforge::torus_alexander(p, q)); });
}

bf_status bf_cable_alexander(const bf_poly* delta_companion, int64_t m,
                             int64_t c, bf_poly** out) {
  return guarded([&] {
    *out = wrap(braidforge::cable_alexander(*unwrap(delta_companion), m, c));
  });
}

bf_status bf_jones(const bf_braid* w, const bf_limits* limits, bf_poly** out) {
  return guarded(
      [&] { *out = wrap(braidforge::jones(*unwrap(w), to_limits(limits))); });
}

bf_status bf_positive_braid_genus(const bf_braid* w, int64_t* out) {
  return guarded([&] { *out = braidforge::positive_braid_genus(*unwrap(w)); });
}

bf_status bf_identify_torus_knot(const bf_braid* w, const bf_limits* limits,
                                 int32_t* found, int64_t* p, int64_t* q) {
  return guarded([&] {
    auto r = braidforge::identify_torus_knot(*unwrap(w), to_limits(limits));
    *found = r ? 1 : 0;
    if (r) {
      *p = r->first;
      *q = r->second;
    }
  });
}

bf_status bf_fingerprint_json(const bf_braid* w, const bf_limits* limits,
                              char** out) {
  return guarded([&] {
    *out = dup_string(braidforge::fingerprint_json(
        braidforge::fingerprint(*unwrap(w), to_limits(limits))));
  });
}

void bf_poly_free(bf_poly* p) { delete unwrap(p); }

int32_t bf_poly_equal(const bf_poly* a, const bf_poly* b) {
  return *unwrap(a) == *unwrap(b) ? 1 : 0;
}

bf_status bf_poly_text(const bf_poly* p, int32_t exponent_denominator,
                       char** out) {
  return guarded([&] {
    *out = dup_string(unwrap(p)->to_text(
        exponent_denominator > 0 ? exponent_denominator : 1));
  });
}

bf_status bf_poly_json(const bf_poly* p, int32_t exponent_denominator,
                       char** out) {
  return guarded([&] {
    *out = dup_string(braidforge::poly_json(
        *unwrap(p), exponent_denominator > 0 ? exponent_denominator : 1));
  });
}

/* --- verification --------------------------------------------------------- */

bf_status bf_check_equivalent(const bf_braid* a, const bf_braid* b,
                              int32_t level, const bf_limits* limits,
                              char** json_out, int32_t* distinct) {
  return guarded([&] {
    braidforge::Verdict v = braidforge::check_equivalent(
        *unwrap(a), *unwrap(b),
        level == 0 ? braidforge::CompareLevel::alexander_only
                   : braidforge::CompareLevel::full,
        to_limits(limits));
    if (json_out) *json_out = dup_string(braidforge::verdict_json(v));
    if (distinct)
      *distinct = v.status == braidforge::VerdictStatus::distinct ? 1 : 0;
  });
}

bf_status bf_suite_list(char** out) {
  return guarded([&] {
    std::string text;
    for (const braidforge::SuiteInfo& info : braidforge::suite_catalog()) {
      text += info.id;
      text += " (";
      text += info.param_names;
      text += "): ";
      text += info.description;
      text += "\n";
    }
    *out = dup_string(text);
  });
}

bf_status bf_run_suite(const char* suite_id, const char* params,
                       const bf_limits* limits, int32_t timings_in_text,
                       char** json_out, char** text_out,
                       int32_t* all_expected) {
  return guarded([&] {
    if (!suite_id) throw braidforge::ValidationError("null suite id");
    braidforge::SuiteReport report = braidforge::run_suite(
        suite_id, parse_param_tuples(params), to_limits(limits));
    if (json_out) *json_out = dup_string(braidforge::suite_report_json(report));
    if (text_out)
      *text_out = dup_string(
          braidforge::suite_report_text(report, timings_in_text != 0));
    if (all_expected) *all_expected = report.all_expected() ? 1 : 0;
  });
}

bf_status bf_scan_conjecture(int32_t p_max, int32_t q_max,
                             int64_t crossing_cap, const bf_limits* limits,
                             char** json_out, char** text_out,
                             int32_t* all_expected) {
  return guarded([&] {
    braidforge::ScanBounds bounds;
    bounds.p_max = p_max;
    bounds.q_max = q_max;
    if (crossing_cap > 0) bounds.crossing_cap = crossing_cap;
    braidforge::SuiteReport report =
        braidforge::scan_conjecture(bounds, to_limits(limits));
    if (json_out) *json_out = dup_string(braidforge::suite_report_json(report));
    if (text_out)
      *text_out = dup_string(braidforge::suite_report_text(report, false));
    if (all_expected) *all_expected = report.all_expected() ? 1 : 0;
  });
}

} /* extern "C" */
