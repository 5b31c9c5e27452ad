#include "core/verify.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>

#include "core/burau.hpp"
#include "core/errors.hpp"
#include "core/families.hpp"

namespace braidforge {

namespace {

using Clock = std::chrono::steady_clock;

std::string poly_text(const LaurentPoly& p, int den = 1) {
  return p.to_text(den);
}

struct CompareOptions {
  CompareLevel level = CompareLevel::full;
  bool jones_up_to_mirror = false;
};

Verdict compare_braids(const BraidWord& a, const BraidWord& b,
                       const CompareOptions& opts, const JonesLimits& limits) {
  Verdict v;
  int ca = component_count(a), cb = component_count(b);
  v.evidence.push_back({"components", std::to_string(ca), std::to_string(cb),
                        ca == cb});
  LaurentPoly da = alexander(a), db = alexander(b);
  v.evidence.push_back({"alexander", poly_text(da), poly_text(db), da == db});
  if (da.is_zero() || db.is_zero())
    v.notes.push_back("split closure: Alexander polynomial degenerated to 0");

  if (opts.level == CompareLevel::full) {
    if (ca == 1 && cb == 1) {
      try {
        LaurentPoly ja = jones(a, limits);
        LaurentPoly jb = jones(b, limits);
        if (ja == jb) {
          v.evidence.push_back(
              {"jones", poly_text(ja, 4), poly_text(jb, 4), true});
        } else if (opts.jones_up_to_mirror &&
                   ja == jb.substituted(-1)) {
          v.evidence.push_back({"jones (up to mirror)", poly_text(ja, 4),
                                poly_text(jb, 4), true});
          v.notes.push_back(
              "sides are mirror presentations: jones agrees after t -> 1/t");
        } else {
          v.evidence.push_back(
              {"jones", poly_text(ja, 4), poly_text(jb, 4), false});
        }
      } catch (const ResourceError& e) {
        v.notes.push_back(std::string("jones skipped: ") + e.what());
      }
    } else {
      v.notes.push_back(
          "jones skipped: multi-component closure (component orientations "
          "are convention-dependent)");
    }
  }

  bool all_equal = true;
  for (const EvidenceRow& row : v.evidence) all_equal = all_equal && row.equal;
  v.status = all_equal ? VerdictStatus::consistent : VerdictStatus::distinct;
  v.notes.push_back(
      "consistent means all compared invariants agree; it is necessary, not "
      "sufficient, for link equivalence");
  return v;
}

Verdict compare_alexander_to_formula(const BraidWord& w,
                                     const LaurentPoly& formula) {
  Verdict v;
  LaurentPoly dw = alexander(w);
  v.evidence.push_back(
      {"alexander", poly_text(dw), poly_text(formula), dw == formula});
  v.status = dw == formula ? VerdictStatus::consistent
                           : VerdictStatus::distinct;
  v.notes.push_back(
      "consistent means all compared invariants agree; it is necessary, not "
      "sufficient, for link equivalence");
  return v;
}

void add_case(SuiteReport& report, const std::string& label,
              VerdictStatus expected, const std::function<Verdict()>& body) {
  SuiteCase c;
  c.label = label;
  c.expected = expected;
  auto t0 = Clock::now();
  c.verdict = body();
  c.millis =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  report.cases.push_back(std::move(c));
}

void require_params(const std::vector<long long>& tuple, std::size_t n,
                    const std::string& suite, const std::string& names) {
  if (tuple.size() != n)
    throw ValidationError("suite " + suite + " expects parameter tuples (" +
                          names + ")");
}

// --- per-suite case builders -----------------------------------------------

void build_toruslemma(SuiteReport& r, const std::vector<long long>& t,
                      bool with_control, const JonesLimits& lim) {
  require_params(t, 3, "toruslemma", "p q s");
  int p = static_cast<int>(t[0]), q = static_cast<int>(t[1]),
      s = static_cast<int>(t[2]);
  if (q < 2 || q >= p || s < 1)
    throw ValidationError("toruslemma needs 2 <= q < p and s >= 1");
  add_case(r,
           "K((" + std::to_string(p) + "," + std::to_string(q) + "),(" +
               std::to_string(q) + "," + std::to_string(q * s) + ")) vs T(" +
               std::to_string(q) + "," + std::to_string(p + q * s) + ")",
           VerdictStatus::consistent, [&] {
             BraidWord left = klink_braid(KLinkSpec{{{p, q}, {q, q * s}}});
             BraidWord right = torus_braid(q, p + q * s);
             return compare_braids(left, right, {}, lim);
           });
  if (with_control)
    add_case(r,
             "negative control: K((" + std::to_string(p) + "," +
                 std::to_string(q) + "),(" + std::to_string(q) + "," +
                 std::to_string(q * s + 1) + ")) vs T(" + std::to_string(q) +
                 "," + std::to_string(p + q * s) + ")",
             VerdictStatus::distinct, [&] {
               BraidWord left =
                   klink_braid(KLinkSpec{{{p, q}, {q, q * s + 1}}});
               BraidWord right = torus_braid(q, p + q * s);
               return compare_braids(left, right, {}, lim);
             });
}

void build_prop1(SuiteReport& r, const std::vector<long long>& t,
                 bool with_control, const JonesLimits& lim) {
  require_params(t, 4, "prop1", "p q k s");
  int p = static_cast<int>(t[0]), q = static_cast<int>(t[1]),
      k = static_cast<int>(t[2]), s = static_cast<int>(t[3]);
  if (q < 2 || q >= p || k < 1 || s < 1)
    throw ValidationError("prop1 needs 2 <= q < p and k, s >= 1");
  auto left_spec = KLinkSpec{{{p, q + k}, {q, q * s}}};
  auto right_spec = KLinkSpec{{{p + q * s, q}, {p, k}}};
  add_case(r,
           "K((" + std::to_string(p) + "," + std::to_string(q + k) + "),(" +
               std::to_string(q) + "," + std::to_string(q * s) +
               ")) vs K((" + std::to_string(p + q * s) + "," +
               std::to_string(q) + "),(" + std::to_string(p) + "," +
               std::to_string(k) + "))",
           VerdictStatus::consistent, [&] {
             return compare_braids(klink_braid(left_spec),
                                   klink_braid(right_spec), {}, lim);
           });
  if (with_control)
    add_case(r, "negative control: right side twist count k+1",
             VerdictStatus::distinct, [&] {
               auto perturbed = KLinkSpec{{{p + q * s, q}, {p, k + 1}}};
               return compare_braids(klink_braid(left_spec),
                                     klink_braid(perturbed), {}, lim);
             });
}

void build_lemma3(SuiteReport& r, const std::vector<long long>& t,
                  bool with_control, const JonesLimits& lim) {
  require_params(t, 1, "lemma3", "s");
  int s = static_cast<int>(t[0]);
  if (s < 1) throw ValidationError("lemma3 needs s >= 1");
  int a = 3 + 4 * (s - 1), b = 5 + 4 * (s - 1);
  add_case(r,
           "K((6,2),(4," + std::to_string(a) + ")) vs K((4," +
               std::to_string(b) + "),(3,1))",
           VerdictStatus::consistent, [&] {
             return compare_braids(klink_braid(KLinkSpec{{{6, 2}, {4, a}}}),
                                   klink_braid(KLinkSpec{{{4, b}, {3, 1}}}),
                                   {}, lim);
           });
  if (with_control)
    add_case(r,
             "negative control: K((6,2),(4," + std::to_string(a) +
                 ")) vs K((4," + std::to_string(b) + "),(3,2))",
             VerdictStatus::distinct, [&] {
               return compare_braids(klink_braid(KLinkSpec{{{6, 2}, {4, a}}}),
                                     klink_braid(KLinkSpec{{{4, b}, {3, 2}}}),
                                     {}, lim);
             });
}

BraidWord positive_family_cable_braid(int s) {
  // two-strand companion sigma_1^(2s+1); zero-framed linking number 8s+3
  // means j = 8s+3 - 2(2s+1) = 4s+1 appended twists.
  BraidWord companion = make_braid(2, std::vector<int>(2 * s + 1, 1));
  return cable_braid(companion, 2, 4 * s + 1);
}

void build_answer_morimoto(SuiteReport& r, const std::vector<long long>& t,
                           bool with_control, const JonesLimits& lim) {
  require_params(t, 1, "answerMorimoto", "s");
  int s = static_cast<int>(t[0]);
  if (s < 1) throw ValidationError("answerMorimoto needs s >= 1");
  int p = 4 * s + 1;
  std::string ttk_name = "T(" + std::to_string(p) + ",4;2,1)";
  add_case(r,
           ttk_name + " vs cable formula: winding 2, linking number " +
               std::to_string(8 * s + 3) + ", companion T(2," +
               std::to_string(2 * s + 1) + ")",
           VerdictStatus::consistent, [&] {
             return compare_alexander_to_formula(
                 twisted_torus_braid(p, 4, 2, 1),
                 cable_alexander(torus_alexander(2, 2 * s + 1), 2, 8 * s + 3));
           });
  add_case(r, ttk_name + " vs cable braid of sigma_1^" +
               std::to_string(2 * s + 1) + " (winding 2, j=" +
               std::to_string(4 * s + 1) + ")",
           VerdictStatus::consistent, [&] {
             return compare_braids(twisted_torus_braid(p, 4, 2, 1),
                                   positive_family_cable_braid(s), {}, lim);
           });
  if (with_control)
    add_case(r,
             "negative control: tube-framed cable formula (2," +
                 std::to_string(4 * s + 1) + ") over T(2," +
                 std::to_string(2 * s + 1) + ")",
             VerdictStatus::distinct, [&] {
               return compare_alexander_to_formula(
                   twisted_torus_braid(p, 4, 2, 1),
                   cable_alexander(torus_alexander(2, 2 * s + 1), 2,
                                   4 * s + 1));
             });
}

void build_answer_morimoto_corollary(SuiteReport& r,
                                     const std::vector<long long>& t,
                                     bool with_control,
                                     const JonesLimits& lim) {
  require_params(t, 1, "answerMorimoto-corollary", "s");
  int s = static_cast<int>(t[0]);
  if (s < 1) throw ValidationError("answerMorimoto-corollary needs s >= 1");
  int p = 4 * s + 1;
  KLinkSpec k1{{{p, 4}, {2, 2}}};
  KLinkSpec k2{{{4, p}, {2, 2}}};
  add_case(r, "K((" + std::to_string(p) + ",4),(2,2)) vs the shared cable",
           VerdictStatus::consistent, [&] {
             return compare_braids(klink_braid(k1),
                                   positive_family_cable_braid(s), {}, lim);
           });
  add_case(r, "K((4," + std::to_string(p) + "),(2,2)) vs the shared cable",
           VerdictStatus::consistent, [&] {
             return compare_braids(klink_braid(k2),
                                   positive_family_cable_braid(s), {}, lim);
           });
  add_case(r,
           "K((" + std::to_string(p) + ",4),(2,2)) vs K((4," +
               std::to_string(p) + "),(2,2))",
           VerdictStatus::consistent, [&] {
             return compare_braids(klink_braid(k1), klink_braid(k2), {}, lim);
           });
  if (with_control)
    add_case(r, "negative control: tube-framed cable braid (j=-1)",
             VerdictStatus::distinct, [&] {
               BraidWord companion =
                   make_braid(2, std::vector<int>(2 * s + 1, 1));
               return compare_braids(klink_braid(k1),
                                     cable_braid(companion, 2, -1), {}, lim);
             });
}

void build_lemma_symmetry(SuiteReport& r, const std::vector<long long>& t,
                          bool with_control, const JonesLimits& lim) {
  require_params(t, 2, "lemmaSymmetry", "p q");
  int p = static_cast<int>(t[0]), q = static_cast<int>(t[1]);
  KLinkSpec spec = lemma_symmetry_klink(p, q);
  std::string ttk_name =
      "T(" + std::to_string(p) + "," + std::to_string(q) + ";" +
      std::to_string(p - 1) + ",-1)";
  add_case(r, ttk_name + " vs " + spec.to_text(), VerdictStatus::consistent,
           [&] {
             CompareOptions opts;
             opts.jones_up_to_mirror = true;
             return compare_braids(twisted_torus_braid(p, q, p - 1, -1),
                                   klink_braid(spec), opts, lim);
           });
  if (with_control) {
    KLinkSpec truncated = spec;
    truncated.pairs.pop_back();
    add_case(r, "negative control: " + ttk_name + " vs " + truncated.to_text(),
             VerdictStatus::distinct, [&] {
               CompareOptions opts;
               opts.jones_up_to_mirror = true;
               return compare_braids(twisted_torus_braid(p, q, p - 1, -1),
                                     klink_braid(truncated), opts, lim);
             });
  }
}

void build_theorem5(SuiteReport& r, const std::vector<long long>& t,
                    bool with_control, const JonesLimits& lim) {
  require_params(t, 2, "theorem5", "k b");
  int k = static_cast<int>(t[0]), b = static_cast<int>(t[1]);
  Theorem5Specs specs = theorem5_specs(k, b);
  std::string ttk_name = specs.ttk.to_text();
  add_case(r,
           ttk_name + " vs cable formula: winding " + std::to_string(k) +
               ", linking number " + std::to_string(specs.cable.surgery) +
               ", companion " + specs.companion.to_text(),
           VerdictStatus::consistent, [&] {
             LaurentPoly companion_delta =
                 alexander(klink_braid(specs.companion));
             return compare_alexander_to_formula(
                 twisted_torus_braid(specs.ttk),
                 cable_alexander(companion_delta, k, specs.cable.surgery));
           });
  add_case(r, ttk_name + " vs " + specs.cable.to_text(),
           VerdictStatus::consistent, [&] {
             BraidWord companion = klink_braid(specs.companion);
             long long j = specs.cable.surgery -
                           static_cast<long long>(k) * exponent_sum(companion);
             CompareOptions opts;
             opts.jones_up_to_mirror = true;
             return compare_braids(twisted_torus_braid(specs.ttk),
                                   cable_braid(companion, k, j), opts, lim);
           });
  if (with_control)
    add_case(r,
             "negative control: tube-framed linking number " +
                 std::to_string(specs.ttk.p - 1 + k * b),
             VerdictStatus::distinct, [&] {
               LaurentPoly companion_delta =
                   alexander(klink_braid(specs.companion));
               return compare_alexander_to_formula(
                   twisted_torus_braid(specs.ttk),
                   cable_alexander(companion_delta, k,
                                   specs.ttk.p - 1 + k * b));
             });
}

void build_lee_cable(SuiteReport& r, const std::vector<long long>& t,
                     bool with_control, const JonesLimits& lim) {
  require_params(t, 4, "lee-cable", "p q k s");
  long long p = t[0], q = t[1], k = t[2], s = t[3];
  if (q < 2 || q >= p || std::gcd(p, q) != 1)
    throw ValidationError("lee-cable needs coprime 1 < q < p");
  if (k < 2 || k * q >= p)
    throw ValidationError("lee-cable needs 1 < kq < p");
  if (s == 0) throw ValidationError("lee-cable needs s != 0");
  long long c = p + k * k * q * s;
  std::string ttk_name = "T(" + std::to_string(p) + "," + std::to_string(q) +
                         ";" + std::to_string(k * q) + "," +
                         std::to_string(s) + ")";
  add_case(r,
           ttk_name + " vs cable formula: winding " + std::to_string(q) +
               ", linking number " + std::to_string(c) + ", companion T(" +
               std::to_string(k) + "," + std::to_string(k * s + 1) + ")",
           VerdictStatus::consistent, [&] {
             return compare_alexander_to_formula(
                 twisted_torus_braid(static_cast<int>(p), static_cast<int>(q),
                                     static_cast<int>(k * q),
                                     static_cast<int>(s)),
                 cable_alexander(
                     torus_alexander(k, std::llabs(k * s + 1)), q, c));
           });
  if (s > 0)
    add_case(r, ttk_name + " vs cable braid of T(" + std::to_string(k) + "," +
                 std::to_string(k * s + 1) + ")",
             VerdictStatus::consistent, [&] {
               BraidWord companion = torus_braid(static_cast<int>(k),
                                                 static_cast<int>(k * s + 1));
               long long j = c - q * exponent_sum(companion);
               return compare_braids(
                   twisted_torus_braid(static_cast<int>(p),
                                       static_cast<int>(q),
                                       static_cast<int>(k * q),
                                       static_cast<int>(s)),
                   cable_braid(companion, static_cast<int>(q), j), {}, lim);
             });
  if (with_control)
    add_case(r,
             "negative control: linking number " + std::to_string(c + q),
             VerdictStatus::distinct, [&] {
               return compare_alexander_to_formula(
                   twisted_torus_braid(static_cast<int>(p),
                                       static_cast<int>(q),
                                       static_cast<int>(k * q),
                                       static_cast<int>(s)),
                   cable_alexander(torus_alexander(k, std::llabs(k * s + 1)),
                                   q, c + q));
             });
}

Verdict identify_verdict(const BraidWord& w, const JonesLimits& lim) {
  Verdict v;
  auto found = identify_torus_knot(w, lim);
  LaurentPoly delta = alexander(w);
  if (found) {
    v.evidence.push_back(
        {"alexander", poly_text(delta),
         poly_text(torus_alexander(found->first, found->second)), true});
    v.status = VerdictStatus::consistent;
    v.notes.push_back("consistent with T(" + std::to_string(found->first) +
                      "," + std::to_string(found->second) +
                      "); a fingerprint match, not a proof");
  } else {
    v.evidence.push_back({"alexander", poly_text(delta),
                          "no torus knot candidate", false});
    v.status = VerdictStatus::distinct;
    v.notes.push_back("no torus knot matches the fingerprint");
  }
  return v;
}

void build_corollary1_torus(SuiteReport& r, const std::vector<long long>& t,
                            bool with_control, const JonesLimits& lim) {
  require_params(t, 2, "corollary1-torus", "m q");
  int m = static_cast<int>(t[0]), q = static_cast<int>(t[1]);
  if (m < 1 || q < 2) throw ValidationError("corollary1-torus needs m >= 1, q >= 2");
  int p = m * q + m + 1;
  KLinkSpec spec{{{p + q, q}, {p, 1}}};
  add_case(r, "identify_torus_knot(" + spec.to_text() + ")",
           VerdictStatus::consistent,
           [&] { return identify_verdict(klink_braid(spec), lim); });
  if (with_control)
    add_case(r, "negative control: identify_torus_knot(T(5,4;2,1)), a cable",
             VerdictStatus::distinct, [&] {
               return identify_verdict(twisted_torus_braid(5, 4, 2, 1), lim);
             });
}

void build_morimoto_yamada(SuiteReport& r, const std::vector<long long>& t,
                           bool with_control, const JonesLimits& lim) {
  require_params(t, 2, "morimotoYamada", "p q");
  int p = static_cast<int>(t[0]), q = static_cast<int>(t[1]);
  static const std::vector<std::pair<int, int>> listed = {
      {8, 3}, {12, 5}, {20, 9}, {24, 11}, {32, 15}};
  bool ok = false;
  for (auto [lp, lq] : listed) ok = ok || (lp == p && lq == q);
  if (!ok)
    throw ValidationError(
        "morimotoYamada covers T(8,3;7,-1), T(12,5;11,-1), T(20,9;19,-1), "
        "T(24,11;23,-1), T(32,15;31,-1)");
  int k = p - 2 * q, b = (q - 1) / (p - 2 * q);
  Theorem5Specs specs = theorem5_specs(k, b);
  add_case(r,
           "T(" + std::to_string(p) + "," + std::to_string(q) + ";" +
               std::to_string(p - 1) +
               ",-1) vs cable formula over companion " +
               specs.companion.to_text(),
           VerdictStatus::consistent, [&] {
             LaurentPoly companion_delta =
                 alexander(klink_braid(specs.companion));
             Verdict v = compare_alexander_to_formula(
                 twisted_torus_braid(p, q, p - 1, -1),
                 cable_alexander(companion_delta, k, specs.cable.surgery));
             v.notes.push_back("jones skipped: " + std::to_string(p) +
                               " strands exceed the Temperley-Lieb cap");
             return v;
           });
  if (with_control)
    add_case(r,
             "negative control: tube-framed linking number " +
                 std::to_string(p - 1 + k * b),
             VerdictStatus::distinct, [&] {
               LaurentPoly companion_delta =
                   alexander(klink_braid(specs.companion));
               return compare_alexander_to_formula(
                   twisted_torus_braid(p, q, p - 1, -1),
                   cable_alexander(companion_delta, k, p - 1 + k * b));
             });
  (void)lim;
}

}  // namespace

const char* verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::consistent: return "consistent";
    case VerdictStatus::distinct: return "distinct";
    case VerdictStatus::skipped: return "skipped";
  }
  return "?";
}

Verdict check_equivalent(const BraidWord& a, const BraidWord& b,
                         CompareLevel level, const JonesLimits& limits) {
  CompareOptions opts;
  opts.level = level;
  return compare_braids(a, b, opts, limits);
}

bool SuiteReport::all_expected() const {
  for (const SuiteCase& c : cases)
    if (!c.as_expected()) return false;
  return true;
}

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog = {
      {"toruslemma",
       "K((p,q),(q,qs)) presents the torus link T(q, p+qs)",
       "p q s",
       {{5, 2, 1}, {5, 3, 1}, {7, 2, 2}, {7, 3, 1}, {4, 3, 2}}},
      {"prop1",
       "K((p,q+k),(q,qs)) and K((p+qs,q),(p,k)) present the same link",
       "p q k s",
       {{3, 2, 1, 1}, {4, 3, 2, 1}, {5, 2, 1, 2}, {5, 3, 2, 1}}},
      {"lemma3",
       "K((6,2),(4,3+4(s-1))) and K((4,5+4(s-1)),(3,1)) present the same knot",
       "s",
       {{1}, {2}}},
      {"answerMorimoto",
       "T(4s+1,4;2,1) is the winding-2 cable of T(2,2s+1) with linking "
       "number 8s+3",
       "s",
       {{1}, {2}, {3}}},
      {"answerMorimoto-corollary",
       "K((4s+1,4),(2,2)) and K((4,4s+1),(2,2)) both present that cable",
       "s",
       {{1}, {2}}},
      {"lemmaSymmetry",
       "T(p,q;p-1,-1) is the K-knot K((p-1,k),(ka,1),...,(2,1)) up to mirror",
       "p q",
       {{8, 3}, {12, 5}}},
      {"theorem5",
       "T(p,q;p-1,-1), p=ka+2, q=kb+1, a=2b+1, is the winding-k cable of a "
       "K-knot with linking number ka(b+1)+1",
       "k b",
       {{2, 1}, {2, 2}}},
      {"lee-cable",
       "T(p,q;kq,s) is the winding-q cable of T(k,ks+1) with linking number "
       "p+k^2qs",
       "p q k s",
       {{5, 2, 2, 1}}},
      {"corollary1-torus",
       "K((p+q,q),(p,1)) with p = mq+m+1 fingerprints as a torus knot",
       "m q",
       {{1, 2}, {2, 2}, {1, 3}}},
      {"morimotoYamada",
       "the five listed T(p,q;p-1,-1) knots pass the theorem5 cable check",
       "p q",
       {{8, 3}, {12, 5}, {20, 9}, {24, 11}, {32, 15}}},
  };
  return catalog;
}

const SuiteInfo& suite_info(const std::string& id) {
  for (const SuiteInfo& info : suite_catalog())
    if (info.id == id) return info;
  throw ValidationError("unknown suite id '" + id + "'");
}

SuiteReport run_suite(const std::string& id,
                      const std::vector<std::vector<long long>>& params,
                      const JonesLimits& limits) {
  const SuiteInfo& info = suite_info(id);
  SuiteReport report;
  report.suite = id;
  report.params = params.empty() ? info.default_params : params;
  for (std::size_t i = 0; i < report.params.size(); ++i) {
    const auto& tuple = report.params[i];
    bool with_control = i == 0;  // one negative control per run
    if (id == "toruslemma")
      build_toruslemma(report, tuple, with_control, limits);
    else if (id == "prop1")
      build_prop1(report, tuple, with_control, limits);
    else if (id == "lemma3")
      build_lemma3(report, tuple, with_control, limits);
    else if (id == "answerMorimoto")
      build_answer_morimoto(report, tuple, with_control, limits);
    else if (id == "answerMorimoto-corollary")
      build_answer_morimoto_corollary(report, tuple, with_control, limits);
    else if (id == "lemmaSymmetry")
      build_lemma_symmetry(report, tuple, with_control, limits);
    else if (id == "theorem5")
      build_theorem5(report, tuple, with_control, limits);
    else if (id == "lee-cable")
      build_lee_cable(report, tuple, with_control, limits);
    else if (id == "corollary1-torus")
      build_corollary1_torus(report, tuple, with_control, limits);
    else if (id == "morimotoYamada")
      build_morimoto_yamada(report, tuple, with_control, limits);
  }
  return report;
}

SuiteReport scan_conjecture(const ScanBounds& bounds,
                            const JonesLimits& limits) {
  if (bounds.p_max < 0 || bounds.p_max > 64)
    throw ValidationError("scan bound p_max out of range (0..64)");
  SuiteReport report;
  report.suite = "scan";
  report.params = {{bounds.p_max, bounds.q_max, bounds.crossing_cap}};
  int q_max = bounds.q_max > 0 ? bounds.q_max : bounds.p_max - 1;

  // Zero-framed positive-family cable fingerprints: the cable at twist
  // parameter s has Alexander span 12s+2, and no instance under the
  // crossing cap can have a larger span than its crossing count.
  std::vector<std::pair<int, LaurentPoly>> cable_deltas;
  for (int s = 1; 12 * s + 2 <= bounds.crossing_cap; ++s)
    cable_deltas.push_back(
        {s, cable_alexander(torus_alexander(2, 2 * s + 1), 2, 8 * s + 3)});

  for (int p = 3; p <= bounds.p_max; ++p)
    for (int q = 2; q < p && q <= q_max; ++q)
      for (int r = 2; r < p; ++r) {
        if (r % q == 0) continue;
        long long crossings =
            static_cast<long long>(q) * (p - 1) +
            static_cast<long long>(r) * (r - 1);
        std::string label = "T(" + std::to_string(p) + "," +
                            std::to_string(q) + ";" + std::to_string(r) +
                            ",1)";
        SuiteCase c;
        c.label = label;
        auto t0 = Clock::now();
        if (crossings > bounds.crossing_cap) {
          c.verdict.status = VerdictStatus::skipped;
          c.verdict.notes.push_back("crossing cap exceeded");
        } else {
          BraidWord w = twisted_torus_braid(p, q, r, 1);
          if (component_count(w) != 1) {
            c.verdict.status = VerdictStatus::skipped;
            c.verdict.notes.push_back("multi-component closure");
          } else {
            LaurentPoly delta = alexander(w);
            int matched_cable = 0;
            for (const auto& [s, cd] : cable_deltas)
              if (cd == delta) {
                matched_cable = s;
                break;
              }
            auto torus = identify_torus_knot(w, limits);
            if (matched_cable) {
              c.verdict.status = VerdictStatus::consistent;
              c.verdict.notes.push_back(
                  "matches the cable fingerprint at twist parameter s=" +
                  std::to_string(matched_cable));
            } else if (torus) {
              c.verdict.status = VerdictStatus::consistent;
              c.verdict.notes.push_back(
                  "consistent with T(" + std::to_string(torus->first) + "," +
                  std::to_string(torus->second) + ")");
            } else {
              c.verdict.status = VerdictStatus::distinct;
              c.verdict.notes.push_back(
                  "matches no torus knot and no listed cable; evidence only");
            }
            c.verdict.evidence.push_back(
                {"alexander", poly_text(delta), "", true});
          }
        }
        c.expected = c.verdict.status;  // an evidence table, not a pass/fail
        c.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0)
                       .count();
        report.cases.push_back(std::move(c));
      }
  return report;
}

std::string suite_report_text(const SuiteReport& report, bool with_timings) {
  std::ostringstream out;
  out << "suite " << report.suite << "\n";
  for (const SuiteCase& c : report.cases) {
    out << "  [" << (c.as_expected() ? "ok" : "UNEXPECTED") << "] " << c.label
        << ": " << verdict_status_name(c.verdict.status) << " (expected "
        << verdict_status_name(c.expected) << ")";
    if (with_timings) {
      std::ostringstream ms;
      ms.precision(1);
      ms << std::fixed << c.millis;
      out << " [" << ms.str() << " ms]";
    }
    out << "\n";
    for (const EvidenceRow& row : c.verdict.evidence) {
      out << "      " << row.invariant << ": " << row.left;
      if (!row.right.empty())
        out << (row.equal ? " == " : " != ") << row.right;
      out << "\n";
    }
    for (const std::string& note : c.verdict.notes)
      out << "      note: " << note << "\n";
  }
  out << (report.all_expected() ? "all cases as expected"
                                : "UNEXPECTED verdicts present")
      << "\n";
  return out.str();
}

}  // namespace braidforge
