// Acceptance suite: one timed pass/fail line per criterion, nonzero exit when
// any line fails. Criterion 10 drives the installed CLI binary.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "ed2/bounds.hpp"
#include "ed2/constructions.hpp"
#include "ed2/report.hpp"
#include "oracle.hpp"

using namespace ed2;
using Clock = std::chrono::steady_clock;

namespace {

struct Line {
  std::string title;
  bool pass = false;
  std::string detail;
  double secs = 0.0;
};

std::vector<Line> g_lines;

void run(const std::string& title, double budget_secs,
         const std::function<bool(std::string&)>& body) {
  Line line;
  line.title = title;
  auto t0 = Clock::now();
  std::string detail;
  try {
    line.pass = body(detail);
  } catch (const std::exception& e) {
    line.pass = false;
    detail += std::string(" exception: ") + e.what();
  }
  line.secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_secs > 0 && line.secs > budget_secs) {
    line.pass = false;
    detail += " (over the " + std::to_string(budget_secs) + " s budget)";
  }
  line.detail = detail;
  g_lines.push_back(line);
}

bool same_verdict(const Verdict& a, const Verdict& b) {
  return a.well_defined == b.well_defined && a.surjective == b.surjective &&
         a.faithful == b.faithful && a.kernel_rank == b.kernel_rank &&
         a.source_rank == b.source_rank && a.target_rank == b.target_rank && a.bound == b.bound;
}

bool check_named(const Construction& c, const std::string& name) {
  for (const auto& ch : c.checks)
    if (ch.name == name) return ch.pass;
  return false;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(ED2TOOL_PATH) + " " + args;
  int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  if (WIFEXITED(rc)) return WEXITSTATUS(rc);
  return -2;
}

Report load_report(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_report(ss.str());
}

bool criterion1(std::string& detail) {
  bool ok = true;
  std::ostringstream os;
  for (int n = 3; n <= 10; ++n) {
    Construction c = lemma32i(n);
    Strategy s = n <= 8 ? Strategy::Exhaustive : Strategy::Witness;
    Verdict v = verify_generically_free(c.map, s);
    bool good = v.conditions_hold() && v.bound == 1ll * n * (n - 1) / 2 && c.checks_pass();
    ok &= good;
    os << " n=" << n << ":" << v.bound << (good ? "" : "(FAIL)");
  }
  detail = os.str();
  return ok;
}

bool criterion2(std::string& detail) {
  bool ok = true;
  std::ostringstream os;
  for (int n : {6, 8}) {
    Verdict v = verify_generically_free(lemma32ii(n).map, Strategy::Exhaustive);
    long long expect = 1ll * (n - 1) * (n - 2) / 2;
    bool good = v.conditions_hold() && v.bound == expect;
    ok &= good;
    os << " n=" << n << ":" << v.bound << (good ? "" : "(FAIL)");
  }
  os << "; n=8 matches (n-1)(n-2)/2 = 21";
  detail = os.str();
  return ok;
}

bool criterion3(std::string& detail) {
  bool ok = true;
  std::ostringstream os;
  for (int r : {2, 3, 4}) {
    Construction c = lemma33(r);
    Verdict witness = verify_generically_free(c.map, Strategy::Witness);
    Verdict exhaustive = verify_generically_free(c.map, Strategy::Exhaustive);
    long long expect = 1ll << (2 * r - 2);
    bool good = witness.conditions_hold() && exhaustive.conditions_hold() &&
                same_verdict(witness, exhaustive) && witness.bound == expect &&
                check_named(c, "kernel-witness-vector");
    ok &= good;
    os << " r=" << r << ":" << witness.bound << (good ? "" : "(FAIL)");
  }
  os << "; witness vector 2f{1,2^(r-1)+1}+g1+g{2^(r-1)+1} moved by the central element";
  detail = os.str();
  return ok;
}

bool criterion4(std::string& detail) {
  bool ok = true;
  std::ostringstream os;
  long long expect[] = {8, 24, 80};
  for (int r : {3, 4, 5}) {
    Construction c = section5(r);
    Verdict v = verify_generically_free(c.map, Strategy::Exhaustive);
    bool good = v.conditions_hold() && v.bound == expect[r - 3] &&
                check_named(c, "component-ranks") && check_named(c, "two-x-identity");
    ok &= good;
    os << " r=" << r << ":" << v.bound << (good ? "" : "(FAIL)");
  }
  Verdict a = verify_generically_free(section5(3).map, Strategy::Exhaustive);
  Verdict b = verify_generically_free(example_r3().map, Strategy::Exhaustive);
  bool same = same_verdict(a, b);
  ok &= same;
  os << "; r=3 verdict " << (same ? "=" : "!=") << " example-r3 verdict";
  detail = os.str();
  return ok;
}

bool criterion5(std::string& detail) {
  bool ok = true;
  std::ostringstream os;
  for (int r : {3, 4, 5}) {
    UsssReport rep = verify_usss(r);
    ok &= rep.pass();
    os << " r=" << r << ":" << (rep.pass() ? "all-four" : "FAIL");
  }
  detail = os.str();
  return ok;
}

bool criterion6(std::string& detail) {
  BoundTable t = best_bounds(16, CharAssumption::NotTwo, 2);
  bool pair_ok = t.best_lower && t.best_upper && *t.best_lower == 24 && *t.best_upper == 24;
  bool upper_prov = false, lower_prov = false;
  for (const auto& s : t.upper_chain)
    if (s.find("section5(4)") != std::string::npos) upper_prov = true;
  for (const auto& s : t.lower_chain)
    if (s.find("BM10") != std::string::npos) lower_prov = true;
  std::ostringstream os;
  os << " best=(" << (t.best_lower ? *t.best_lower : -1) << ","
     << (t.best_upper ? *t.best_upper : -1) << "), upper ends at the section5(4) verdict: "
     << (upper_prov ? "yes" : "NO") << ", lower is the general quadratic bound: "
     << (lower_prov ? "yes" : "NO");
  detail = os.str();
  return pair_ok && upper_prov && lower_prov;
}

bool criterion7(std::string& detail) {
  auto s8 = sandwich(8, 2, CharAssumption::NotTwo);
  auto s16 = sandwich(16, 2, CharAssumption::NotTwo);
  auto has = [](const std::vector<BoundRecord>& rs, Quantity q, long long n, long long value) {
    for (const auto& r : rs)
      if (r.quantity == q && r.object == ObjectRef::sl(n, 2) && r.kind == BoundKind::Exact &&
          r.value == value)
        return true;
    return false;
  };
  bool sl8 = has(s8, Quantity::Ed, 8, 9) && has(s8, Quantity::EdP, 8, 9);
  bool sl16 = has(s16, Quantity::EdP, 16, 25);
  BoundTable t = best_bounds(8, CharAssumption::EqualsTwo, 2);
  bool char2 = t.best_lower && t.best_upper && *t.best_lower == 3 && *t.best_upper == 10;
  std::ostringstream os;
  os << " ed(SL8/mu2)=9: " << (sl8 ? "yes" : "NO") << ", ed_2(SL16/mu2)=25: "
     << (sl16 ? "yes" : "NO") << ", best(8, char 2)=(3,10): " << (char2 ? "yes" : "NO");
  detail = os.str();
  return sl8 && sl16 && char2;
}

bool criterion8(std::string& detail) {
  int discrepancies = 0, checked = 0;
  auto compare = [&](const Construction& c) {
    if (!c.group.known_order() || *c.group.known_order() > Int(100000)) return;
    Verdict w = verify_generically_free(c.map, Strategy::Witness);
    Verdict e = verify_generically_free(c.map, Strategy::Exhaustive);
    ++checked;
    if (w.faithful != e.faithful || w.surjective != e.surjective) ++discrepancies;
  };
  for (int n = 3; n <= 8; ++n) compare(lemma32i(n));
  for (int n : {6, 8}) compare(lemma32ii(n));
  for (int r : {2, 3, 4}) compare(lemma33(r));
  for (int r : {3, 4, 5}) compare(section5(r));
  compare(example_r3());
  std::ostringstream os;
  os << " " << checked << " constructions cross-checked, " << discrepancies << " discrepancies";
  detail = os.str();
  return checked == 15 && discrepancies == 0;
}

bool criterion9(std::string& detail) {
  std::mt19937 rng(20240817);
  int failures = 0;
  for (int t = 0; t < 500; ++t) {
    std::size_t rows = 1 + t % 12, cols = 1 + (t * 7) % 12;
    IntMatrix m = ed2::testing::random_matrix(rng, rows, cols, -9, 9);
    SnfResult s = snf(m);
    if ((s.U * m * s.V) != s.S) ++failures;
    Int du = s.U.det(), dv = s.V.det();
    if (!(du == 1 || du == -1) || !(dv == 1 || dv == -1)) ++failures;
    for (std::size_t i = 0; i + 1 < s.factors.size(); ++i)
      if (s.factors[i + 1] % s.factors[i] != 0) ++failures;
    IntMatrix u = ed2::testing::random_unimodular(rng, cols);
    if (hnf(m).H != hnf(m * u).H) ++failures;
  }
  std::ostringstream os;
  os << " 500 matrices, " << failures << " failures";
  detail = os.str();
  return failures == 0;
}

bool criterion10(std::string& detail) {
  std::ostringstream os;
  int rc_a = run_cli("verify example-r3 --corrupt-image --format json --out acc10a.json "
                     ">/dev/null 2>&1");
  bool a_exit = rc_a == 1;
  bool a_wd = false;
  try {
    Report ra = load_report("acc10a.json");
    a_wd = !ra.verdicts.empty() && !ra.verdicts[0].well_defined;
  } catch (...) {
  }
  os << " corrupt-image: exit=" << rc_a << (a_exit ? "" : "(want 1)")
     << " well-defined-failure=" << (a_wd ? "yes" : "NO") << ";";

  int rc_b = run_cli("verify lemma32i --n 4 --drop-singletons --format json --out acc10b.json "
                     ">/dev/null 2>&1");
  bool b_exit = rc_b == 1;
  bool b_nonsurjective = false, b_factor2 = false, b_fails = false;
  std::string actual;
  try {
    Report rb = load_report("acc10b.json");
    if (!rb.verdicts.empty()) {
      const VerdictRow& v = rb.verdicts[0];
      b_fails = !v.passed();
      b_nonsurjective = !v.surjective;
      for (const auto& w : v.witnesses)
        if (w.find("cokernel invariant factor 2") != std::string::npos) b_factor2 = true;
      std::ostringstream act;
      act << "surjective=" << (v.surjective ? "yes" : "no") << " faithful="
          << (v.faithful ? "yes" : "no") << " kernel_rank=" << v.kernel_rank << " witnesses="
          << v.witnesses.size();
      actual = act.str();
    }
  } catch (...) {
  }
  os << " drop-singletons: exit=" << rc_b << (b_exit ? "" : "(want 1)") << " fails="
     << (b_fails ? "yes" : "NO") << " stated-mechanism[non-surjective+factor-2]="
     << ((b_nonsurjective && b_factor2) ? "yes" : "NO") << " (machine finds: " << actual << ")";
  detail = os.str();
  // The stated mechanism is asserted as written; see the pairs-span analysis
  // printed when it fails (the control does fail, with exit 1, but through
  // the faithfulness condition rather than surjectivity).
  return a_exit && a_wd && b_exit && b_fails && b_nonsurjective && b_factor2;
}

bool interface_examples(std::string& detail) {
  int a = run_cli("verify section5 --r 4 >/dev/null 2>&1");
  int b = run_cli("verify lemma32ii --n 5 >/dev/null 2>&1");
  int c = run_cli("report-all --max-r 7 >/dev/null 2>&1");
  int d = run_cli("bounds --n 24 --char 0 >/dev/null 2>&1");
  int e = run_cli("verify lemma32i --n 6 --strategy exhaustive >/dev/null 2>&1");
  // byte-identical structured reports modulo the wall-time fields
  run_cli("report-all --max-r 3 --out acc_det_a.json >/dev/null 2>&1");
  run_cli("report-all --max-r 3 --out acc_det_b.json >/dev/null 2>&1");
  bool deterministic = false;
  try {
    deterministic = report_equal_modulo_walltime(load_report("acc_det_a.json"),
                                                 load_report("acc_det_b.json"));
  } catch (...) {
  }
  std::remove("acc_det_a.json");
  std::remove("acc_det_b.json");
  std::ostringstream os;
  os << " section5 r=4 -> " << a << ", odd lemma32ii -> " << b << ", max-r 7 -> " << c
     << ", bounds 24 -> " << d << ", lemma32i exhaustive -> " << e << ", deterministic reports: "
     << (deterministic ? "yes" : "NO");
  detail = os.str();
  return a == 0 && b == 2 && c == 2 && d == 0 && e == 0 && deterministic;
}

}  // namespace

int main() {
  run("criterion 1: pair/singleton construction, n = 3..10, bound (n^2-n)/2", 30, criterion1);
  run("criterion 2: pair-class construction, n in {6,8}, bound (n^2-3n+2)/2", 10, criterion2);
  run("criterion 3: Sylow cross-pair construction, r in {2,3,4}, bound 2^(2r-2)", 60, criterion3);
  run("criterion 4: block construction, r in {3,4,5}, bound 2^(r-1)+2^(2r-4)", 120, criterion4);
  run("criterion 5: recursion checks (i)-(iv), r in {3,4,5}", 60, criterion5);
  run("criterion 6: best_bounds(16, char 0, p 2) = (24, 24), construction provenance", 0,
      criterion6);
  run("criterion 7: simple-group ledger values and the char-2 pair", 0, criterion7);
  run("criterion 8: witness = exhaustive on every shipped construction <= 1e5", 0, criterion8);
  run("criterion 9: 500-matrix normal-form property suite", 30, criterion9);
  run("criterion 10: negative controls through the CLI", 0, criterion10);
  run("interface examples: exit codes 0/2 on the documented commands", 0, interface_examples);

  bool all = true;
  for (const auto& line : g_lines) {
    std::printf("%s  %s  (%.2f s)%s\n", line.pass ? "PASS" : "FAIL", line.title.c_str(),
                line.secs, line.detail.empty() ? "" : ("  [" + line.detail + "]").c_str());
    all &= line.pass;
  }
  std::remove("acc10a.json");
  std::remove("acc10b.json");
  if (!all) {
    std::printf("\nnote: if only criterion 10 is red, see the analysis in the detail line — the\n"
                "pair vectors span the even-sum character lattice for every n >= 3 (e_i - e_j =\n"
                "f_ik - f_jk), so the stated surjectivity mechanism cannot occur; the control\n"
                "does fail verification (faithfulness: the double transpositions fix the kernel)\n"
                "and does exit 1.\n");
  }
  return all ? 0 : 1;
}
