#include "ed2/bounds.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace ed2 {

std::string char_name(CharAssumption c) {
  switch (c) {
    case CharAssumption::Any:
      return "any";
    case CharAssumption::NotTwo:
      return "char != 2";
    case CharAssumption::EqualsTwo:
      return "char = 2";
  }
  return "?";
}

std::string ObjectRef::to_string() const {
  std::ostringstream os;
  switch (type) {
    case Type::Alg:
      os << "Alg(" << n << "," << m << ")";
      break;
    case Type::SlModMu:
      os << "SL" << n << "/mu" << m;
      break;
    case Type::GlModMu:
      os << "GL" << n << "/mu" << m;
      break;
    case Type::TorusNormalizer:
      os << "torus-normalizer[" << construction << "(" << param << ")]";
      break;
  }
  return os.str();
}

std::string BoundRecord::describe() const {
  std::ostringstream os;
  os << (quantity == Quantity::Ed ? "ed" : "ed_" + std::to_string(p)) << "(" << object.to_string()
     << ") ";
  switch (kind) {
    case BoundKind::Lower:
      os << ">= ";
      break;
    case BoundKind::Upper:
      os << "<= ";
      break;
    case BoundKind::Exact:
      os << "= ";
      break;
  }
  os << value << " (" << char_name(char_assumption) << ") [" << provenance << ": " << rule << "]";
  return os.str();
}

namespace {

bool char_applies(CharAssumption record, CharAssumption query) {
  return record == CharAssumption::Any || record == query;
}

int provenance_rank(const std::string& p) {
  if (p == "construction-verified") return 0;
  if (p == "ledger-rule") return 1;
  return 2;  // literature
}

BoundRecord rec(Quantity q, ObjectRef obj, CharAssumption ca, BoundKind kind, long long value,
                std::string provenance, std::string rule, std::vector<std::string> chain) {
  BoundRecord r;
  r.quantity = q;
  r.p = 2;
  r.object = obj;
  r.char_assumption = ca;
  r.kind = kind;
  r.value = value;
  r.provenance = std::move(provenance);
  r.rule = std::move(rule);
  r.chain = std::move(chain);
  return r;
}

bool is_two_power(long long n) { return n >= 1 && (n & (n - 1)) == 0; }

int log2_of(long long n) {
  int r = 0;
  while ((1ll << r) < n) ++r;
  return r;
}

}  // namespace

PrimaryDecomposition primary_decomposition(long long n) {
  if (n < 1) throw RangeError("primary_decomposition: n must be >= 1");
  PrimaryDecomposition pd;
  pd.two_part = 1;
  while (n % 2 == 0) {
    pd.two_part *= 2;
    n /= 2;
  }
  long long full = pd.two_part * n;
  if (n > 1) {
    std::ostringstream ed, edp;
    ed << "ed(Alg(" << full << ",2)) = ed(Alg(" << pd.two_part
       << ",2)): the odd part of the degree splits off";
    edp << "ed_2(Alg(" << full << ",2)) = ed_2(Alg(" << pd.two_part << ",2)): same reduction";
    pd.equalities = {ed.str(), edp.str()};
  }
  return pd;
}

std::vector<BoundRecord> literature_constants() {
  std::vector<BoundRecord> out;
  auto lit = [&](Quantity q, ObjectRef obj, CharAssumption ca, BoundKind k, long long v,
                 const std::string& cite) {
    out.push_back(rec(q, obj, ca, k, v, "literature", cite, {cite}));
  };
  const std::string bm10 = "[BM10] Remark 8.2 and Corollary 8.3";
  lit(Quantity::Ed, ObjectRef::alg(4, 2), CharAssumption::NotTwo, BoundKind::Exact, 4, bm10);
  lit(Quantity::EdP, ObjectRef::alg(4, 2), CharAssumption::NotTwo, BoundKind::Exact, 4, bm10);
  lit(Quantity::Ed, ObjectRef::alg(8, 2), CharAssumption::NotTwo, BoundKind::Exact, 8, bm10);
  lit(Quantity::EdP, ObjectRef::alg(8, 2), CharAssumption::NotTwo, BoundKind::Exact, 8, bm10);

  const std::string baek = "[Baek] Theorems 1.1 and 1.2 (characteristic 2)";
  lit(Quantity::Ed, ObjectRef::alg(4, 2), CharAssumption::EqualsTwo, BoundKind::Exact, 3, baek);
  lit(Quantity::EdP, ObjectRef::alg(4, 2), CharAssumption::EqualsTwo, BoundKind::Exact, 3, baek);
  lit(Quantity::EdP, ObjectRef::alg(8, 2), CharAssumption::EqualsTwo, BoundKind::Lower, 3, baek);
  lit(Quantity::Ed, ObjectRef::alg(8, 2), CharAssumption::EqualsTwo, BoundKind::Upper, 10, baek);

  const std::string sl2 = "[Reichstein00a] 8.5.7 and [Re00] 9.4(c)";
  lit(Quantity::Ed, ObjectRef::sl(2, 2), CharAssumption::Any, BoundKind::Exact, 2, sl2);
  lit(Quantity::EdP, ObjectRef::sl(2, 2), CharAssumption::Any, BoundKind::Exact, 2, sl2);
  const std::string sl44 = "[Merkurjev09a] Corollary 1.2";
  lit(Quantity::Ed, ObjectRef::sl(4, 4), CharAssumption::NotTwo, BoundKind::Exact, 5, sl44);
  lit(Quantity::EdP, ObjectRef::sl(4, 4), CharAssumption::NotTwo, BoundKind::Exact, 5, sl44);
  const std::string sl42 = "[Re00] Theorem 10.4 and Example 12.7 (SL4/mu2 = SO6)";
  lit(Quantity::Ed, ObjectRef::sl(4, 2), CharAssumption::NotTwo, BoundKind::Exact, 5, sl42);
  lit(Quantity::EdP, ObjectRef::sl(4, 2), CharAssumption::NotTwo, BoundKind::Exact, 5, sl42);
  return out;
}

std::vector<BoundRecord> closed_forms(long long n) {
  if (!is_two_power(n) || n < 4)
    throw RangeError("closed_forms: n must be a power of 2, n >= 4");
  int r = log2_of(n);
  std::vector<BoundRecord> out;
  if (r >= 3) {
    out.push_back(rec(Quantity::Ed, ObjectRef::alg(n, 2), CharAssumption::NotTwo,
                      BoundKind::Upper, (n - 1) * (n - 2) / 2, "ledger-rule",
                      "closed form (n-1)(n-2)/2: SL-normalizer route",
                      {"ed(Alg(" + std::to_string(n) + ",2)) <= (n-1)(n-2)/2 (char != 2)"}));
    out.push_back(rec(Quantity::EdP, ObjectRef::alg(n, 2), CharAssumption::EqualsTwo,
                      BoundKind::Upper, n * n / 4, "ledger-rule",
                      "closed form n^2/4: Sylow-normalizer route",
                      {"ed_2(Alg(" + std::to_string(n) + ",2)) <= n^2/4 (char = 2 case)"}));
    out.push_back(rec(Quantity::EdP, ObjectRef::alg(n, 2), CharAssumption::NotTwo,
                      BoundKind::Upper, n * n / 16 + n / 2, "ledger-rule",
                      "closed form n^2/16 + n/2: block-group route",
                      {"ed_2(Alg(" + std::to_string(n) + ",2)) <= n^2/16 + n/2 (char != 2)"}));
  }
  out.push_back(rec(Quantity::EdP, ObjectRef::alg(n, 2), CharAssumption::NotTwo, BoundKind::Lower,
                    (r - 1) * n / 2, "literature", "[BM10] general lower bound",
                    {"(log2(n)-1) n/2 <= ed_2(Alg(" + std::to_string(n) + ",2)) (char != 2) [BM10]"}));
  out.push_back(rec(Quantity::EdP, ObjectRef::alg(n, 2), CharAssumption::NotTwo, BoundKind::Upper,
                    n * n / 4 + n / 2, "literature", "[BM10] general upper bound",
                    {"ed_2(Alg(" + std::to_string(n) + ",2)) <= n^2/4 + n/2 (char != 2) [BM10]"}));
  return out;
}

namespace {

// Live construction verdicts, cached per process. A run backs a bound record
// only when the verdict passes, the bound matches the closed form, and every
// construction self-check holds.
struct CachedRun {
  Verdict v;
  bool record_ok = false;
};

const CachedRun* cached_verdict(ConstructionId id, long long param) {
  static std::mutex mu;
  static std::map<std::pair<std::string, long long>, CachedRun> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(construction_cli_name(id), param);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Construction c = build_construction(id, param);
    CachedRun run;
    run.v = verify_generically_free(c.map, resolve_strategy(c, Strategy::Auto));
    run.record_ok =
        run.v.conditions_hold() && run.v.bound == c.expected_bound && c.checks_pass();
    it = cache.emplace(key, std::move(run)).first;
  }
  return &it->second;
}

std::string verdict_line(const std::string& name, long long param, const Verdict& v) {
  std::ostringstream os;
  os << name << "(" << param << "): well-defined, surjective, faithful on kernel; bound = "
     << v.source_rank << " - " << v.target_rank << " = " << v.bound << " (strategy " << v.strategy
     << ")";
  return os.str();
}

void add_construction_records(std::vector<BoundRecord>& out, long long n) {
  int r = log2_of(n);
  // Block-group route (the sharpest ed_2 bound away from characteristic 2).
  if (r >= 3 && r <= 6) {
    const CachedRun* run = cached_verdict(ConstructionId::Section5, r);
    if (run->record_ok) {
      const Verdict* v = &run->v;
      std::string head = verdict_line("section5", r, *v);
      out.push_back(rec(Quantity::Ed, ObjectRef::normalizer("section5", r), CharAssumption::Any,
                        BoundKind::Upper, v->bound, "construction-verified",
                        "generically-free-representation bound",
                        {head, "ed(T_r x| H_r) <= dim - rank = " + std::to_string(v->bound)}));
      out.push_back(rec(
          Quantity::EdP, ObjectRef::alg(n, 2), CharAssumption::NotTwo, BoundKind::Upper, v->bound,
          "construction-verified", "theta-transfer",
          {head, "ed_2(T_r x| H_r) <= ed(T_r x| H_r) <= " + std::to_string(v->bound),
           "ed_2(T_r x| G_r) = ed_2(T_r x| H_r): the Sylow inclusion has odd index",
           "ed_2(Alg(" + std::to_string(n) + ",2)) <= max(ed_2(T_r x| G_r), earlier stages) = " +
               std::to_string(v->bound) +
               " via the splitting-field surjection (char != 2; cohomological step trusted, "
               "labeled ledger-rule)"}));
    }
  }
  // Sylow-normalizer route (any characteristic).
  if (r >= 2 && r <= 4) {
    const CachedRun* run = cached_verdict(ConstructionId::Lemma33, r);
    if (run->record_ok) {
      const Verdict* v = &run->v;
      std::string head = verdict_line("lemma33", r, *v);
      out.push_back(rec(Quantity::Ed, ObjectRef::normalizer("lemma33", r), CharAssumption::Any,
                        BoundKind::Upper, v->bound, "construction-verified",
                        "generically-free-representation bound",
                        {head, "ed(T x| P_{2^r}) <= dim - rank = " + std::to_string(v->bound)}));
      out.push_back(rec(
          Quantity::EdP, ObjectRef::alg(n, 2), CharAssumption::Any, BoundKind::Upper, v->bound,
          "construction-verified", "sylow-normalizer-transfer",
          {head,
           "ed_2(GL_{2^r}/mu_2) <= ed_2(T x| S_{2^r}) = ed_2(T x| P_{2^r}) <= ed(T x| P_{2^r}) "
           "(normalizer surjection; odd-index Sylow inclusion)",
           "Alg(" + std::to_string(n) + ",2) classifies GL_{2^r}/mu_2 torsors"}));
    }
  }
  // SL-normalizer route (ed bound away from characteristic 2).
  if (n >= 8 && n <= 32) {
    const CachedRun* run = cached_verdict(ConstructionId::Lemma32ii, n);
    if (run->record_ok) {
      const Verdict* v = &run->v;
      std::string head = verdict_line("lemma32ii", n, *v);
      out.push_back(rec(Quantity::Ed, ObjectRef::normalizer("lemma32ii", n), CharAssumption::Any,
                        BoundKind::Upper, v->bound, "construction-verified",
                        "generically-free-representation bound",
                        {head, "ed(T' x| S_n) <= dim - rank = " + std::to_string(v->bound)}));
      out.push_back(
          rec(Quantity::Ed, ObjectRef::alg(n, 2), CharAssumption::NotTwo, BoundKind::Upper,
              v->bound, "construction-verified", "sl-normalizer-transfer",
              {head, "ed(SL_n/mu_2) <= ed(T' x| S_n) (normalizer surjection)",
               "ed(Alg(" + std::to_string(n) +
                   ",2)) <= ed(SL_n/mu_2) (surjection onto the algebra classes; char != 2)"}));
    }
  }
  // Plain GL-normalizer construction: kept at the normalizer level.
  if (n >= 4 && n <= 16) {
    const CachedRun* run = cached_verdict(ConstructionId::Lemma32i, n);
    if (run->record_ok) {
      const Verdict* v = &run->v;
      out.push_back(rec(Quantity::Ed, ObjectRef::normalizer("lemma32i", n), CharAssumption::Any,
                        BoundKind::Upper, v->bound, "construction-verified",
                        "generically-free-representation bound",
                        {verdict_line("lemma32i", n, *v),
                         "ed(T x| S_n) <= dim - rank = " + std::to_string(v->bound)}));
    }
  }
}

struct QuantityBest {
  std::optional<long long> lower, upper;
  std::vector<std::string> lower_chain, upper_chain;
  const BoundRecord* lower_rec = nullptr;
  const BoundRecord* upper_rec = nullptr;
};

// Better candidate for an upper (or lower) slot: strictly better value first,
// then exact kind, then provenance rank, then first insertion.
bool improves(const BoundRecord& cand, const BoundRecord* cur, bool upper) {
  if (!cur) return true;
  if (cand.value != cur->value) return upper ? cand.value < cur->value : cand.value > cur->value;
  bool ce = cand.kind == BoundKind::Exact, oe = cur->kind == BoundKind::Exact;
  if (ce != oe) return ce;
  return provenance_rank(cand.provenance) < provenance_rank(cur->provenance);
}

QuantityBest best_of(const std::vector<BoundRecord>& records, const ObjectRef& obj, Quantity q,
                     CharAssumption query) {
  QuantityBest b;
  for (const BoundRecord& r : records) {
    if (!(r.object == obj) || r.quantity != q || !char_applies(r.char_assumption, query)) continue;
    if (r.kind != BoundKind::Lower && improves(r, b.upper_rec, true)) b.upper_rec = &r;
    if (r.kind != BoundKind::Upper && improves(r, b.lower_rec, false)) b.lower_rec = &r;
  }
  if (b.upper_rec) {
    b.upper = b.upper_rec->value;
    b.upper_chain = b.upper_rec->chain;
  }
  if (b.lower_rec) {
    b.lower = b.lower_rec->value;
    b.lower_chain = b.lower_rec->chain;
  }
  return b;
}

void check_consistent(const QuantityBest& b, const std::string& what) {
  if (b.lower && b.upper && *b.lower > *b.upper) {
    std::ostringstream os;
    os << "inconsistent bound records for " << what << ": lower " << *b.lower << " > upper "
       << *b.upper << "\n  lower chain:";
    for (const auto& s : b.lower_chain) os << "\n    " << s;
    os << "\n  upper chain:";
    for (const auto& s : b.upper_chain) os << "\n    " << s;
    throw ConflictError(os.str());
  }
}

struct AlgCore {
  std::vector<BoundRecord> records;
  QuantityBest ed, edp;
};

AlgCore alg_core(long long m, CharAssumption ca) {
  AlgCore core;
  ObjectRef obj = ObjectRef::alg(m, 2);
  for (BoundRecord& r : literature_constants())
    if (r.object == obj && char_applies(r.char_assumption, ca)) core.records.push_back(std::move(r));
  if (m >= 4)
    for (BoundRecord& r : closed_forms(m))
      if (char_applies(r.char_assumption, ca)) core.records.push_back(std::move(r));
  if (m >= 4) {
    std::vector<BoundRecord> construction;
    add_construction_records(construction, m);
    for (BoundRecord& r : construction)
      if (char_applies(r.char_assumption, ca)) core.records.push_back(std::move(r));
  }

  // Derived records: ed_2 <= ed and ed >= ed_2.
  std::vector<BoundRecord> derived;
  for (const BoundRecord& r : core.records) {
    if (!(r.object == obj)) continue;
    if (r.quantity == Quantity::Ed && r.kind != BoundKind::Lower) {
      auto chain = r.chain;
      chain.push_back("ed_2 <= ed");
      derived.push_back(rec(Quantity::EdP, obj, r.char_assumption, BoundKind::Upper, r.value,
                            "ledger-rule", "ed_p <= ed", std::move(chain)));
    }
    if (r.quantity == Quantity::EdP && r.kind != BoundKind::Upper) {
      auto chain = r.chain;
      chain.push_back("ed >= ed_2");
      derived.push_back(rec(Quantity::Ed, obj, r.char_assumption, BoundKind::Lower, r.value,
                            "ledger-rule", "ed >= ed_p", std::move(chain)));
    }
  }
  for (BoundRecord& r : derived) core.records.push_back(std::move(r));

  core.ed = best_of(core.records, obj, Quantity::Ed, ca);
  core.edp = best_of(core.records, obj, Quantity::EdP, ca);
  check_consistent(core.ed, "ed(" + obj.to_string() + ")");
  check_consistent(core.edp, "ed_2(" + obj.to_string() + ")");
  return core;
}

std::vector<BoundRecord> sandwich_from_core(long long n, long long m, CharAssumption ca,
                                            const AlgCore& core) {
  std::vector<BoundRecord> out;
  if (ca != CharAssumption::NotTwo) return out;  // the transfer needs char not dividing n
  ObjectRef sl = ObjectRef::sl(n, m);
  std::string alg = ObjectRef::alg(n, m).to_string();

  QuantityBest edp_sl;
  if (core.edp.lower) {
    auto chain = core.edp.lower_chain;
    chain.push_back("ed_2(SL_{2^r}/mu_2) = ed_2(" + alg + ") + 1 [CM equality, char != 2]");
    out.push_back(rec(Quantity::EdP, sl, CharAssumption::NotTwo, BoundKind::Lower,
                      *core.edp.lower + 1, "ledger-rule", "cm-equality", std::move(chain)));
  }
  if (core.edp.upper) {
    auto chain = core.edp.upper_chain;
    chain.push_back("ed_2(SL_{2^r}/mu_2) = ed_2(" + alg + ") + 1 [CM equality, char != 2]");
    out.push_back(rec(Quantity::EdP, sl, CharAssumption::NotTwo, BoundKind::Upper,
                      *core.edp.upper + 1, "ledger-rule", "cm-equality", std::move(chain)));
  }
  if (core.edp.lower && core.edp.upper && *core.edp.lower == *core.edp.upper) {
    auto chain = core.edp.upper_chain;
    chain.push_back("ed_2(SL/mu) pinned to " + std::to_string(*core.edp.upper + 1) +
                    " by the CM equality");
    out.push_back(rec(Quantity::EdP, sl, CharAssumption::NotTwo, BoundKind::Exact,
                      *core.edp.upper + 1, "ledger-rule", "cm-equality", std::move(chain)));
  }

  std::optional<long long> ed_sl_lower, ed_sl_upper;
  std::vector<std::string> ed_sl_lower_chain, ed_sl_upper_chain;
  if (core.ed.upper) {
    ed_sl_upper = *core.ed.upper + 1;
    ed_sl_upper_chain = core.ed.upper_chain;
    ed_sl_upper_chain.push_back("ed(SL_n/mu_m) <= ed(" + alg + ") + 1 (one-parameter fibration)");
    out.push_back(rec(Quantity::Ed, sl, CharAssumption::NotTwo, BoundKind::Upper, *ed_sl_upper,
                      "ledger-rule", "sandwich-upper", ed_sl_upper_chain));
  }
  if (core.ed.lower) {
    ed_sl_lower = *core.ed.lower;
    ed_sl_lower_chain = core.ed.lower_chain;
    ed_sl_lower_chain.push_back("ed(" + alg + ") <= ed(SL_n/mu_m) (surjection onto the classes)");
  }
  if (core.edp.lower && (!ed_sl_lower || *core.edp.lower + 1 > *ed_sl_lower)) {
    ed_sl_lower = *core.edp.lower + 1;
    ed_sl_lower_chain = core.edp.lower_chain;
    ed_sl_lower_chain.push_back("ed_2(SL/mu) = ed_2(" + alg + ") + 1 [CM equality]");
    ed_sl_lower_chain.push_back("ed >= ed_2");
  }
  if (ed_sl_lower)
    out.push_back(rec(Quantity::Ed, sl, CharAssumption::NotTwo, BoundKind::Lower, *ed_sl_lower,
                      "ledger-rule", "sandwich-lower", ed_sl_lower_chain));
  if (ed_sl_lower && ed_sl_upper && *ed_sl_lower == *ed_sl_upper) {
    auto chain = ed_sl_upper_chain;
    chain.insert(chain.end(), ed_sl_lower_chain.begin(), ed_sl_lower_chain.end());
    chain.push_back("lower and upper coincide");
    out.push_back(rec(Quantity::Ed, sl, CharAssumption::NotTwo, BoundKind::Exact, *ed_sl_upper,
                      "ledger-rule", "sandwich", std::move(chain)));
  }
  return out;
}

}  // namespace

std::pair<std::optional<long long>, std::optional<long long>> best_pair(
    const std::vector<BoundRecord>& records, const ObjectRef& obj, Quantity q,
    CharAssumption query) {
  QuantityBest b = best_of(records, obj, q, query);
  check_consistent(b, (q == Quantity::Ed ? "ed(" : "ed_2(") + obj.to_string() + ")");
  return {b.lower, b.upper};
}

std::vector<BoundRecord> sandwich(long long n, long long m, CharAssumption ca) {
  if (m < 1 || n % m != 0) throw RangeError("sandwich: m must divide n");
  if (m != 2) throw RangeError("sandwich: only m = 2 ledger rules are shipped");
  PrimaryDecomposition pd = primary_decomposition(n);
  if (pd.two_part != n)
    throw RangeError("sandwich: shipped only for 2-power degrees (char != 2 covers char not "
                     "dividing n exactly then)");
  AlgCore core = alg_core(n, ca);
  return sandwich_from_core(n, m, ca, core);
}

BoundTable best_bounds(long long n, CharAssumption ca, int p) {
  if (p != 2) throw RangeError("best_bounds: only p = 2 is supported");
  if (ca == CharAssumption::Any)
    throw RangeError("best_bounds: pick a characteristic assumption (0 or 2)");
  if (n < 2) throw RangeError("best_bounds: n must be >= 2");
  BoundTable table;
  table.n = n;
  table.char_assumption = ca;
  table.p = p;
  PrimaryDecomposition pd = primary_decomposition(n);
  table.reduced_n = pd.two_part;
  long long m = pd.two_part;

  if (m == 1) {
    table.records.push_back(rec(Quantity::EdP, ObjectRef::alg(n, 2), CharAssumption::Any,
                                BoundKind::Exact, 0, "ledger-rule", "primary-decomposition",
                                {"odd degree: every class of exponent dividing 2 splits; ed = 0"}));
    table.best_lower = table.best_upper = 0;
    table.lower_chain = table.upper_chain = table.records.back().chain;
    return table;
  }

  AlgCore core = alg_core(m, ca);
  table.records = std::move(core.records);
  table.best_lower = core.edp.lower;
  table.best_upper = core.edp.upper;
  table.lower_chain = core.edp.lower_chain;
  table.upper_chain = core.edp.upper_chain;
  if (m != n) {
    for (const std::string& eq : pd.equalities) {
      table.lower_chain.push_back(eq);
      table.upper_chain.push_back(eq);
    }
  }

  // Mirror the best pair onto the GL_n/mu_2 alias.
  if (table.best_upper)
    table.records.push_back(rec(Quantity::EdP, ObjectRef::gl(m, 2), ca, BoundKind::Upper,
                                *table.best_upper, "ledger-rule", "torsor-identification",
                                {"H^1(-, GL_n/mu_2) classifies Alg(n,2)"}));
  if (table.best_lower)
    table.records.push_back(rec(Quantity::EdP, ObjectRef::gl(m, 2), ca, BoundKind::Lower,
                                *table.best_lower, "ledger-rule", "torsor-identification",
                                {"H^1(-, GL_n/mu_2) classifies Alg(n,2)"}));

  if (ca == CharAssumption::NotTwo && m == n && n >= 4)
    for (BoundRecord& r : sandwich_from_core(n, 2, ca, core)) table.records.push_back(std::move(r));
  return table;
}

}  // namespace ed2
