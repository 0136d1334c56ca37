#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ed2/constructions.hpp"

namespace ed2 {

enum class Quantity { Ed, EdP };  // EdP always with p = 2 here
enum class CharAssumption { Any, NotTwo, EqualsTwo };

std::string char_name(CharAssumption c);

enum class BoundKind { Lower, Upper, Exact };

/// What a bound record is about.
struct ObjectRef {
  enum class Type { Alg, SlModMu, GlModMu, TorusNormalizer };
  Type type = Type::Alg;
  long long n = 0;
  long long m = 0;
  std::string construction;  // TorusNormalizer: cli name of the construction
  long long param = 0;

  static ObjectRef alg(long long n, long long m) { return {Type::Alg, n, m, "", 0}; }
  static ObjectRef sl(long long n, long long m) { return {Type::SlModMu, n, m, "", 0}; }
  static ObjectRef gl(long long n, long long m) { return {Type::GlModMu, n, m, "", 0}; }
  static ObjectRef normalizer(const std::string& c, long long p) {
    return {Type::TorusNormalizer, 0, 0, c, p};
  }
  bool operator==(const ObjectRef& o) const {
    return type == o.type && n == o.n && m == o.m && construction == o.construction &&
           param == o.param;
  }
  std::string to_string() const;
};

/// One essential-dimension bound with provenance. `chain` spells out the
/// derivation steps, most specific first.
struct BoundRecord {
  Quantity quantity = Quantity::EdP;
  int p = 2;
  ObjectRef object;
  CharAssumption char_assumption = CharAssumption::Any;
  BoundKind kind = BoundKind::Upper;
  long long value = 0;
  std::string provenance;  // "construction-verified" | "ledger-rule" | "literature"
  std::string rule;        // rule name or citation text
  std::vector<std::string> chain;

  std::string describe() const;
};

/// Everything known about one query (n, characteristic assumption, p): all
/// applicable records plus the best (max lower, min upper) pair for ed_p of
/// Alg(n,2), with the winning derivation chains.
struct BoundTable {
  long long n = 0;
  CharAssumption char_assumption = CharAssumption::NotTwo;
  int p = 2;
  long long reduced_n = 0;  // largest power of 2 dividing n
  std::vector<BoundRecord> records;
  std::optional<long long> best_lower, best_upper;
  std::vector<std::string> lower_chain, upper_chain;
};

/// Closed-form records for n = 2^r: the two ed_2 upper bounds (n^2/4 for any
/// characteristic, n^2/16 + n/2 away from 2), the ed upper bound
/// (n-1)(n-2)/2 away from 2 (all needing r >= 3), and the general
/// (log2(n)-1) n/2 lower bound for ed_2 away from 2 (n >= 4).
std::vector<BoundRecord> closed_forms(long long n);

struct PrimaryDecomposition {
  long long two_part = 1;
  std::vector<std::string> equalities;  // the ed / ed_2 reduction statements
};

/// Largest power of 2 dividing n; ed and ed_2 of Alg(n,2) equal those of
/// Alg(two_part,2).
PrimaryDecomposition primary_decomposition(long long n);

/// Fixed table of known exact values and bounds with their citations.
std::vector<BoundRecord> literature_constants();

/// Transfers Alg(n,m) bounds to SL_n/mu_m: ed(Alg) <= ed(SL/mu) <= ed(Alg)+1,
/// sharpened by the ed_p equality ed_2(SL_{2^r}/mu_2) = ed_2(Alg)+1 away from
/// characteristic 2. Requires m | n.
std::vector<BoundRecord> sandwich(long long n, long long m, CharAssumption ca);

/// Assembles every applicable record (closed forms, literature, primary
/// decomposition, live construction verdicts, sandwich transfers) and emits
/// the best pair for ed_p(Alg(n,2)). Only p = 2 is shipped.
BoundTable best_bounds(long long n, CharAssumption ca, int p);

/// Best (lower, upper) pair over a record set for one object and quantity;
/// throws ConflictError with both chains when lower > upper.
std::pair<std::optional<long long>, std::optional<long long>> best_pair(
    const std::vector<BoundRecord>& records, const ObjectRef& obj, Quantity q,
    CharAssumption query);

}  // namespace ed2
