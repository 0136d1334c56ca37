#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ed2/bounds.hpp"
#include "ed2/constructions.hpp"

namespace ed2 {

inline constexpr const char* kToolVersion = "ed2tool 1.0.0";

struct VerdictRow {
  std::string name;
  long long param = 0;
  bool well_defined = false;
  bool surjective = false;
  bool faithful = false;
  long long kernel_rank = 0;
  long long source_rank = 0;
  long long target_rank = 0;
  long long bound = 0;
  long long expected_bound = 0;
  std::string strategy;
  std::vector<std::string> witnesses;
  std::vector<NamedCheck> checks;
  std::string note;
  double wall_ms = 0.0;

  bool passed() const {
    if (!(well_defined && surjective && faithful && bound == expected_bound)) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct BoundsRow {
  long long n = 0;
  int char_code = 0;  // 0 or 2
  int p = 2;
  long long reduced_n = 0;
  std::optional<long long> lower, upper;
  std::vector<std::string> chain;  // "lower: ..." and "upper: ..." lines
  std::vector<std::string> records;
};

struct UsssRow {
  long long r = 0;
  bool stabilizer_factorization = false;
  bool generation = false;
  bool module_generation = false;
  bool intersection = false;
  std::string notes;
  double wall_ms = 0.0;
  bool passed() const {
    return stabilizer_factorization && generation && module_generation && intersection;
  }
};

struct Report {
  std::string version = kToolVersion;
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<VerdictRow> verdicts;
  std::vector<BoundsRow> bounds;
  std::vector<UsssRow> usss;
  std::string status;  // "pass" | "fail" | "error"

  bool all_passed() const;
  void finalize_status();
};

VerdictRow verdict_row(const Construction& c, const Verdict& v);
BoundsRow bounds_row(const BoundTable& t);
UsssRow usss_row(const UsssReport& u);

std::string render_json(const Report& r);               // stable field names
Report parse_report(const std::string& json_text);      // inverse of render_json
std::string render_text(const Report& r);

bool report_equal_modulo_walltime(const Report& a, const Report& b);

}  // namespace ed2
