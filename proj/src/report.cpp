#include "ed2/report.hpp"

#include <json.hpp>
#include <sstream>

namespace ed2 {

using nlohmann::json;

bool Report::all_passed() const {
  for (const auto& v : verdicts)
    if (!v.passed()) return false;
  for (const auto& u : usss)
    if (!u.passed()) return false;
  return true;
}

void Report::finalize_status() { status = all_passed() ? "pass" : "fail"; }

VerdictRow verdict_row(const Construction& c, const Verdict& v) {
  VerdictRow row;
  row.name = c.cli_name;
  row.param = c.parameter;
  row.well_defined = v.well_defined;
  row.surjective = v.surjective;
  row.faithful = v.faithful;
  row.kernel_rank = v.kernel_rank;
  row.source_rank = v.source_rank;
  row.target_rank = v.target_rank;
  row.bound = v.bound;
  row.expected_bound = c.expected_bound;
  row.strategy = v.strategy;
  row.witnesses = v.witnesses;
  for (const std::string& n : v.notes) row.witnesses.push_back("note: " + n);
  row.checks = c.checks;
  row.note = c.range_note;
  return row;
}

BoundsRow bounds_row(const BoundTable& t) {
  BoundsRow row;
  row.n = t.n;
  row.char_code = t.char_assumption == CharAssumption::EqualsTwo ? 2 : 0;
  row.p = t.p;
  row.reduced_n = t.reduced_n;
  row.lower = t.best_lower;
  row.upper = t.best_upper;
  for (const std::string& s : t.lower_chain) row.chain.push_back("lower: " + s);
  for (const std::string& s : t.upper_chain) row.chain.push_back("upper: " + s);
  for (const BoundRecord& r : t.records) row.records.push_back(r.describe());
  return row;
}

UsssRow usss_row(const UsssReport& u) {
  UsssRow row;
  row.r = u.r;
  row.stabilizer_factorization = u.stabilizer_factorization;
  row.generation = u.generation;
  row.module_generation = u.module_generation;
  row.intersection = u.intersection;
  std::ostringstream os;
  os << "|H_r| = " << u.group_order << ", |stab| = " << u.stab_order << ", |stab_{r-1}| = "
     << u.stab_prev_order << ", |P_prev| = " << u.sylow_prev_order << ", closure " << u.closure_order
     << ", intersection " << u.intersection_order;
  if (!u.notes.empty()) os << "; " << u.notes;
  row.notes = os.str();
  return row;
}

namespace {

json to_json(const VerdictRow& v) {
  json checks = json::array();
  for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return json{{"name", v.name},
              {"param", v.param},
              {"well_defined", v.well_defined},
              {"surjective", v.surjective},
              {"faithful", v.faithful},
              {"kernel_rank", v.kernel_rank},
              {"source_rank", v.source_rank},
              {"target_rank", v.target_rank},
              {"bound", v.bound},
              {"expected_bound", v.expected_bound},
              {"strategy", v.strategy},
              {"witnesses", v.witnesses},
              {"checks", checks},
              {"note", v.note},
              {"wall_ms", v.wall_ms}};
}

json to_json(const BoundsRow& b) {
  json j{{"n", b.n},       {"char", b.char_code},   {"p", b.p},
         {"reduced_n", b.reduced_n}, {"chain", b.chain}, {"records", b.records}};
  j["lower"] = b.lower ? json(*b.lower) : json(nullptr);
  j["upper"] = b.upper ? json(*b.upper) : json(nullptr);
  return j;
}

json to_json(const UsssRow& u) {
  return json{{"r", u.r},
              {"stabilizer_factorization", u.stabilizer_factorization},
              {"generation", u.generation},
              {"module_generation", u.module_generation},
              {"intersection", u.intersection},
              {"notes", u.notes},
              {"wall_ms", u.wall_ms}};
}

}  // namespace

std::string render_json(const Report& r) {
  json params = json::array();
  for (const auto& [k, v] : r.params) params.push_back({{"key", k}, {"value", v}});
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  json bounds = json::array();
  for (const auto& b : r.bounds) bounds.push_back(to_json(b));
  json usss = json::array();
  for (const auto& u : r.usss) usss.push_back(to_json(u));
  json j{{"version", r.version}, {"command", r.command}, {"params", params},
         {"verdicts", verdicts}, {"bounds", bounds},     {"usss", usss},
         {"status", r.status}};
  return j.dump(2) + "\n";
}

Report parse_report(const std::string& text) {
  json j = json::parse(text);
  Report r;
  r.version = j.at("version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  for (const auto& p : j.at("params"))
    r.params.emplace_back(p.at("key").get<std::string>(), p.at("value").get<std::string>());
  for (const auto& v : j.at("verdicts")) {
    VerdictRow row;
    row.name = v.at("name").get<std::string>();
    row.param = v.at("param").get<long long>();
    row.well_defined = v.at("well_defined").get<bool>();
    row.surjective = v.at("surjective").get<bool>();
    row.faithful = v.at("faithful").get<bool>();
    row.kernel_rank = v.at("kernel_rank").get<long long>();
    row.source_rank = v.at("source_rank").get<long long>();
    row.target_rank = v.at("target_rank").get<long long>();
    row.bound = v.at("bound").get<long long>();
    row.expected_bound = v.at("expected_bound").get<long long>();
    row.strategy = v.at("strategy").get<std::string>();
    row.witnesses = v.at("witnesses").get<std::vector<std::string>>();
    for (const auto& c : v.at("checks"))
      row.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                            c.at("detail").get<std::string>()});
    row.note = v.at("note").get<std::string>();
    row.wall_ms = v.at("wall_ms").get<double>();
    r.verdicts.push_back(std::move(row));
  }
  for (const auto& b : j.at("bounds")) {
    BoundsRow row;
    row.n = b.at("n").get<long long>();
    row.char_code = b.at("char").get<int>();
    row.p = b.at("p").get<int>();
    row.reduced_n = b.at("reduced_n").get<long long>();
    if (!b.at("lower").is_null()) row.lower = b.at("lower").get<long long>();
    if (!b.at("upper").is_null()) row.upper = b.at("upper").get<long long>();
    row.chain = b.at("chain").get<std::vector<std::string>>();
    row.records = b.at("records").get<std::vector<std::string>>();
    r.bounds.push_back(std::move(row));
  }
  for (const auto& u : j.at("usss")) {
    UsssRow row;
    row.r = u.at("r").get<long long>();
    row.stabilizer_factorization = u.at("stabilizer_factorization").get<bool>();
    row.generation = u.at("generation").get<bool>();
    row.module_generation = u.at("module_generation").get<bool>();
    row.intersection = u.at("intersection").get<bool>();
    row.notes = u.at("notes").get<std::string>();
    row.wall_ms = u.at("wall_ms").get<double>();
    r.usss.push_back(std::move(row));
  }
  r.status = j.at("status").get<std::string>();
  return r;
}

namespace {

const char* yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.version << "  command: " << r.command << "\n";
  for (const auto& [k, v] : r.params) os << "  " << k << " = " << v << "\n";
  for (const auto& v : r.verdicts) {
    os << "\n" << v.name << "(" << v.param << ")  [" << (v.passed() ? "PASS" : "FAIL") << "]\n";
    os << "  well-defined: " << yesno(v.well_defined) << "   surjective: " << yesno(v.surjective)
       << "   faithful on kernel: " << yesno(v.faithful) << "   strategy: " << v.strategy << "\n";
    os << "  source rank " << v.source_rank << ", target rank " << v.target_rank
       << ", kernel rank " << v.kernel_rank << "\n";
    os << "  bound " << v.bound << " (expected " << v.expected_bound << ")\n";
    for (const auto& c : v.checks)
      os << "  check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.detail << ")\n";
    for (const auto& w : v.witnesses) os << "  witness: " << w << "\n";
    if (!v.note.empty()) os << "  note: " << v.note << "\n";
    os << "  wall: " << v.wall_ms << " ms\n";
  }
  for (const auto& u : r.usss) {
    os << "\nrecursion checks r=" << u.r << "  [" << (u.passed() ? "PASS" : "FAIL") << "]\n";
    os << "  (i) stabilizer factorization: " << yesno(u.stabilizer_factorization)
       << "   (ii) generation: " << yesno(u.generation)
       << "   (iii) module generation: " << yesno(u.module_generation)
       << "   (iv) intersection: " << yesno(u.intersection) << "\n";
    os << "  " << u.notes << "\n";
  }
  for (const auto& b : r.bounds) {
    os << "\nbounds for Alg(" << b.n << ",2), char " << b.char_code << ", p = " << b.p;
    if (b.reduced_n != b.n) os << "  (reduces to " << b.reduced_n << ")";
    os << "\n  best: (";
    if (b.lower)
      os << *b.lower;
    else
      os << "-";
    os << ", ";
    if (b.upper)
      os << *b.upper;
    else
      os << "-";
    os << ")\n";
    for (const auto& s : b.chain) os << "    " << s << "\n";
    os << "  records:\n";
    for (const auto& s : b.records) os << "    " << s << "\n";
  }
  os << "\nstatus: " << r.status << "\n";
  return os.str();
}

bool report_equal_modulo_walltime(const Report& a, const Report& b) {
  json ja = json::parse(render_json(a));
  json jb = json::parse(render_json(b));
  for (json* j : {&ja, &jb}) {
    for (auto& v : (*j)["verdicts"]) v["wall_ms"] = 0.0;
    for (auto& u : (*j)["usss"]) u["wall_ms"] = 0.0;
  }
  return ja == jb;
}

}  // namespace ed2
