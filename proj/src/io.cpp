#include "qzeta/io.hpp"

#include <iomanip>
#include <sstream>

namespace qzeta {

using nlohmann::json;

json to_json(const Laurent& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"eq", e.eq}, {"et", e.et}, {"c", c.get_str()}});
  return {{"type", "laurent"}, {"terms", terms}};
}

json to_json(const Fraction& f) {
  json den = json::array();
  for (const auto& fac : f.den()) {
    const auto& [e, c] = *fac.base.terms().begin();
    den.push_back({{"base", {{"eq", e.eq}, {"et", e.et}, {"c", c.get_str()}}},
                   {"step", fac.step},
                   {"len", fac.len}});
  }
  return {{"type", "fraction"}, {"num", to_json(f.num())}, {"den", den}};
}

json to_json(const SuiteReport& rep, bool include_timing) {
  json results = json::array();
  for (const auto& r : rep.results) {
    json item = {{"point", r.point}, {"pass", r.pass}};
    if (!r.pass) item["witness"] = r.witness;
    results.push_back(std::move(item));
  }
  json out = {
      {"suite", rep.suite},
      {"tag", rep.tag == CheckTag::Theorem ? "theorem" : "conjectural"},
      {"results", results},
      {"skipped", rep.skipped},
      {"totals",
       {{"pass", (int)rep.results.size() - rep.failures()},
        {"fail", rep.failures()},
        {"skipped", (int)rep.skipped.size()}}},
  };
  if (include_timing) out["wall_seconds"] = rep.wall_seconds;
  return out;
}

std::string report_text(const SuiteReport& rep, bool include_timing) {
  std::ostringstream os;
  std::size_t width = 8;
  for (const auto& r : rep.results) width = std::max(width, r.point.size());
  const bool conjectural = rep.tag == CheckTag::Conjectural;
  os << "suite " << rep.suite << " ["
     << (conjectural ? "conjectural" : "theorem") << "]\n";
  for (const auto& r : rep.results) {
    os << "  " << std::left << std::setw((int)width) << r.point << "  "
       << (r.pass ? "PASS" : (conjectural ? "CONJECTURE-FALSIFIED" : "FAIL"));
    if (!r.pass && !r.witness.empty()) os << "  first-diff: " << r.witness;
    os << "\n";
  }
  for (const auto& s : rep.skipped) os << "  SKIPPED " << s << "\n";
  os << "  totals: " << rep.results.size() - rep.failures() << " pass, "
     << rep.failures() << " fail, " << rep.skipped.size() << " skipped";
  if (include_timing)
    os << "  (" << std::fixed << std::setprecision(2) << rep.wall_seconds
       << "s)";
  os << "\n";
  return os.str();
}

std::string oracle_csv_header() {
  return "schema,target,params,degree,value,wall_ms";
}

std::string oracle_csv_row(
    const std::string& target,
    const std::vector<std::pair<std::string, std::string>>& params,
    std::int64_t degree, long long value, double wall_ms,
    bool include_timing) {
  std::ostringstream os;
  os << "qzeta-oracle-v1," << target << ",";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) os << ";";
    first = false;
    os << k << "=" << v;
  }
  os << "," << degree << "," << value << ",";
  if (include_timing)
    os << std::fixed << std::setprecision(1) << wall_ms;
  else
    os << "-";
  return os.str();
}

Partition parse_partition(const std::string& s) {
  return Partition(parse_tuple(s));
}

std::vector<std::int64_t> parse_tuple(const std::string& s) {
  std::vector<std::int64_t> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ','))
    if (!cur.empty()) out.push_back(std::stoll(cur));
  return out;
}

}  // namespace qzeta
