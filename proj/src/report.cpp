#include "bas/report.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace bas {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << fnv1a(bytes);
  return os.str();
}

std::string emit_report_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["tool_version"] = r.tool_version;
  j["input_digest"] = r.input_digest;
  ordered_json verdicts = ordered_json::object();
  for (const auto& [name, e] : r.verdicts) {
    ordered_json ent;
    ent["pass"] = e.pass;
    if (!e.witness.empty()) ent["witness"] = e.witness;
    verdicts[name] = ent;
  }
  j["verdicts"] = verdicts;
  ordered_json pres = ordered_json::object();
  for (const auto& [k, v] : r.presentation) pres[k] = v;
  j["presentation"] = pres;
  ordered_json notes = ordered_json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  j["notes"] = notes;
  if (r.with_timings) {
    ordered_json t = ordered_json::object();
    for (const auto& [k, v] : r.timings_ms) t[k] = v;
    j["timings_ms"] = t;
  }
  return j.dump(2) + "\n";
}

std::string emit_report_text(const Report& r) {
  std::ostringstream os;
  for (const auto& [name, e] : r.verdicts) {
    os << name << ": " << (e.pass ? "PASS" : "FAIL");
    if (!e.witness.empty()) os << " (witness " << e.witness << ")";
    os << "\n";
  }
  for (const auto& [k, v] : r.presentation) os << k << ": " << v << "\n";
  for (const auto& [k, v] : r.notes) os << k << ": " << v << "\n";
  return os.str();
}

}  // namespace bas
