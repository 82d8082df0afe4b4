#ifndef BAS_REPORT_HPP
#define BAS_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace bas {

/// Machine-readable verification report. Deterministic by construction: maps
/// are ordered, rationals go out as "p/q" strings, and timings are opt-in so
/// that default output is byte-identical across runs.
struct Report {
  std::string tool_version;
  std::string input_digest;
  struct Entry {
    bool pass = false;
    std::string witness;  // first nonzero component, exact, empty when passing
  };
  std::map<std::string, Entry> verdicts;
  std::map<std::string, std::string> presentation;  // dims and summaries
  std::map<std::string, std::string> notes;         // decisions, obstructions
  bool with_timings = false;
  std::map<std::string, double> timings_ms;
};

std::uint64_t fnv1a(std::string_view bytes);
std::string fnv1a_hex(std::string_view bytes);

std::string emit_report_json(const Report& r);
std::string emit_report_text(const Report& r);

}  // namespace bas

#endif
