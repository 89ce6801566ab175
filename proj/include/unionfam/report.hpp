#ifndef UNIONFAM_REPORT_HPP
#define UNIONFAM_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace unionfam {

inline constexpr const char* kToolName = "unionfam";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

// One verification record. `anchor` tags the mathematical statement a check
// exercises; verdicts are pass, fail, or skip:<reason>. All numbers are
// rendered as exact decimal strings.
struct CheckRecord {
  std::string check;
  std::string anchor;
  std::string params;
  std::string expected;
  std::string actual;
  std::string verdict;

  bool passed() const { return verdict == "pass"; }
  bool failed() const { return verdict == "fail"; }
};

struct Report {
  std::string config;
  std::vector<CheckRecord> records;

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;

  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void append(const Report& other);

  // Record order is fixed (check id, then params) regardless of how suite
  // items were scheduled.
  void sort_records();

  std::string to_json() const;
  std::string to_csv() const;
  std::string to_md() const;
  std::string render(const std::string& format) const;
};

// Convenience for pass/fail records comparing two rendered values.
CheckRecord make_eq_record(std::string check, std::string anchor, std::string params,
                           std::string expected, std::string actual);

CheckRecord make_bool_record(std::string check, std::string anchor, std::string params,
                             bool ok, std::string detail = "");

}  // namespace unionfam

#endif
