#include "unionfam/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace unionfam {

std::size_t Report::passed() const {
  std::size_t c = 0;
  for (const auto& r : records) c += r.passed();
  return c;
}

std::size_t Report::failed() const {
  std::size_t c = 0;
  for (const auto& r : records) c += r.failed();
  return c;
}

std::size_t Report::skipped() const {
  return records.size() - passed() - failed();
}

void Report::append(const Report& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

void Report::sort_records() {
  std::stable_sort(records.begin(), records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     if (a.check != b.check) return a.check < b.check;
                     return a.params < b.params;
                   });
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["config"] = config;
  nlohmann::ordered_json recs = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json rec;
    rec["check"] = r.check;
    rec["anchor"] = r.anchor;
    rec["params"] = r.params;
    rec["expected"] = r.expected;
    rec["actual"] = r.actual;
    rec["verdict"] = r.verdict;
    recs.push_back(std::move(rec));
  }
  j["records"] = std::move(recs);
  nlohmann::ordered_json sum;
  sum["pass"] = passed();
  sum["fail"] = failed();
  sum["skip"] = skipped();
  j["summary"] = std::move(sum);
  return j.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string Report::to_csv() const {
  std::string out = "check,anchor,params,expected,actual,verdict\n";
  for (const auto& r : records) {
    out += csv_escape(r.check) + "," + csv_escape(r.anchor) + "," + csv_escape(r.params) +
           "," + csv_escape(r.expected) + "," + csv_escape(r.actual) + "," +
           csv_escape(r.verdict) + "\n";
  }
  return out;
}

std::string Report::to_md() const {
  std::string out = "| check | anchor | params | expected | actual | verdict |\n";
  out += "|---|---|---|---|---|---|\n";
  for (const auto& r : records) {
    out += "| " + r.check + " | " + r.anchor + " | " + r.params + " | " + r.expected +
           " | " + r.actual + " | " + r.verdict + " |\n";
  }
  out += "\npass: " + std::to_string(passed()) + ", fail: " + std::to_string(failed()) +
         ", skip: " + std::to_string(skipped()) + "\n";
  return out;
}

std::string Report::render(const std::string& format) const {
  if (format == "csv") return to_csv();
  if (format == "md") return to_md();
  return to_json();
}

CheckRecord make_eq_record(std::string check, std::string anchor, std::string params,
                           std::string expected, std::string actual) {
  CheckRecord r;
  r.check = std::move(check);
  r.anchor = std::move(anchor);
  r.params = std::move(params);
  r.verdict = expected == actual ? "pass" : "fail";
  r.expected = std::move(expected);
  r.actual = std::move(actual);
  return r;
}

CheckRecord make_bool_record(std::string check, std::string anchor, std::string params,
                             bool ok, std::string detail) {
  CheckRecord r;
  r.check = std::move(check);
  r.anchor = std::move(anchor);
  r.params = std::move(params);
  r.expected = "holds";
  r.actual = ok ? "holds" : (detail.empty() ? "violated" : "violated: " + detail);
  r.verdict = ok ? "pass" : "fail";
  return r;
}

}  // namespace unionfam
