#ifndef SIXPOINT_HARNESS_REPORT_HPP
#define SIXPOINT_HARNESS_REPORT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sixpoint::harness {

enum class ReportFormat { text, structured };

/// Throws Error(usage) for anything but "text" or "structured".
ReportFormat parse_format(std::string_view name);

/// Agreement of one formula/oracle pair.
enum class Agreement { agree, disagree, degenerate };

const char* to_string(Agreement a) noexcept;

/// Ordered key/value document. Keys keep insertion order, which every
/// command fixes, so the rendered output is byte-stable.
class Report {
 public:
  void add(std::string key, std::string value);
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }

  /// Records the outcome of a comparison; any disagree marks the report.
  void add_agreement(std::string key, Agreement a);

  void mark_disagreement() { disagreement_ = true; }
  bool has_disagreement() const { return disagreement_; }
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  /// structured: "key = value" lines. text: keys padded into a column.
  std::string render(ReportFormat format) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  bool disagreement_ = false;
};

}  // namespace sixpoint::harness

#endif  // SIXPOINT_HARNESS_REPORT_HPP
