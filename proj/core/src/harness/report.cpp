#include "sixpoint/harness/report.hpp"

#include <algorithm>

#include "sixpoint/error.hpp"

namespace sixpoint::harness {

ReportFormat parse_format(std::string_view name) {
  if (name == "text") return ReportFormat::text;
  if (name == "structured") return ReportFormat::structured;
  throw Error(Errc::usage, "format: expected 'text' or 'structured', got '" + std::string(name) + "'");
}

const char* to_string(Agreement a) noexcept {
  switch (a) {
    case Agreement::agree: return "true";
    case Agreement::disagree: return "false";
    case Agreement::degenerate: return "degenerate";
  }
  return "?";
}

void Report::add(std::string key, std::string value) {
  entries_.emplace_back(std::move(key), std::move(value));
}

void Report::add_agreement(std::string key, Agreement a) {
  disagreement_ |= a == Agreement::disagree;
  add(std::move(key), to_string(a));
}

std::string Report::render(ReportFormat format) const {
  std::string out;
  if (format == ReportFormat::structured) {
    for (const auto& [k, v] : entries_) out += k + " = " + v + "\n";
    return out;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : entries_) width = std::max(width, k.size());
  for (const auto& [k, v] : entries_) {
    out += k;
    out.append(width - k.size() + 2, ' ');
    out += v + "\n";
  }
  return out;
}

}  // namespace sixpoint::harness
