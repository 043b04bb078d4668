#include "sixpoint/harness/config.hpp"

#include <array>
#include <map>
#include <vector>

#include "sixpoint/error.hpp"

namespace sixpoint::harness {

namespace {

constexpr std::string_view kSpace = " \t\r";

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  for (;;) {
    auto pos = s.find(sep);
    parts.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) return parts;
    s.remove_prefix(pos + 1);
  }
}

[[noreturn]] void usage(const std::string& field, const std::string& message) {
  throw Error(Errc::usage, field + ": " + message);
}

// Re-throws parse failures with the offending field prefixed.
template <typename F>
auto in_field(const std::string& field, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), field + ": " + e.what());
  }
}

constexpr std::array<std::string_view, 3> kCevianKeys = {"d", "e", "f"};

bool is_cevian_key(std::string_view k) {
  return k == "d" || k == "e" || k == "f";
}

bool is_six_key(std::string_view k) {
  for (SixRatioId id : kSixRatioIds) {
    if (key(id) == k) return true;
  }
  return false;
}

// Assembles a ratio family from named values; `where` prefixes messages.
RatioFamily build_family(const std::map<std::string, std::string, std::less<>>& named,
                         const std::string& where) {
  bool cevian = false, six = false;
  for (const auto& [k, v] : named) {
    cevian |= is_cevian_key(k);
    six |= is_six_key(k);
  }
  if (cevian && six) usage(where, "cannot mix d/e/f with six-point keys");

  if (cevian) {
    std::array<ProjRatio, 3> values;
    for (std::size_t i = 0; i < kCevianKeys.size(); ++i) {
      std::string k(kCevianKeys[i]);
      auto it = named.find(k);
      if (it == named.end()) usage(where + "." + k, "missing");
      values[i] = in_field(where + "." + k, [&] { return parse_ratio(it->second); });
    }
    return CevianRatios{values[0], values[1], values[2]};
  }

  SixRatios r;
  for (SixRatioId id : kSixRatioIds) {
    std::string k(key(id));
    auto it = named.find(k);
    if (it == named.end()) usage(where + "." + k, "missing");
    get(r, id) = in_field(where + "." + k, [&] { return parse_ratio(it->second); });
  }
  return r;
}

ProjPoint parse_point(std::string_view text, const std::string& field) {
  auto xy = split(text, ',');
  if (xy.size() != 2) usage(field, "expected 'x,y', got '" + std::string(text) + "'");
  return in_field(field, [&] {
    return ProjPoint::affine(parse_rational(xy[0]), parse_rational(xy[1]));
  });
}

}  // namespace

RatioFamily parse_ratio_list(std::string_view text) {
  auto items = split(text, ',');
  bool named = text.find('=') != std::string_view::npos;
  if (!named) {
    if (items.size() != 3) {
      usage("ratios", "positional form takes exactly d,e,f; name six-point ratios as a+=...");
    }
    std::array<ProjRatio, 3> v;
    for (std::size_t i = 0; i < 3; ++i) {
      v[i] = in_field("ratios." + std::string(kCevianKeys[i]),
                      [&] { return parse_ratio(items[i]); });
    }
    return CevianRatios{v[0], v[1], v[2]};
  }

  std::map<std::string, std::string, std::less<>> values;
  for (std::string_view item : items) {
    auto eq = item.find('=');
    if (eq == std::string_view::npos) usage("ratios", "expected key=value, got '" + std::string(item) + "'");
    std::string k(trim(item.substr(0, eq)));
    if (!is_cevian_key(k) && !is_six_key(k)) usage("ratios." + k, "unknown ratio key");
    if (!values.emplace(k, std::string(trim(item.substr(eq + 1)))).second) {
      usage("ratios." + k, "given twice");
    }
  }
  return build_family(values, "ratios");
}

Triangle parse_triangle(std::string_view text) {
  auto points = split(text, ';');
  if (points.size() != 3) usage("triangle", "expected three points 'x,y; x,y; x,y'");
  static constexpr std::array<const char*, 3> kNames = {"triangle.A", "triangle.B", "triangle.C"};
  std::array<std::optional<ProjPoint>, 3> v;
  for (std::size_t i = 0; i < 3; ++i) v[i] = parse_point(points[i], kNames[i]);
  try {
    return Triangle(*v[0], *v[1], *v[2]);
  } catch (const Error&) {
    usage("triangle", "vertices are collinear");
  }
}

std::string format_triangle(const Triangle& t) {
  auto point = [](const ProjPoint& p) {
    return p.affine_x().to_string() + "," + p.affine_y().to_string();
  };
  return point(t.a()) + "; " + point(t.b()) + "; " + point(t.c());
}

ConfigDoc parse_config(std::string_view text) {
  ConfigDoc doc;
  std::map<std::string, std::string, std::less<>> ratios;
  int line_no = 0;
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      usage("line " + std::to_string(line_no), "expected 'key = value'");
    }
    std::string k(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));

    if (k == "mode") {
      doc.mode = value;
    } else if (k == "triangle") {
      doc.triangle = parse_triangle(value);
    } else if (is_cevian_key(k) || is_six_key(k)) {
      if (!ratios.emplace(k, std::string(value)).second) usage(k, "given twice");
    } else {
      usage(k, "unknown key on line " + std::to_string(line_no));
    }
  }
  if (!ratios.empty()) doc.ratios = build_family(ratios, "ratios");
  return doc;
}

}  // namespace sixpoint::harness
