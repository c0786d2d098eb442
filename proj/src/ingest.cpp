// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "orlicz/error.hpp"
#include "orlicz/sweep.hpp"

namespace orlicz {

namespace {

using Stamp = std::array<int, 6>;  // Y, M, D, h, m, s

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<int> digits(std::string_view s, std::size_t pos, std::size_t len) {
  if (pos + len > s.size()) return std::nullopt;
  int v = 0;
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    v = v * 10 + (s[i] - '0');
  }
  return v;
}

bool leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

std::optional<Stamp> parse_date(std::string_view s) {
  if (s.size() < 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  const auto y = digits(s, 0, 4);
  const auto mo = digits(s, 5, 2);
  const auto d = digits(s, 8, 2);
  if (!y || !mo || !d || *mo < 1 || *mo > 12 || *d < 1) return std::nullopt;
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  const int month_days = kDays[*mo - 1] + (*mo == 2 && leap(*y) ? 1 : 0);
  if (*d > month_days) return std::nullopt;

  Stamp stamp{*y, *mo, *d, 0, 0, 0};
  if (s.size() == 10) return stamp;
  if (s[10] != 'T' || (s.size() != 16 && s.size() != 19) || s[13] != ':') return std::nullopt;
  const auto h = digits(s, 11, 2);
  const auto mi = digits(s, 14, 2);
  if (!h || !mi || *h > 23 || *mi > 59) return std::nullopt;
  stamp[3] = *h;
  stamp[4] = *mi;
  if (s.size() == 19) {
    const auto sec = digits(s, 17, 2);
    if (s[16] != ':' || !sec || *sec > 59) return std::nullopt;
    stamp[5] = *sec;
  }
  return stamp;
}

std::optional<double> parse_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::vector<Observation> parse_observations(std::istream& in) {
  std::vector<Observation> out;
  std::optional<Stamp> previous;
  std::string raw;
  std::size_t line_no = 0;
  bool first = true;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    const auto comma = line.find(',');
    if (comma == std::string_view::npos) malformed(line_no, "expected two comma-separated fields");
    const std::string_view date_field = trim(line.substr(0, comma));
    const std::string_view value_field = trim(line.substr(comma + 1));
    if (value_field.find(',') != std::string_view::npos) {
      malformed(line_no, "expected two comma-separated fields");
    }

    const auto stamp = parse_date(date_field);
    const auto value = parse_number(value_field);
    if (first) {
      first = false;
      if (!value && !stamp) continue;  // header row
    }
    if (!stamp) malformed(line_no, "bad ISO-8601 date '" + std::string(date_field) + "'");
    if (!value) malformed(line_no, "bad value '" + std::string(value_field) + "'");
    if (!std::isfinite(*value) || !(*value > 0.0)) {
      malformed(line_no, "value must be a positive finite number");
    }
    if (previous && !(*previous < *stamp)) {
      throw Error(ErrorCode::NonMonotoneDate,
                  "line " + std::to_string(line_no) + ": date " + std::string(date_field) +
                      " does not follow the previous one");
    }
    previous = stamp;
    out.push_back({std::string(date_field), *value});
  }
  if (in.bad()) throw Error(ErrorCode::Io, "read failure");
  if (out.size() < 2) {
    throw Error(ErrorCode::DegenerateSample,
                "need at least 2 observations, got " + std::to_string(out.size()));
  }
  return out;
}

std::vector<Observation> ingest_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  return parse_observations(in);
}

}  // namespace orlicz
