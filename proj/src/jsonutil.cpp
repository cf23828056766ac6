#include "graphsim/jsonutil.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ctime>

namespace graphsim {

std::string canonical_number(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::optional<double> parse_number(const std::string &text) {
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const char *first = text.data();
  const char *last = text.data() + text.size();
  auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

std::string canonicalize_answer(const std::string &answer) {
  auto begin = answer.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = answer.find_last_not_of(" \t\r\n");
  std::string trimmed = answer.substr(begin, end - begin + 1);

  std::string lowered = trimmed;
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lowered == "true" || lowered == "false") return lowered;

  if (auto number = parse_number(trimmed)) return canonical_number(*number);
  return trimmed;
}

std::string format_utc(std::chrono::system_clock::time_point tp) {
  auto secs = std::chrono::time_point_cast<std::chrono::seconds>(tp);
  auto millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(tp - secs).count();
  if (millis < 0) {
    millis += 1000;
    secs -= std::chrono::seconds(1);
  }
  std::time_t t = std::chrono::system_clock::to_time_t(secs);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec,
                static_cast<int>(millis));
  return buf;
}

std::string now_utc() { return format_utc(std::chrono::system_clock::now()); }

bool canonical_equal(const json &a, const json &b) { return a == b; }

ordered_json to_ordered(const json &value) {
  switch (value.type()) {
    case json::value_t::object: {
      ordered_json out = ordered_json::object();
      for (const auto &[key, item] : value.items()) out[key] = to_ordered(item);
      return out;
    }
    case json::value_t::array: {
      ordered_json out = ordered_json::array();
      for (const auto &item : value) out.push_back(to_ordered(item));
      return out;
    }
    default:
      return ordered_json(value);
  }
}

}  // namespace graphsim
