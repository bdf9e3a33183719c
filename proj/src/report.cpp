#include "flatwitness/report.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace flatwitness {

const char* to_string(Compare c) {
  switch (c) {
    case Compare::le: return "<=";
    case Compare::lt: return "<";
    case Compare::ge: return ">=";
    case Compare::eq: return "==";
  }
  return "?";
}

bool evaluate(double value, Compare c, double threshold) {
  if (!std::isfinite(value)) return false;
  switch (c) {
    case Compare::le: return value <= threshold;
    case Compare::lt: return value < threshold;
    case Compare::ge: return value >= threshold;
    case Compare::eq: return value == threshold;
  }
  return false;
}

RunReport::RunReport(std::string subcommand)
    : subcommand_(std::move(subcommand)), start_(std::chrono::steady_clock::now()) {}

bool RunReport::check(std::string name, double value, double threshold, Compare c) {
  const bool ok = evaluate(value, c, threshold);
  checks_.push_back({std::move(name), value, threshold, c, ok});
  return ok;
}

bool RunReport::check_flag(std::string name, bool ok) {
  return check(std::move(name), ok ? 1.0 : 0.0, 1.0, Compare::eq);
}

bool RunReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

void RunReport::stop_clock() {
  wall_time_ = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

RunReport::Json RunReport::to_json() const {
  Json checks = Json::array();
  for (const Check& c : checks_) {
    // JSON has no inf/nan; keep the field a string so the report stays valid.
    Json value = std::isfinite(c.value) ? Json(c.value) : Json(fmt::format("{}", c.value));
    checks.push_back({{"name", c.name},
                      {"value", value},
                      {"compare", to_string(c.compare)},
                      {"threshold", c.threshold},
                      {"pass", c.pass}});
  }
  return {{"subcommand", subcommand_},
          {"parameters", parameters_},
          {"checks", checks},
          {"values", values_},
          {"pass", passed()},
          {"wall_time", wall_time_}};
}

std::string RunReport::to_text() const {
  std::string out;
  for (const Check& c : checks_)
    out += fmt::format("{:<4} {:<40} {:.6e} {} {:.6e}\n", c.pass ? "ok" : "FAIL", c.name,
                       c.value, to_string(c.compare), c.threshold);
  out += fmt::format("{} {} ({:.3f} s)\n", subcommand_, passed() ? "PASS" : "FAIL", wall_time_);
  return out;
}

}  // namespace flatwitness
