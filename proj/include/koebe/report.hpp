#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace koebe {

/// How an observed value is compared against its expectation.
///   near   |observed - expected| <= tolerance
///   below  observed < expected            above  observed > expected
///   at_most observed <= expected + tolerance
///   at_least observed >= expected - tolerance
///   truncates  expected <= observed < expected + tolerance (printed digits)
///   equal  observed == expected exactly (counts, flags)
enum class Relation { near, below, above, at_most, at_least, truncates, equal };

constexpr std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::near: return "near";
    case Relation::below: return "below";
    case Relation::above: return "above";
    case Relation::at_most: return "at_most";
    case Relation::at_least: return "at_least";
    case Relation::truncates: return "truncates";
    case Relation::equal: return "equal";
  }
  return "?";
}

inline Relation relation_from_string(std::string_view s) {
  for (Relation r : {Relation::near, Relation::below, Relation::above, Relation::at_most, Relation::at_least,
                     Relation::truncates, Relation::equal})
    if (to_string(r) == s) return r;
  throw std::invalid_argument("unknown relation: " + std::string(s));
}

inline bool holds(Relation r, double observed, double expected, double tolerance) {
  if (std::isnan(observed) || std::isnan(expected)) return false;
  switch (r) {
    case Relation::near: return std::abs(observed - expected) <= tolerance;
    case Relation::below: return observed < expected;
    case Relation::above: return observed > expected;
    case Relation::at_most: return observed <= expected + tolerance;
    case Relation::at_least: return observed >= expected - tolerance;
    case Relation::truncates: return observed >= expected && observed < expected + tolerance;
    case Relation::equal: return observed == expected;
  }
  return false;
}

struct Check {
  std::string name;
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  Relation relation = Relation::near;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const Check& c : checks) n += c.pass ? 0 : 1;
    return n;
  }

  Check& add(std::string name, double observed, double expected, double tolerance, Relation rel) {
    checks.push_back({std::move(name), observed, expected, tolerance, rel, holds(rel, observed, expected, tolerance)});
    return checks.back();
  }
  Check& near(std::string name, double observed, double expected, double tol) {
    return add(std::move(name), observed, expected, tol, Relation::near);
  }
  Check& flag(std::string name, bool ok) { return add(std::move(name), ok ? 1.0 : 0.0, 1.0, 0.0, Relation::equal); }

  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

// JSON has no NaN/inf; those are written as null and read back as NaN.
inline nlohmann::json number_or_null(double x) {
  return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

inline double read_number(const nlohmann::json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

inline nlohmann::json to_json(const Check& c) {
  return {{"name", c.name},
          {"observed", number_or_null(c.observed)},
          {"expected", number_or_null(c.expected)},
          {"tolerance", number_or_null(c.tolerance)},
          {"relation", std::string(to_string(c.relation))},
          {"pass", c.pass}};
}

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : r.checks) checks.push_back(to_json(c));
  return {{"suite", r.suite}, {"pass", r.pass()}, {"failures", r.failures()}, {"checks", checks}};
}

inline Check check_from_json(const nlohmann::json& j) {
  Check c;
  c.name = j.at("name").get<std::string>();
  c.observed = read_number(j.at("observed"));
  c.expected = read_number(j.at("expected"));
  c.tolerance = read_number(j.at("tolerance"));
  c.relation = relation_from_string(j.at("relation").get<std::string>());
  c.pass = j.at("pass").get<bool>();
  return c;
}

inline Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& c : j.at("checks")) r.checks.push_back(check_from_json(c));
  return r;
}

struct RecheckResult {
  Report report;                   // verdicts recomputed from the stored numbers
  std::vector<std::string> flips;  // checks whose stored verdict disagrees
};

inline RecheckResult recheck(const Report& stored) {
  RecheckResult out{stored, {}};
  for (Check& c : out.report.checks) {
    const bool fresh = holds(c.relation, c.observed, c.expected, c.tolerance);
    if (fresh != c.pass) out.flips.push_back(c.name);
    c.pass = fresh;
  }
  return out;
}

}  // namespace koebe
