#pragma once

#include "qra/rational.hpp"

#include <cmath>
#include <string>

namespace qra {

inline constexpr double kFloatSlack = 1e-9;

/// Outcome of a single inequality or identity check. Exact checks carry the
/// two sides as rationals; float checks carry doubles and tolerate a
/// 1e-9 * max(1, |rhs|) slack. Strict checks require positive slack.
struct BoundCheckReport {
  std::string id;
  bool exact = true;
  bool strict = false;
  bool holds = false;
  Rat lhs_q, rhs_q, slack_q;
  double lhs = 0, rhs = 0, slack = 0;
  std::string note;

  static BoundCheckReport exact_check(std::string id, const Rat& lhs, const Rat& rhs,
                                      bool strict = false) {
    BoundCheckReport r;
    r.id = std::move(id);
    r.exact = true;
    r.strict = strict;
    r.lhs_q = lhs;
    r.rhs_q = rhs;
    r.slack_q = rhs - lhs;
    r.lhs = to_double(lhs);
    r.rhs = to_double(rhs);
    r.slack = to_double(r.slack_q);
    r.holds = strict ? r.slack_q > 0 : r.slack_q >= 0;
    return r;
  }

  /// Exact equality stated as a check (slack 0 required).
  static BoundCheckReport exact_equality(std::string id, const Rat& lhs, const Rat& rhs) {
    BoundCheckReport r;
    r.id = std::move(id);
    r.exact = true;
    r.lhs_q = lhs;
    r.rhs_q = rhs;
    r.slack_q = rhs - lhs;
    r.lhs = to_double(lhs);
    r.rhs = to_double(rhs);
    r.slack = to_double(r.slack_q);
    r.holds = lhs == rhs;
    return r;
  }

  static BoundCheckReport float_check(std::string id, double lhs, double rhs,
                                      double slack_scale = kFloatSlack) {
    BoundCheckReport r;
    r.id = std::move(id);
    r.exact = false;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.holds = r.slack >= -slack_scale * std::max(1.0, std::abs(rhs));
    return r;
  }

  /// |lhs - rhs| <= tol * max(1, |rhs|), as a float identity check.
  static BoundCheckReport float_equality(std::string id, double lhs, double rhs, double tol) {
    BoundCheckReport r;
    r.id = std::move(id);
    r.exact = false;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.holds = std::abs(lhs - rhs) <= tol * std::max(1.0, std::abs(rhs));
    return r;
  }
};

} // namespace qra
