#ifndef VEXLAB_VERDICT_HPP
#define VEXLAB_VERDICT_HPP

#include <string>
#include <utility>
#include <vector>

namespace vexlab {

/// Outcome of a numerical admissibility check. Strict inequalities on
/// estimated quantities are never decidable exactly, so `boundary` marks
/// values within `kBoundaryBand` of an endpoint and `unknown` marks checks
/// whose sub-estimates disagree or lack data.
enum class Status { pass, fail, boundary, unknown };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::boundary: return "boundary";
    case Status::unknown: return "unknown";
  }
  return "unknown";
}

/// Half-width of the indecision band around strict interval endpoints.
inline constexpr double kBoundaryBand = 0.02;

struct CriterionVerdict {
  std::string name;
  Status satisfied = Status::unknown;
  /// Named numeric evidence: tested values, interval endpoints, sup
  /// estimates, margins. Order is preserved for serialization.
  std::vector<std::pair<std::string, double>> witnesses;
  /// The condition being tested, as a formula string.
  std::string citation;
  /// Free-form diagnostics (failure locus, hypothesis violations, ...).
  std::string note;
  /// True when the condition is known to be necessary and sufficient;
  /// false for sufficient-only conditions.
  bool two_sided = false;

  void add(const std::string& key, double value) { witnesses.emplace_back(key, value); }

  double witness(const std::string& key) const;
  bool has_witness(const std::string& key) const;
};

/// Classifies `value` against the open interval (lo, hi) with the standard
/// indecision band. Appends the tested value and both endpoints.
Status interval_status(CriterionVerdict& v, const std::string& tag, double value, double lo,
                       double hi, double band = kBoundaryBand);

/// pass & pass = pass; any fail = fail; else boundary dominates unknown.
Status combine_status(Status a, Status b);

std::string to_record(const CriterionVerdict& v);
CriterionVerdict verdict_from_record(const std::string& line);

}  // namespace vexlab

#endif
