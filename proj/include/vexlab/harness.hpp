#ifndef VEXLAB_HARNESS_HPP
#define VEXLAB_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vexlab/criteria.hpp"
#include "vexlab/exponent.hpp"
#include "vexlab/lebesgue.hpp"
#include "vexlab/operators.hpp"
#include "vexlab/space.hpp"
#include "vexlab/weight.hpp"

namespace vexlab {

struct Candidate {
  ArrayXd f;
  std::string tag;
};

/// Deterministic-by-seed test corpus: ball indicators at the weight nodes and
/// random centers over dyadic radii coupled to the local mesh (down to four
/// nearest-neighbor gaps), extremizers rho^(-p'/p) on shrinking balls,
/// random-sign noise, and smooth bumps. Points where the weight degenerates
/// carry 0 in every candidate.
std::vector<Candidate> candidates(const WeightField& rho, const ExponentField& p,
                                  const MetricMeasureSpace& X, const std::vector<Index>& nodes,
                                  std::uint64_t seed, int budget);

/// ||rho T f||_q / ||rho f||_p; nullopt when the denominator vanishes.
std::optional<double> ratio(const ArrayXd& Tf, const ArrayXd& f, const ArrayXd& rho,
                            const ExponentField& p, const ExponentField& q,
                            const MetricMeasureSpace& X);

struct NormEstimate {
  int level = 0;
  double value = 0;
  std::string argmax_tag;
  int trials = 0;
};

/// Max ratio over the corpus; a lower bound for the true operator norm.
/// Trials are independent; the reduction is ordered by candidate id, so any
/// worker count reproduces the single-worker result.
NormEstimate estimate_operator_norm(const OperatorSpec& op, const std::vector<Candidate>& corpus,
                                    const ArrayXd& rho, const ExponentField& p,
                                    const ExponentField& q, const MetricMeasureSpace& X,
                                    int workers = 1);

/// Everything a refinement study needs, parsed from flat key=value sections.
struct ExperimentConfig {
  std::string name = "study";
  // space per level
  std::string space_kind = "interval";  // interval | interval_graded | halfline | centered
  double box_lo = 0.0, box_hi = 1.0;
  double grading = 0.9;
  std::vector<int> levels;
  // exponent p(x) = p_const + p_slope * x1 (clipped to stay admissible)
  double p_const = 2.0, p_slope = 0.0;
  // weight: single power node (optional) plus optional power infinity factor
  bool use_weight = false;
  double beta = 0.0;
  double node_coord = 0.0;
  std::optional<double> beta_inf;
  // operator and target exponent
  OperatorSpec op;
  double q_const = 0.0;      // 0: q = p
  bool q_from_sobolev = false;
  // study controls
  std::uint64_t seed = 1;
  int budget = 16;
  double stability_ratio = 1.25;
  double blow_up_ratio = 2.0;
  int workers = 1;

  std::string echo() const;  // canonical key=value text (defaults included)
};

struct StudyLevelRow {
  int n = 0;
  double estimate = 0;
  std::string argmax_tag;
  int trials = 0;
};

struct StudyReport {
  ExperimentConfig config;
  std::vector<StudyLevelRow> rows;
  std::string verdict;  // stable | diverging | inconclusive
  CriterionVerdict criterion;
};

/// Builds each level, estimates the weighted operator norm on it, and labels
/// the sequence: diverging when the estimates grow monotonically, are still
/// growing at the last level, and the overall growth reaches blow_up_ratio;
/// stable when the last step stays within stability_ratio; inconclusive
/// otherwise. The matching admissibility verdict is attached.
StudyReport refinement_study(const ExperimentConfig& config);

/// Half-line study preset: graded grid on (0, R], Hardy operator with the
/// given order, candidates concentrated near 0 and near the truncation.
StudyReport hardy_experiment(std::optional<double> alpha, std::optional<double> beta,
                             double p_const, const std::vector<int>& levels,
                             std::uint64_t seed = 1, int budget = 16);

/// Potential study preset on a graded [0, 1] grid; q comes from the
/// 1/q = 1/p - alpha/n relation unless overridden.
StudyReport potential_experiment(double alpha, double p_const, double q_const,
                                 const std::vector<int>& levels, std::uint64_t seed = 1,
                                 int budget = 16);

/// Builders shared with the CLI.
MetricMeasureSpace build_level_space(const ExperimentConfig& config, int n);
ExponentField build_exponent(const ExperimentConfig& config, const MetricMeasureSpace& X);
RadialProductWeight build_weight(const ExperimentConfig& config, const MetricMeasureSpace& X);

}  // namespace vexlab

#endif
