#ifndef VEXLAB_IO_HPP
#define VEXLAB_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "vexlab/harness.hpp"
#include "vexlab/space.hpp"
#include "vexlab/verdict.hpp"

namespace vexlab {

/// Flat key=value sections: `[section]` headers, `#` comments, no nesting.
using Config = std::map<std::string, std::map<std::string, std::string>>;

Config parse_config(const std::string& text);
Config read_config_file(const std::string& path);
std::string config_get(const Config& c, const std::string& section, const std::string& key,
                       const std::string& fallback);
ExperimentConfig experiment_from_config(const Config& c);

/// FNV-1a over the canonical config echo; stable across re-serialization.
std::string config_digest(const std::string& canonical_text);

/// Space table `id,x1,...,xk,mass` plus sidecar `<path>.meta` with kind,
/// quasimetric constant, dim hint and truncation radius.
void write_space(const MetricMeasureSpace& X, const std::string& path);
MetricMeasureSpace read_space(const std::string& path);

/// Curve table `id,re,im,arc_mass`; the closed flag lives in the sidecar.
void write_curve(const CurveSpace& c, const std::string& path);
CurveSpace read_curve(const std::string& path);

/// Function column keyed by point id (`id,value`).
void write_function(const ArrayXd& f, const std::string& path);
ArrayXd read_function(const std::string& path, Index expected_size);

void write_study_csv(const StudyReport& rep, const std::string& path);
void write_study_txt(const StudyReport& rep, const std::string& path);
/// Two columns: level size, estimate.
void write_study_plot(const StudyReport& rep, const std::string& path);

struct RunManifest {
  std::string command;
  std::string config_digest;
  std::uint64_t seed = 0;
  std::string tool_version;
  std::string started, finished;  // timestamps; excluded from reproducibility
  std::vector<std::string> outputs;
  std::string config_echo;
};

void write_manifest(const RunManifest& m, const std::string& path);

std::string format_verdict_table(const std::vector<CriterionVerdict>& verdicts);

}  // namespace vexlab

#endif
