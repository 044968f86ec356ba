#include "vexlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vexlab {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  return os;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

Config parse_config(const std::string& text) {
  Config c;
  std::string section = "global";
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed config line: " + line);
    c[section][trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return c;
}

Config read_config_file(const std::string& path) { return parse_config(slurp(path)); }

std::string config_get(const Config& c, const std::string& section, const std::string& key,
                       const std::string& fallback) {
  const auto s = c.find(section);
  if (s == c.end()) return fallback;
  const auto k = s->second.find(key);
  return k == s->second.end() ? fallback : k->second;
}

ExperimentConfig experiment_from_config(const Config& c) {
  ExperimentConfig e;
  e.name = config_get(c, "study", "name", e.name);
  e.seed = std::stoull(config_get(c, "study", "seed", "1"));
  e.budget = std::stoi(config_get(c, "study", "budget", "16"));
  e.stability_ratio = std::stod(config_get(c, "study", "stability_ratio", "1.25"));
  e.blow_up_ratio = std::stod(config_get(c, "study", "blow_up_ratio", "2.0"));
  e.workers = std::stoi(config_get(c, "study", "workers", "1"));
  e.space_kind = config_get(c, "space", "kind", e.space_kind);
  e.box_lo = std::stod(config_get(c, "space", "box_lo", "0"));
  e.box_hi = std::stod(config_get(c, "space", "box_hi", "1"));
  e.grading = std::stod(config_get(c, "space", "grading", "0.9"));
  {
    std::istringstream ls(config_get(c, "space", "levels", "64 128"));
    int n;
    while (ls >> n) e.levels.push_back(n);
  }
  e.p_const = std::stod(config_get(c, "exponent", "p_const", "2"));
  e.p_slope = std::stod(config_get(c, "exponent", "p_slope", "0"));
  e.use_weight = config_get(c, "weight", "use_weight", "0") == "1";
  e.beta = std::stod(config_get(c, "weight", "beta", "0"));
  e.node_coord = std::stod(config_get(c, "weight", "node_coord", "0"));
  const std::string bi = config_get(c, "weight", "beta_inf", "");
  if (!bi.empty()) e.beta_inf = std::stod(bi);
  e.op = OperatorSpec::parse(config_get(c, "operator", "spec", "identity"));
  e.q_const = std::stod(config_get(c, "operator", "q_const", "0"));
  e.q_from_sobolev = config_get(c, "operator", "q_from_sobolev", "0") == "1";
  return e;
}

std::string config_digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_space(const MetricMeasureSpace& X, const std::string& path) {
  if (X.coords().rows() == 0)
    throw std::invalid_argument("distance-table spaces have no tabular form");
  auto os = open_out(path);
  os << "id";
  for (Eigen::Index a = 0; a < X.coords().cols(); ++a) os << ",x" << a + 1;
  os << ",mass\n";
  for (Index i = 0; i < X.size(); ++i) {
    os << i;
    for (Eigen::Index a = 0; a < X.coords().cols(); ++a) os << ',' << num(X.coords()(i, a));
    os << ',' << num(X.mass()[i]) << '\n';
  }
  auto meta = open_out(path + ".meta");
  meta << "kind = " << to_string(X.kind()) << "\n";
  meta << "quasi_const = " << num(X.quasi_const()) << "\n";
  meta << "dim_hint = " << num(X.dim_hint()) << "\n";
  if (X.r_outer()) meta << "r_outer = " << num(*X.r_outer()) << "\n";
}

MetricMeasureSpace read_space(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  std::string header;
  std::getline(is, header);
  int cols = 0;
  for (char ch : header)
    if (ch == ',') ++cols;
  const int k = cols - 1;
  if (k < 1) throw std::runtime_error("malformed space table header");
  std::vector<double> coords, masses;
  std::string line;
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::getline(ls, cell, ',');  // id
    for (int a = 0; a < k; ++a) {
      std::getline(ls, cell, ',');
      coords.push_back(std::stod(cell));
    }
    std::getline(ls, cell, ',');
    masses.push_back(std::stod(cell));
  }
  const Index n = static_cast<Index>(masses.size());
  Eigen::MatrixXd C(n, k);
  for (Index i = 0; i < n; ++i)
    for (int a = 0; a < k; ++a) C(i, a) = coords[i * k + a];
  ArrayXd m = Eigen::Map<ArrayXd>(masses.data(), n);

  const Config meta = parse_config(slurp(path + ".meta"));
  const SpaceKind kind = space_kind_from_string(config_get(meta, "global", "kind", "interval_grid"));
  const double kappa = std::stod(config_get(meta, "global", "quasi_const", "1"));
  const double dim = std::stod(config_get(meta, "global", "dim_hint", std::to_string(k)));
  std::optional<double> r_outer;
  const std::string ro = config_get(meta, "global", "r_outer", "");
  if (!ro.empty()) r_outer = std::stod(ro);
  return MetricMeasureSpace(std::move(C), std::move(m), kind, dim, kappa, r_outer);
}

void write_curve(const CurveSpace& c, const std::string& path) {
  auto os = open_out(path);
  os << "id,re,im,arc_mass\n";
  for (Index i = 0; i < c.size(); ++i)
    os << i << ',' << num(c.vertices[i].real()) << ',' << num(c.vertices[i].imag()) << ','
       << num(c.arc_mass[i]) << '\n';
  auto meta = open_out(path + ".meta");
  meta << "closed = " << (c.closed ? 1 : 0) << "\n";
  if (c.truncation) meta << "truncation = " << num(*c.truncation) << "\n";
}

CurveSpace read_curve(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  std::string line;
  std::getline(is, line);  // header
  std::vector<std::complex<double>> vs;
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::getline(ls, cell, ',');
    std::getline(ls, cell, ',');
    const double re = std::stod(cell);
    std::getline(ls, cell, ',');
    const double im = std::stod(cell);
    vs.emplace_back(re, im);
  }
  Eigen::ArrayXcd v(static_cast<Index>(vs.size()));
  for (Index i = 0; i < v.size(); ++i) v[i] = vs[i];
  const Config meta = parse_config(slurp(path + ".meta"));
  CurveSpace c = build_curve(v, config_get(meta, "global", "closed", "0") == "1");
  const std::string tr = config_get(meta, "global", "truncation", "");
  if (!tr.empty()) c.truncation = std::stod(tr);
  return c;
}

void write_function(const ArrayXd& f, const std::string& path) {
  auto os = open_out(path);
  os << "id,value\n";
  for (Index i = 0; i < f.size(); ++i) os << i << ',' << num(f[i]) << '\n';
}

ArrayXd read_function(const std::string& path, Index expected_size) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  std::string line;
  std::getline(is, line);
  std::vector<std::pair<Index, double>> rows;
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::getline(ls, cell, ',');
    const Index id = std::stol(cell);
    std::getline(ls, cell, ',');
    rows.emplace_back(id, std::stod(cell));
  }
  if (expected_size >= 0 && static_cast<Index>(rows.size()) != expected_size)
    throw std::runtime_error("function column misaligned with the space (" +
                             std::to_string(rows.size()) + " rows)");
  ArrayXd f(static_cast<Index>(rows.size()));
  for (const auto& [id, value] : rows) {
    if (id < 0 || id >= f.size()) throw std::runtime_error("function row id out of range");
    f[id] = value;
  }
  return f;
}

void write_study_csv(const StudyReport& rep, const std::string& path) {
  auto os = open_out(path);
  std::istringstream echo(rep.config.echo());
  std::string line;
  while (std::getline(echo, line)) os << "# " << line << '\n';
  os << "# verdict = " << rep.verdict << '\n';
  os << "level,n,estimate,argmax,trials\n";
  for (std::size_t i = 0; i < rep.rows.size(); ++i)
    os << i << ',' << rep.rows[i].n << ',' << num(rep.rows[i].estimate) << ','
       << rep.rows[i].argmax_tag << ',' << rep.rows[i].trials << '\n';
}

void write_study_txt(const StudyReport& rep, const std::string& path) {
  auto os = open_out(path);
  os << "study: " << rep.config.name << "\n";
  os << "verdict: " << rep.verdict << "\n";
  os << "estimates are lower bounds of the operator norm (finite candidate corpus)\n\n";
  for (const auto& row : rep.rows)
    os << "  n=" << row.n << "  estimate=" << num(row.estimate) << "  argmax=" << row.argmax_tag
       << "  trials=" << row.trials << "\n";
  os << "\ncondition: " << rep.criterion.name << " -> " << to_string(rep.criterion.satisfied)
     << (rep.criterion.two_sided ? " (necessary and sufficient)" : " (sufficient only)") << "\n";
  os << to_record(rep.criterion) << "\n";
}

void write_study_plot(const StudyReport& rep, const std::string& path) {
  auto os = open_out(path);
  for (const auto& row : rep.rows) os << row.n << ' ' << num(row.estimate) << '\n';
}

void write_manifest(const RunManifest& m, const std::string& path) {
  auto os = open_out(path);
  os << "command = " << m.command << "\n";
  os << "config_digest = " << m.config_digest << "\n";
  os << "seed = " << m.seed << "\n";
  os << "tool_version = " << m.tool_version << "\n";
  os << "started = " << m.started << "\n";
  os << "finished = " << m.finished << "\n";
  os << "outputs =";
  for (const auto& o : m.outputs) os << ' ' << o;
  os << "\n[config]\n" << m.config_echo;
}

std::string format_verdict_table(const std::vector<CriterionVerdict>& verdicts) {
  std::ostringstream os;
  for (const auto& v : verdicts) {
    os << v.name << "  [" << to_string(v.satisfied) << "]"
       << (v.two_sided ? " (iff)" : "") << "\n";
    os << "  condition: " << v.citation << "\n";
    for (const auto& [k, val] : v.witnesses) os << "  " << k << " = " << num(val) << "\n";
    if (!v.note.empty()) os << "  note: " << v.note << "\n";
  }
  return os.str();
}

}  // namespace vexlab
