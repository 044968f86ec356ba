#include "vexlab/verdict.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace vexlab {

double CriterionVerdict::witness(const std::string& key) const {
  for (const auto& [k, v] : witnesses)
    if (k == key) return v;
  throw std::out_of_range("verdict '" + name + "' has no witness '" + key + "'");
}

bool CriterionVerdict::has_witness(const std::string& key) const {
  return std::any_of(witnesses.begin(), witnesses.end(),
                     [&](const auto& kv) { return kv.first == key; });
}

Status interval_status(CriterionVerdict& v, const std::string& tag, double value, double lo,
                       double hi, double band) {
  v.add(tag, value);
  v.add(tag + ".lo", lo);
  v.add(tag + ".hi", hi);
  if (!std::isfinite(value)) return Status::unknown;
  if (std::min(value - lo, hi - value) < -band) return Status::fail;
  if (value <= lo + band || value >= hi - band) return Status::boundary;
  return Status::pass;
}

Status combine_status(Status a, Status b) {
  if (a == Status::fail || b == Status::fail) return Status::fail;
  if (a == Status::unknown || b == Status::unknown) return Status::unknown;
  if (a == Status::boundary || b == Status::boundary) return Status::boundary;
  return Status::pass;
}

namespace {

// Fields joined by '|'; embedded '|' and newlines are not allowed in names.
std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|' || c == '\n' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields(1);
  bool esc = false;
  for (char c : line) {
    if (esc) {
      fields.back().push_back(c);
      esc = false;
    } else if (c == '\\') {
      esc = true;
    } else if (c == '|') {
      fields.emplace_back();
    } else {
      fields.back().push_back(c);
    }
  }
  return fields;
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string to_record(const CriterionVerdict& v) {
  std::ostringstream os;
  os << escape(v.name) << '|' << to_string(v.satisfied) << '|' << (v.two_sided ? "iff" : "suff");
  os << '|' << v.witnesses.size();
  for (const auto& [k, val] : v.witnesses) os << '|' << escape(k) << '|' << num(val);
  os << '|' << escape(v.citation) << '|' << escape(v.note);
  return os.str();
}

CriterionVerdict verdict_from_record(const std::string& line) {
  auto f = split_fields(line);
  if (f.size() < 4) throw std::invalid_argument("malformed verdict record");
  CriterionVerdict v;
  v.name = f[0];
  for (Status s : {Status::pass, Status::fail, Status::boundary, Status::unknown})
    if (f[1] == to_string(s)) v.satisfied = s;
  v.two_sided = (f[2] == "iff");
  std::size_t n = std::stoul(f[3]);
  if (f.size() != 4 + 2 * n + 2) throw std::invalid_argument("malformed verdict record");
  for (std::size_t i = 0; i < n; ++i)
    v.witnesses.emplace_back(f[4 + 2 * i], std::stod(f[5 + 2 * i]));
  v.citation = f[4 + 2 * n];
  v.note = f[5 + 2 * n];
  return v;
}

}  // namespace vexlab
