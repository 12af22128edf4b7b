#include "gmred/harness/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace gmred {
namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string point_str(const Point& x, const char* spec, char sep) {
  std::string out;
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) out += sep;
    out += fmt(spec, x[i]);
  }
  return out;
}

}  // namespace

CheckReport make_report(std::string check, std::string suite,
                        const Worst& worst, double tolerance) {
  CheckReport r;
  r.check = std::move(check);
  r.suite = std::move(suite);
  r.samples = worst.count;
  r.max_deviation = worst.dev;
  r.tolerance = tolerance;
  r.pass = worst.dev < tolerance;
  r.worst_point = worst.at;
  return r;
}

bool all_pass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.pass; });
}

std::string format_report_table(const std::vector<CheckReport>& reports) {
  std::vector<std::array<std::string, 6>> rows;
  rows.push_back({"status", "check", "suite", "n", "max dev", "tol"});
  for (const auto& r : reports) {
    rows.push_back({r.pass ? "PASS" : "FAIL", r.check, r.suite,
                    std::to_string(r.samples), fmt("%.3e", r.max_deviation),
                    fmt("%.1e", r.tolerance)});
  }
  std::array<size_t, 6> width{};
  for (const auto& row : rows)
    for (size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());

  std::ostringstream os;
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t c = 0; c < rows[i].size(); ++c) {
      os << rows[i][c]
         << std::string(width[c] - rows[i][c].size() + (c + 1 < 6 ? 2 : 0),
                        ' ');
    }
    if (i > 0 && !reports[i - 1].pass && !reports[i - 1].worst_point.empty())
      os << "  at (" << point_str(reports[i - 1].worst_point, "%.6g", ',')
         << ")";
    os << '\n';
  }
  return os.str();
}

void write_report_csv(std::ostream& os,
                      const std::vector<CheckReport>& reports) {
  os << "check,suite,samples,max_deviation,tolerance,pass,worst_point\n";
  for (const auto& r : reports) {
    os << r.check << ',' << r.suite << ',' << r.samples << ','
       << fmt("%.17g", r.max_deviation) << ',' << fmt("%.17g", r.tolerance)
       << ',' << (r.pass ? 1 : 0) << ','
       << point_str(r.worst_point, "%.17g", ';') << '\n';
  }
}

}  // namespace gmred
