#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gmred/numcore/field.hpp"

namespace gmred {

/// Outcome of one verification check: a named residual maximized over a
/// sample set, compared against a tolerance.
struct CheckReport {
  std::string check;
  std::string suite;
  int samples = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;  ///< max_deviation < tolerance
  Point worst_point;  ///< sample attaining max_deviation
};

/// Running maximum with the point attaining it.
struct Worst {
  double dev = 0.0;
  Point at;
  int count = 0;

  void feed(double d, const Point& x) {
    ++count;
    if (count == 1 || d > dev) {
      dev = d;
      at = x;
    }
  }
};

CheckReport make_report(std::string check, std::string suite,
                        const Worst& worst, double tolerance);

bool all_pass(const std::vector<CheckReport>& reports);

/// Aligned text table, one row per report, PASS/FAIL first column.
std::string format_report_table(const std::vector<CheckReport>& reports);

/// Machine-readable form; worst-offender coordinates separated by ';'.
void write_report_csv(std::ostream& os,
                      const std::vector<CheckReport>& reports);

}  // namespace gmred
