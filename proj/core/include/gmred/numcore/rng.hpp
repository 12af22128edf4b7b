#pragma once

#include <cstdint>
#include <random>

#include "gmred/numcore/chart.hpp"
#include "gmred/numcore/errors.hpp"

namespace gmred {

/// Deterministic point sampler.  Uniform doubles are produced by an
/// explicit 53-bit construction from mt19937_64 output, so identical seeds
/// give identical streams on every platform (std:: distributions do not
/// guarantee that).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Draw from the chart's sample box, rejecting points outside the domain.
  Point sample(const Chart& chart) {
    if (chart.sample_box.size() != static_cast<size_t>(chart.dim()))
      throw UsageError("chart '" + chart.name + "' has no sample box");
    for (int attempt = 0; attempt < 1000; ++attempt) {
      Point x(chart.dim());
      for (int i = 0; i < chart.dim(); ++i)
        x[i] = uniform(chart.sample_box[i].first, chart.sample_box[i].second);
      if (chart.in_domain(x)) return x;
    }
    throw DomainError("sample box of chart '" + chart.name +
                      "' rarely intersects its domain");
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace gmred
