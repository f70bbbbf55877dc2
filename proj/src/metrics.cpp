#include "fbas/metrics.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace fbas {

DerivedStats derive_stats(std::uint64_t naive, std::uint64_t /*kmp*/, std::uint64_t bmh,
                          std::uint64_t fbas) {
  const auto d = [](std::uint64_t v) { return static_cast<double>(v); };
  DerivedStats s;
  if (bmh > 0) s.improvement_pct = 100.0 * (d(bmh) - d(fbas)) / d(bmh);
  if (fbas > 0) s.speedup_vs_naive = d(naive) / d(fbas);
  if (naive > 0) s.reduction_vs_naive_pct = 100.0 * (d(naive) - d(fbas)) / d(naive);
  if (bmh > 0) s.bmh_speedup_vs_naive = d(naive) / d(bmh);
  return s;
}

double round_half_away(double value, int digits) {
  const double scale = std::pow(10.0, digits);
  return std::round(value * scale) / scale;
}

std::string format_fixed2(const std::optional<double>& value) {
  if (!value) return "n/a";
  char buf[64];
  double r = round_half_away(*value, 2);
  if (r == 0.0) r = 0.0;  // no "-0.00"
  std::snprintf(buf, sizeof buf, "%.2f", r);
  return buf;
}

std::string format_full(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string format_thousands(std::uint64_t value) {
  std::string digits = std::to_string(value);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (digits.size() - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

}  // namespace fbas
