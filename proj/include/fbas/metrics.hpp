#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fbas {

/// Search-phase instrumentation. One instance per search call.
///
/// A window is opened for every alignment a matcher examines; comparisons
/// are charged to the currently open window. When recording is enabled the
/// counter also keeps the window start positions and per-window costs, so
/// tests can check traces and per-window cost bounds.
class ComparisonCounter {
 public:
  explicit ComparisonCounter(bool record_windows = false) : recording_(record_windows) {}

  void open_window(std::size_t pos) {
    ++alignments_;
    if (recording_) {
      window_positions_.push_back(pos);
      per_alignment_.push_back(0);
    }
  }

  void count() {
    ++total_;
    if (recording_ && !per_alignment_.empty()) ++per_alignment_.back();
  }

  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t alignments() const noexcept { return alignments_; }
  bool recording() const noexcept { return recording_; }

  /// Empty unless recording; sums to total() when recording.
  std::span<const std::uint64_t> per_alignment() const noexcept { return per_alignment_; }
  std::span<const std::size_t> window_positions() const noexcept { return window_positions_; }

 private:
  bool recording_;
  std::uint64_t total_ = 0;
  std::uint64_t alignments_ = 0;
  std::vector<std::uint64_t> per_alignment_;
  std::vector<std::size_t> window_positions_;
};

/// Ratios against the baselines. A field is nullopt ("undefined") when its
/// denominator is zero.
struct DerivedStats {
  std::optional<double> improvement_pct;         // 100 * (bmh - fbas) / bmh
  std::optional<double> speedup_vs_naive;        // naive / fbas
  std::optional<double> reduction_vs_naive_pct;  // 100 * (naive - fbas) / naive
  std::optional<double> bmh_speedup_vs_naive;    // naive / bmh
};

DerivedStats derive_stats(std::uint64_t naive, std::uint64_t kmp, std::uint64_t bmh,
                          std::uint64_t fbas);

/// Rounds half away from zero to `digits` decimals.
double round_half_away(double value, int digits = 2);

/// Two-decimal presentation; "n/a" for undefined.
std::string format_fixed2(const std::optional<double>& value);

/// Shortest decimal string that round-trips to the same double.
std::string format_full(double value);

/// 1759037 -> "1,759,037"
std::string format_thousands(std::uint64_t value);

}  // namespace fbas
