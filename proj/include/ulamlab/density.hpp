#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ulamlab/chain.hpp"
#include "ulamlab/rational.hpp"
#include "ulamlab/ulam.hpp"

namespace ulamlab {

struct DensityRecord {
  Term k = 0;
  std::uint64_t count = 0;
  Rational ratio; // count / k

  double ratio_decimal() const { return to_double(ratio); }
};

/// Counts Ulam numbers in [1, k] for each checkpoint k <= limit. Counts come
/// from the fast generator and are cross-checked against the reference
/// generator at the smallest checkpoint.
std::vector<DensityRecord> density_series(Term limit, std::span<const Term> checkpoints);

/// Covering report at l = U_n for each term count n >= 2.
std::vector<MajorantRecord> majorant_series(std::span<const std::uint64_t> term_counts);

enum class TrendVerdict { Flattening, Declining, Inconclusive };

const char *to_string(TrendVerdict verdict);

struct TrendSummary {
  /// Mean ratio over the final half of the checkpoints.
  double last_window_mean = 0.0;
  /// Least-squares slope of ratio against k over the final half.
  double slope = 0.0;
  /// Largest |ratio_i - ratio_{i-1}| over the final half.
  double max_oscillation = 0.0;
  TrendVerdict verdict = TrendVerdict::Inconclusive;
};

inline constexpr double kFlatSlope = 1e-8;

TrendSummary convergence_diagnostic(std::span<const DensityRecord> records);

} // namespace ulamlab
