#include "ulamlab/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ulamlab/errors.hpp"

namespace ulamlab {

std::vector<DensityRecord> density_series(Term limit, std::span<const Term> checkpoints) {
  if (checkpoints.empty())
    throw ContractError("density series needs at least one checkpoint");
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1 || checkpoints[i] > limit)
      throw ContractError("checkpoint " + std::to_string(checkpoints[i]) + " outside [1, limit]");
    if (i > 0 && checkpoints[i] < checkpoints[i - 1])
      throw ContractError("checkpoints must be ascending");
  }

  const auto fast = generate_fast(limit);
  const auto count_upto = [](const std::vector<Term> &terms, Term k) {
    return static_cast<std::uint64_t>(std::upper_bound(terms.begin(), terms.end(), k) - terms.begin());
  };

  const Term smallest = checkpoints.front();
  const auto reference = generate_up_to(smallest);
  if (reference.terms.size() != count_upto(fast.terms, smallest))
    throw std::logic_error("fast and reference generators disagree at k=" + std::to_string(smallest));

  std::vector<DensityRecord> records;
  records.reserve(checkpoints.size());
  for (Term k : checkpoints) {
    DensityRecord r;
    r.k = k;
    r.count = count_upto(fast.terms, k);
    r.ratio = Rational(static_cast<std::int64_t>(r.count), static_cast<std::int64_t>(k));
    records.push_back(r);
  }
  return records;
}

std::vector<MajorantRecord> majorant_series(std::span<const std::uint64_t> term_counts) {
  std::uint64_t largest = 0;
  for (auto n : term_counts) {
    if (n < 2)
      throw ContractError("majorant records need n >= 2");
    largest = std::max(largest, n);
  }
  const auto terms = first_ulam_terms(static_cast<std::size_t>(largest));
  std::vector<MajorantRecord> out;
  out.reserve(term_counts.size());
  for (auto n : term_counts) {
    const std::span<const Term> prefix(terms.data(), static_cast<std::size_t>(n));
    out.push_back(covering_report(prefix, prefix.back()));
  }
  return out;
}

const char *to_string(TrendVerdict verdict) {
  switch (verdict) {
  case TrendVerdict::Flattening:
    return "flattening";
  case TrendVerdict::Declining:
    return "declining";
  case TrendVerdict::Inconclusive:
    return "inconclusive";
  }
  return "inconclusive";
}

TrendSummary convergence_diagnostic(std::span<const DensityRecord> records) {
  if (records.size() < 3)
    throw ContractError("convergence diagnostic needs at least 3 records");
  const auto window = records.subspan(records.size() / 2);

  TrendSummary t;
  double mean_k = 0.0;
  for (const auto &r : window) {
    t.last_window_mean += r.ratio_decimal();
    mean_k += static_cast<double>(r.k);
  }
  const auto m = static_cast<double>(window.size());
  t.last_window_mean /= m;
  mean_k /= m;

  double sxy = 0.0;
  double sxx = 0.0;
  bool strictly_decreasing = true;
  for (std::size_t i = 0; i < window.size(); ++i) {
    const double dx = static_cast<double>(window[i].k) - mean_k;
    sxy += dx * (window[i].ratio_decimal() - t.last_window_mean);
    sxx += dx * dx;
    if (i > 0) {
      t.max_oscillation =
          std::max(t.max_oscillation, std::abs(window[i].ratio_decimal() - window[i - 1].ratio_decimal()));
      if (!(window[i].ratio < window[i - 1].ratio))
        strictly_decreasing = false;
    }
  }
  t.slope = sxx > 0.0 ? sxy / sxx : 0.0;

  if (std::abs(t.slope) < kFlatSlope)
    t.verdict = TrendVerdict::Flattening;
  else if (t.slope < 0.0 && strictly_decreasing)
    t.verdict = TrendVerdict::Declining;
  else
    t.verdict = TrendVerdict::Inconclusive;
  return t;
}

} // namespace ulamlab
