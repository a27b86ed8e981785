#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace ulamlab {

using Term = std::uint64_t;

/// Ulam terms in increasing order together with the inclusive bound up to
/// which every integer has been classified.
struct UlamSequence {
  std::vector<Term> terms;
  Term limit = 0;

  bool operator==(const UlamSequence &) const = default;
};

struct RepresentationTally {
  Term candidate = 0;
  std::uint64_t count = 0;
};

/// Number of unordered pairs {a, b}, a != b, drawn from `prefix` with
/// a + b == x. `prefix` must be strictly increasing and positive.
RepresentationTally count_representations(std::span<const Term> prefix, Term x);

/// Smallest integer above the last term with exactly one representation.
/// The search is unbounded.
Term next_ulam(const UlamSequence &seq);

/// Reference generator: repeated next_ulam. Quadratic; used as the oracle.
UlamSequence generate_up_to(Term limit);

/// Bit-parallel generator. Element-wise identical to generate_up_to.
UlamSequence generate_fast(Term limit);

/// First `count` Ulam terms, produced by the streaming bit-parallel generator.
std::vector<Term> first_ulam_terms(std::size_t count);

/// Streaming bit-parallel generator.
///
/// Keeps three bitsets over [0, capacity]: the terms seen so far, the sums
/// reached at least once, and the sums reached at least twice. Together the
/// last two form a saturating 2-bit counter per integer. Inserting a term u
/// ORs the term bitset shifted by u into the counters. When a search runs
/// past the capacity the window is doubled and the counters are rebuilt.
class FastUlamGenerator {
public:
  explicit FastUlamGenerator(Term initial_capacity = 1024);

  /// Next term if it is <= bound, otherwise nullopt. Never grows the window
  /// past what `bound` requires.
  std::optional<Term> advance(Term bound);

  /// Next term, growing the window as often as needed.
  Term next();

  const std::vector<Term> &terms() const { return terms_; }
  Term capacity() const { return capacity_; }

private:
  void grow(Term new_capacity);
  void insert(Term u);
  bool unique_at(Term x) const;

  std::vector<Term> terms_;
  Term capacity_ = 0;
  // Position of the next candidate to classify.
  Term cursor_ = 0;
  std::vector<std::uint64_t> present_;
  std::vector<std::uint64_t> once_;
  std::vector<std::uint64_t> twice_;
};

/// 1-based indices m > 3 with terms[m] == terms[m-1] + terms[m-2].
std::vector<std::size_t> check_consecutive_sum_lemma(std::span<const Term> terms);

struct GapStatistics {
  Term max_gap = 0;
  std::map<Term, std::uint64_t> histogram;
};

GapStatistics gap_statistics(std::span<const Term> terms);

struct VerifyReport {
  /// Terms (index >= 3) whose representation count is not exactly one.
  std::vector<Term> uniqueness_failures;
  /// Non-terms below the limit with exactly one representation.
  std::vector<Term> completeness_failures;
  /// Failures of the base axioms: first two terms 1, 2; strict increase;
  /// all terms within the limit.
  std::vector<std::size_t> structure_failures;
  std::vector<std::size_t> lemma_failures;

  bool ok() const {
    return uniqueness_failures.empty() && completeness_failures.empty() &&
           structure_failures.empty() && lemma_failures.empty();
  }
};

/// Checks every UlamSequence invariant with the pair-counting oracle.
VerifyReport verify_sequence(const UlamSequence &seq);

} // namespace ulamlab
