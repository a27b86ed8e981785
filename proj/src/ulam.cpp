#include "ulamlab/ulam.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "ulamlab/errors.hpp"

namespace ulamlab {

namespace {

void require_strictly_increasing(std::span<const Term> prefix) {
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] == 0)
      throw ContractError("prefix contains a non-positive value");
    if (i > 0 && prefix[i] <= prefix[i - 1])
      throw ContractError("prefix is not strictly increasing at position " + std::to_string(i + 1));
  }
}

// Two-pointer pair count over an already validated prefix. Stops once two
// pairs are seen when `saturate` is set.
std::uint64_t pair_count(std::span<const Term> prefix, Term x, bool saturate) {
  auto end = std::lower_bound(prefix.begin(), prefix.end(), x);
  if (end == prefix.begin())
    return 0;
  std::size_t lo = 0;
  std::size_t hi = static_cast<std::size_t>(end - prefix.begin()) - 1;
  std::uint64_t count = 0;
  while (lo < hi) {
    const Term sum = prefix[lo] + prefix[hi];
    if (sum == x) {
      ++count;
      if (saturate && count >= 2)
        return count;
      ++lo;
      --hi;
    } else if (sum < x) {
      ++lo;
    } else {
      --hi;
    }
  }
  return count;
}

} // namespace

RepresentationTally count_representations(std::span<const Term> prefix, Term x) {
  require_strictly_increasing(prefix);
  if (x < 2)
    throw ContractError("candidate must be at least 2");
  return {x, pair_count(prefix, x, false)};
}

Term next_ulam(const UlamSequence &seq) {
  if (seq.terms.size() < 2)
    throw ContractError("next_ulam needs at least the two seed terms");
  require_strictly_increasing(seq.terms);
  for (Term x = seq.terms.back() + 1;; ++x) {
    if (pair_count(seq.terms, x, true) == 1)
      return x;
  }
}

UlamSequence generate_up_to(Term limit) {
  if (limit < 1)
    throw ContractError("limit must be at least 1");
  UlamSequence seq;
  seq.limit = limit;
  seq.terms.push_back(1);
  if (limit >= 2)
    seq.terms.push_back(2);
  // Inline form of repeated next_ulam that stops at the limit instead of
  // searching past it.
  for (Term x = 3; x <= limit; ++x) {
    if (pair_count(seq.terms, x, true) == 1)
      seq.terms.push_back(x);
  }
  return seq;
}

FastUlamGenerator::FastUlamGenerator(Term initial_capacity) {
  grow(std::max<Term>(initial_capacity, 64));
}

void FastUlamGenerator::grow(Term new_capacity) {
  capacity_ = new_capacity;
  const std::size_t words = static_cast<std::size_t>(capacity_ / 64) + 1;
  present_.assign(words, 0);
  once_.assign(words, 0);
  twice_.assign(words, 0);
  for (Term t : terms_)
    insert(t);
}

void FastUlamGenerator::insert(Term u) {
  const std::size_t nwords = once_.size();
  const std::size_t word_shift = static_cast<std::size_t>(u >> 6);
  const unsigned bit_shift = static_cast<unsigned>(u & 63);
  // present_ holds only terms below u here, so sources live in words
  // [0, (u-1)/64] and every produced sum is a sum of distinct terms.
  const std::size_t src_last = u > 0 ? static_cast<std::size_t>((u - 1) >> 6) : 0;
  for (std::size_t i = 0; i <= src_last + 1; ++i) {
    const std::size_t d = i + word_shift;
    if (d >= nwords)
      break;
    const std::uint64_t lo = i <= src_last ? present_[i] : 0;
    std::uint64_t shifted = lo << bit_shift;
    if (bit_shift != 0 && i > 0)
      shifted |= present_[i - 1] >> (64 - bit_shift);
    twice_[d] |= once_[d] & shifted;
    once_[d] |= shifted;
  }
  if (u <= capacity_)
    present_[u >> 6] |= std::uint64_t{1} << (u & 63);
}

bool FastUlamGenerator::unique_at(Term x) const {
  const std::uint64_t bit = std::uint64_t{1} << (x & 63);
  return (once_[x >> 6] & bit) && !(twice_[x >> 6] & bit);
}

std::optional<Term> FastUlamGenerator::advance(Term bound) {
  if (terms_.empty() || terms_.size() == 1) {
    const Term seed = terms_.empty() ? 1 : 2;
    if (seed > bound)
      return std::nullopt;
    if (seed > capacity_)
      grow(std::max<Term>(capacity_ * 2, seed));
    insert(seed);
    terms_.push_back(seed);
    cursor_ = seed + 1;
    return seed;
  }
  while (true) {
    const Term end = std::min(bound, capacity_);
    if (cursor_ <= end) {
      std::size_t w = static_cast<std::size_t>(cursor_ >> 6);
      const std::size_t w_end = static_cast<std::size_t>(end >> 6);
      for (; w <= w_end; ++w) {
        std::uint64_t unique = once_[w] & ~twice_[w];
        if (w == (cursor_ >> 6))
          unique &= ~std::uint64_t{0} << (cursor_ & 63);
        if (w == w_end && (end & 63) != 63)
          unique &= (std::uint64_t{1} << ((end & 63) + 1)) - 1;
        if (unique != 0) {
          const Term x = static_cast<Term>(w) * 64 + static_cast<Term>(std::countr_zero(unique));
          insert(x);
          terms_.push_back(x);
          cursor_ = x + 1;
          return x;
        }
      }
      cursor_ = end + 1;
    }
    if (capacity_ >= bound)
      return std::nullopt;
    const Term doubled =
        capacity_ > std::numeric_limits<Term>::max() / 2 ? std::numeric_limits<Term>::max() : capacity_ * 2;
    grow(std::min(bound, doubled));
  }
}

Term FastUlamGenerator::next() { return *advance(std::numeric_limits<Term>::max() - 1); }

UlamSequence generate_fast(Term limit) {
  if (limit < 1)
    throw ContractError("limit must be at least 1");
  FastUlamGenerator gen(limit);
  while (gen.advance(limit)) {
  }
  return {gen.terms(), limit};
}

std::vector<Term> first_ulam_terms(std::size_t count) {
  FastUlamGenerator gen;
  while (gen.terms().size() < count)
    gen.next();
  return gen.terms();
}

std::vector<std::size_t> check_consecutive_sum_lemma(std::span<const Term> terms) {
  std::vector<std::size_t> violations;
  for (std::size_t m = 4; m <= terms.size(); ++m) {
    if (terms[m - 1] == terms[m - 2] + terms[m - 3])
      violations.push_back(m);
  }
  return violations;
}

GapStatistics gap_statistics(std::span<const Term> terms) {
  if (terms.size() < 2)
    throw ContractError("gap statistics need at least two terms");
  GapStatistics stats;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const Term gap = terms[i] - terms[i - 1];
    stats.max_gap = std::max(stats.max_gap, gap);
    ++stats.histogram[gap];
  }
  return stats;
}

VerifyReport verify_sequence(const UlamSequence &seq) {
  VerifyReport report;
  const auto &t = seq.terms;
  if (seq.limit >= 1 && (t.empty() || t[0] != 1))
    report.structure_failures.push_back(1);
  if (seq.limit >= 2 && (t.size() < 2 || t[1] != 2))
    report.structure_failures.push_back(2);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const bool decreasing = i > 0 && t[i] <= t[i - 1];
    if (decreasing || t[i] > seq.limit || t[i] == 0)
      report.structure_failures.push_back(i + 1);
  }
  if (!report.structure_failures.empty())
    return report;

  for (std::size_t m = 2; m < t.size(); ++m) {
    if (pair_count(std::span(t).first(m), t[m], true) != 1)
      report.uniqueness_failures.push_back(t[m]);
  }
  std::size_t next_term = 0;
  for (Term x = 1; x <= seq.limit; ++x) {
    if (next_term < t.size() && t[next_term] == x) {
      ++next_term;
      continue;
    }
    if (pair_count(std::span(t).first(next_term), x, true) == 1)
      report.completeness_failures.push_back(x);
  }
  report.lemma_failures = check_consecutive_sum_lemma(t);
  return report;
}

} // namespace ulamlab
