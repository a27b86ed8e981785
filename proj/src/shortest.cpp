#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "ulamlab/chain.hpp"
#include "ulamlab/errors.hpp"

namespace ulamlab {

namespace {

// Depth-first search for an ascending chain of exactly `depth` steps ending
// at n. Candidates are tried in increasing order, so the first chain found is
// the lexicographically smallest one of that length.
class ChainSearch {
public:
  ChainSearch(Term n, std::uint64_t budget) : n_(n), budget_(budget) {}

  bool run(std::uint32_t depth) {
    chain_.assign({1});
    return extend(depth);
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Term> &chain() const { return chain_; }

private:
  // Smallest value v with v * 2^steps >= n.
  Term needed(std::uint32_t steps) const {
    if (steps >= 63)
      return 1;
    const Term mask = (Term{1} << steps) - 1;
    return (n_ >> steps) + ((n_ & mask) != 0 ? 1 : 0);
  }

  bool extend(std::uint32_t remaining) {
    ++nodes_;
    if (budget_ != kUnlimitedBudget && nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const Term top = chain_.back();
    if (top == n_)
      return true;
    if (remaining == 0 || top < needed(remaining))
      return false;

    const Term floor = needed(remaining - 1);
    std::vector<Term> candidates;
    const std::size_t k = chain_.size();
    for (std::size_t i = k; i-- > 0;) {
      // chain_ ascends, so sums with chain_[i] as the larger summand shrink
      // as j decreases.
      for (std::size_t j = i + 1; j-- > 0;) {
        const Term sum = chain_[i] + chain_[j];
        if (sum <= top || sum < floor)
          break;
        if (sum <= n_)
          candidates.push_back(sum);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (Term next : candidates) {
      chain_.push_back(next);
      if (extend(remaining - 1))
        return true;
      chain_.pop_back();
      if (exhausted_)
        return false;
    }
    return false;
  }

  Term n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Term> chain_;
};

} // namespace

ShortestChainResult shortest_chain_length(Term n, std::uint64_t node_budget) {
  if (n < 1)
    throw DomainError("shortest chain needs n >= 1");
  ShortestChainResult result;
  result.n = n;
  const std::uint32_t upper = binary_method_length(n);
  // Every step at most doubles the top, so ceil(log2 n) steps are necessary.
  std::uint32_t depth = static_cast<std::uint32_t>(std::bit_width(n - 1));
  if (n == 1)
    depth = 0;

  ChainSearch search(n, node_budget);
  for (; depth <= upper; ++depth) {
    const bool found = search.run(depth);
    if (search.exhausted())
      break;
    if (found) {
      result.exact = true;
      result.lower = result.upper = depth;
      result.witness = AdditionChain(search.chain());
      result.nodes = search.nodes();
      return result;
    }
  }
  // Budget ran out: every depth below `depth` was exhausted without success.
  result.exact = false;
  result.lower = depth;
  result.upper = upper;
  result.witness = binary_method_chain(n);
  result.nodes = search.nodes();
  return result;
}

std::vector<ShortestChainResult> shortest_chain_table(Term max_n, std::uint64_t node_budget, unsigned threads) {
  std::vector<ShortestChainResult> results(static_cast<std::size_t>(max_n));
  std::atomic<Term> next{1};
  auto worker = [&] {
    for (Term n = next++; n <= max_n; n = next++)
      results[static_cast<std::size_t>(n - 1)] = shortest_chain_length(n, node_budget);
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
    return results;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back(worker);
  pool.clear();
  return results;
}

} // namespace ulamlab
