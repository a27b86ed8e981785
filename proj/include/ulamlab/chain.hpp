#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ulamlab/rational.hpp"
#include "ulamlab/ulam.hpp"

namespace ulamlab {

enum class ValidityMode { General, Star };

/// Ascending addition chain 1, 2, ..., n. Holds terms only; validity is
/// checked on demand by validate().
class AdditionChain {
public:
  AdditionChain() = default;
  explicit AdditionChain(std::vector<Term> terms) : terms_(std::move(terms)) {}

  const std::vector<Term> &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Term target() const { return terms_.empty() ? 0 : terms_.back(); }
  /// Number of generator steps (size - 1).
  std::size_t length() const { return terms_.empty() ? 0 : terms_.size() - 1; }
  bool contains(Term x) const;

  bool operator==(const AdditionChain &) const = default;

private:
  std::vector<Term> terms_;
};

enum class ViolationKind {
  Empty,
  BadFirstTerm,  // s_1 != 1
  BadSecondTerm, // s_2 != 2
  NotIncreasing,
  NotASum,       // no p, q < j with s_j = s_p + s_q
  NotStarStep,   // s_j - s_{j-1} is not an earlier element
};

struct Violation {
  std::size_t index = 0; // 1-based, matching s_1..s_k
  ViolationKind kind = ViolationKind::Empty;
  std::string reason;

  bool operator==(const Violation &) const = default;
};

const char *to_string(ViolationKind kind);
const char *to_string(ValidityMode mode);

std::vector<Violation> validate(const AdditionChain &chain, ValidityMode mode);
inline bool is_valid(const AdditionChain &chain, ValidityMode mode) {
  return validate(chain, mode).empty();
}

/// Step i of the chain written as s_i = a_i + r_i with a_i = s_{i-1}.
struct Generator {
  Term determiner = 0;
  Term regulator = 0;

  bool operator==(const Generator &) const = default;
};

struct GeneratorDecomposition {
  std::vector<Generator> pairs; // steps i = 2..k

  bool operator==(const GeneratorDecomposition &) const = default;
};

/// Throws ContractError unless the chain is general-valid.
GeneratorDecomposition decompose(const AdditionChain &chain);

/// Sum of all regulators. Equals target - 1 for every valid chain.
std::uint64_t regulator_sum(const AdditionChain &chain);

struct ChainConstant {
  Term n = 0;
  std::uint64_t delta = 0;
  Rational c;
  Term inf_r = 0;
  Term sup_r = 0;
};

/// c = (n - 1) / delta together with the extreme regulators. Throws
/// ContractError for a single-term or invalid chain.
ChainConstant chain_constant(const AdditionChain &chain);

int hamming_weight(Term n);

/// log2(n) + log2(nu(n)) - 2.13.
double schonhage_lower_bound(Term n);

/// log2(n) + log2(n) / log2(log2(n)) with the o(1) term taken as 0.
/// Indicative only. Throws DomainError for n < 3.
double upper_bound_indicative(Term n);

/// (n - 1) / upper_bound_indicative(n). Indicative only.
double constant_floor(Term n);

/// Length of the left-to-right binary method chain: floor(log2 n) + nu(n) - 1.
std::uint32_t binary_method_length(Term n);
AdditionChain binary_method_chain(Term n);

struct ShortestChainResult {
  Term n = 0;
  bool exact = false;
  /// Exact iota(n) when `exact`; otherwise the proven bracket [lower, upper].
  std::uint32_t lower = 0;
  std::uint32_t upper = 0;
  /// Lexicographically smallest shortest chain when exact; best known chain
  /// (binary method) otherwise.
  AdditionChain witness;
  std::uint64_t nodes = 0;

  std::uint32_t length() const { return exact ? lower : upper; }
};

inline constexpr std::uint64_t kUnlimitedBudget = 0;

/// Exact shortest-chain length by iterative deepening over ascending chains.
/// A budget of kUnlimitedBudget disables the node cap. When the cap is hit
/// the result is partial: `exact` is false and [lower, upper] brackets iota.
ShortestChainResult shortest_chain_length(Term n, std::uint64_t node_budget = kUnlimitedBudget);

/// shortest_chain_length for every n in [1, max_n], evaluated by up to
/// `threads` workers. Results are indexed by n - 1 and do not depend on the
/// worker count.
std::vector<ShortestChainResult> shortest_chain_table(Term max_n, std::uint64_t node_budget,
                                                      unsigned threads);

/// Greedy covering chain: for each Ulam target, repeatedly adds the largest
/// chain element not exceeding the remaining gap. The result is star-valid.
/// Throws ContractError unless `ulam_terms` is the leading Ulam prefix.
AdditionChain embed_ulam(std::span<const Term> ulam_terms);

/// Same construction without the Ulam-prefix check; terms must start 1, 2 and
/// strictly increase.
AdditionChain embed_terms(std::span<const Term> terms);

struct MajorantRecord {
  std::uint64_t n = 0;
  Term u_n = 0;
  std::uint64_t delta = 0;
  Rational c;
  Term l = 0;
  Rational bound;  // 1/c + 1/l
  Rational actual; // n/l
  /// n <= delta + 1 and actual <= bound.
  bool count_check = false;
  bool majorant_check = false;
  /// Indicative floor on c and whether this chain's c meets it; absent for
  /// u_n < 3.
  std::optional<double> floor;
  std::optional<bool> meets_floor;

  double one_over_c() const { return to_double(1 / c); }
};

/// Builds the embedding chain of the prefix and evaluates the covering
/// inequalities at `l`. Throws DomainError when l < U_n.
MajorantRecord covering_report(std::span<const Term> ulam_terms, Term l);

} // namespace ulamlab
