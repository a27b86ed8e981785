#include "ulamlab/chain.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "ulamlab/errors.hpp"

namespace ulamlab {

namespace {

// Is x = a + b for a, b in the sorted prefix (a == b allowed)?
bool is_sum_of_two(std::span<const Term> sorted_prefix, Term x) {
  if (sorted_prefix.empty())
    return false;
  std::size_t lo = 0;
  std::size_t hi = sorted_prefix.size() - 1;
  while (lo <= hi) {
    const Term sum = sorted_prefix[lo] + sorted_prefix[hi];
    if (sum == x)
      return true;
    if (sum < x) {
      ++lo;
    } else {
      if (hi == 0)
        break;
      --hi;
    }
  }
  return false;
}

} // namespace

bool AdditionChain::contains(Term x) const { return std::binary_search(terms_.begin(), terms_.end(), x); }

const char *to_string(ViolationKind kind) {
  switch (kind) {
  case ViolationKind::Empty:
    return "empty";
  case ViolationKind::BadFirstTerm:
    return "first-term-not-1";
  case ViolationKind::BadSecondTerm:
    return "second-term-not-2";
  case ViolationKind::NotIncreasing:
    return "not-increasing";
  case ViolationKind::NotASum:
    return "not-a-sum";
  case ViolationKind::NotStarStep:
    return "not-a-star-step";
  }
  return "unknown";
}

const char *to_string(ValidityMode mode) { return mode == ValidityMode::Star ? "star" : "general"; }

std::vector<Violation> validate(const AdditionChain &chain, ValidityMode mode) {
  std::vector<Violation> out;
  const auto &s = chain.terms();
  if (s.empty()) {
    out.push_back({0, ViolationKind::Empty, "chain has no terms"});
    return out;
  }
  if (s[0] != 1)
    out.push_back({1, ViolationKind::BadFirstTerm, "s_1 = " + std::to_string(s[0]) + ", expected 1"});
  if (s.size() >= 2 && s[1] != 2)
    out.push_back({2, ViolationKind::BadSecondTerm, "s_2 = " + std::to_string(s[1]) + ", expected 2"});

  // Once the order breaks the prefix is no longer sorted; fall back to a set.
  bool sorted = true;
  std::unordered_set<Term> seen{s[0]};
  for (std::size_t j = 1; j < s.size(); ++j) {
    const std::size_t index = j + 1;
    const Term x = s[j];
    if (x <= s[j - 1]) {
      sorted = false;
      out.push_back({index, ViolationKind::NotIncreasing,
                     std::to_string(x) + " does not exceed " + std::to_string(s[j - 1])});
      seen.insert(x);
      continue;
    }
    const std::span<const Term> prefix(s.data(), j);
    bool general = false;
    bool star = false;
    if (sorted) {
      general = is_sum_of_two(prefix, x);
      star = std::binary_search(prefix.begin(), prefix.end(), x - s[j - 1]);
    } else {
      for (Term p : prefix) {
        if (p < x && seen.contains(x - p)) {
          general = true;
          break;
        }
      }
      star = seen.contains(x - s[j - 1]);
    }
    if (!general) {
      out.push_back({index, ViolationKind::NotASum,
                     std::to_string(x) + " is not a sum of two earlier terms"});
    } else if (mode == ValidityMode::Star && !star) {
      out.push_back({index, ViolationKind::NotStarStep,
                     "regulator " + std::to_string(x - s[j - 1]) + " is not an earlier term"});
    }
    seen.insert(x);
  }
  return out;
}

GeneratorDecomposition decompose(const AdditionChain &chain) {
  const auto violations = validate(chain, ValidityMode::General);
  if (!violations.empty())
    throw ContractError("invalid addition chain at index " + std::to_string(violations.front().index) + ": " +
                        violations.front().reason);
  GeneratorDecomposition d;
  const auto &s = chain.terms();
  d.pairs.reserve(s.size() > 0 ? s.size() - 1 : 0);
  for (std::size_t i = 1; i < s.size(); ++i)
    d.pairs.push_back({s[i - 1], s[i] - s[i - 1]});
  return d;
}

std::uint64_t regulator_sum(const AdditionChain &chain) {
  std::uint64_t sum = 0;
  for (const auto &g : decompose(chain).pairs)
    sum += g.regulator;
  return sum;
}

ChainConstant chain_constant(const AdditionChain &chain) {
  if (chain.size() < 2)
    throw ContractError("chain constant needs at least one generator step");
  const auto d = decompose(chain);
  ChainConstant cc;
  cc.n = chain.target();
  cc.delta = chain.length();
  cc.c = Rational(static_cast<std::int64_t>(cc.n - 1), static_cast<std::int64_t>(cc.delta));
  cc.inf_r = d.pairs.front().regulator;
  cc.sup_r = d.pairs.front().regulator;
  for (const auto &g : d.pairs) {
    cc.inf_r = std::min(cc.inf_r, g.regulator);
    cc.sup_r = std::max(cc.sup_r, g.regulator);
  }
  const auto as_rational = [](Term v) { return Rational(static_cast<std::int64_t>(v)); };
  if (as_rational(cc.inf_r) > cc.c || cc.c > as_rational(cc.sup_r))
    throw std::logic_error("regulator mean outside [inf, sup]");
  return cc;
}

int hamming_weight(Term n) { return std::popcount(n); }

double schonhage_lower_bound(Term n) {
  if (n < 1)
    throw DomainError("Schonhage bound needs n >= 1");
  return std::log2(static_cast<double>(n)) + std::log2(static_cast<double>(hamming_weight(n))) - 2.13;
}

double upper_bound_indicative(Term n) {
  if (n < 3)
    throw DomainError("indicative upper bound needs n >= 3");
  const double lg = std::log2(static_cast<double>(n));
  return lg + lg / std::log2(lg);
}

double constant_floor(Term n) {
  if (n < 3)
    throw DomainError("constant floor needs n >= 3");
  return static_cast<double>(n - 1) / upper_bound_indicative(n);
}

std::uint32_t binary_method_length(Term n) {
  if (n < 1)
    throw DomainError("binary method needs n >= 1");
  return static_cast<std::uint32_t>(static_cast<int>(std::bit_width(n)) - 1 + std::popcount(n) - 1);
}

AdditionChain binary_method_chain(Term n) {
  if (n < 1)
    throw DomainError("binary method needs n >= 1");
  std::vector<Term> terms{1};
  for (int bit = static_cast<int>(std::bit_width(n)) - 2; bit >= 0; --bit) {
    terms.push_back(terms.back() * 2);
    if ((n >> bit) & 1)
      terms.push_back(terms.back() + 1);
  }
  return AdditionChain(std::move(terms));
}

AdditionChain embed_terms(std::span<const Term> terms) {
  if (terms.size() < 2 || terms[0] != 1 || terms[1] != 2)
    throw ContractError("embedding needs a prefix starting 1, 2");
  std::vector<Term> s{1, 2};
  for (std::size_t i = 2; i < terms.size(); ++i) {
    const Term target = terms[i];
    if (target <= terms[i - 1])
      throw ContractError("embedding targets must be strictly increasing");
    while (s.back() < target) {
      const Term gap = target - s.back();
      // Largest chain element <= gap; s[0] == 1 guarantees one exists.
      const auto it = std::upper_bound(s.begin(), s.end(), gap);
      s.push_back(s.back() + *std::prev(it));
    }
  }
  return AdditionChain(std::move(s));
}

AdditionChain embed_ulam(std::span<const Term> ulam_terms) {
  if (ulam_terms.size() < 2)
    throw ContractError("embedding needs at least two Ulam terms");
  const auto reference = generate_fast(ulam_terms.back());
  if (!std::equal(ulam_terms.begin(), ulam_terms.end(), reference.terms.begin(), reference.terms.end()))
    throw ContractError("input is not the leading Ulam prefix");
  return embed_terms(ulam_terms);
}

MajorantRecord covering_report(std::span<const Term> ulam_terms, Term l) {
  if (ulam_terms.size() < 2)
    throw ContractError("covering report needs at least two Ulam terms");
  if (l < ulam_terms.back())
    throw DomainError("evaluation point l must be at least U_n");
  const auto chain = embed_ulam(ulam_terms);
  const auto cc = chain_constant(chain);

  MajorantRecord r;
  r.n = ulam_terms.size();
  r.u_n = chain.target();
  r.delta = cc.delta;
  r.c = cc.c;
  r.l = l;
  const auto li = static_cast<std::int64_t>(l);
  r.bound = 1 / r.c + Rational(1, li);
  r.actual = Rational(static_cast<std::int64_t>(r.n), li);
  r.count_check = r.n <= r.delta + 1;
  r.majorant_check = r.actual <= r.bound;
  if (r.u_n >= 3) {
    r.floor = constant_floor(r.u_n);
    r.meets_floor = to_double(r.c) >= *r.floor;
  }
  return r;
}

} // namespace ulamlab
