#include "ulamlab/ulam_lab.h"

#include <algorithm>
#include <cstdlib>
#include <new>
#include <string>
#include <thread>
#include <vector>

#include "ulamlab/chain.hpp"
#include "ulamlab/density.hpp"
#include "ulamlab/errors.hpp"
#include "ulamlab/ulam.hpp"

struct ulam_sequence {
  ulamlab::UlamSequence seq;
};

struct ulam_chain {
  ulamlab::AdditionChain chain;
};

struct ulam_violations {
  std::vector<ulamlab::Violation> items;
};

namespace {

thread_local std::string last_error;

ulam_status fail(ulam_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F> ulam_status guarded(F &&body) {
  try {
    return body();
  } catch (const ulamlab::ContractError &e) {
    return fail(ULAM_ERR_CONTRACT, e.what());
  } catch (const ulamlab::DomainError &e) {
    return fail(ULAM_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc &) {
    return fail(ULAM_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception &e) {
    return fail(ULAM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ULAM_ERR_INTERNAL, "unknown exception");
  }
}

#define ULAM_REQUIRE(ptr)                                                                                    \
  do {                                                                                                       \
    if ((ptr) == nullptr)                                                                                    \
      return fail(ULAM_ERR_NULL_ARGUMENT, #ptr " is null");                                                  \
  } while (0)

std::span<const ulamlab::Term> view(const uint64_t *data, size_t n) {
  return n == 0 ? std::span<const ulamlab::Term>{} : std::span<const ulamlab::Term>(data, n);
}

// Copies `items` into a caller buffer following the two-call convention.
template <typename T, typename Src, typename Conv>
ulam_status fill(const std::vector<Src> &items, T *out, size_t capacity, size_t *count, Conv conv) {
  *count = items.size();
  if (capacity < items.size())
    return fail(ULAM_ERR_BUFFER_TOO_SMALL, "buffer holds " + std::to_string(capacity) + " of " +
                                               std::to_string(items.size()) + " elements");
  for (size_t i = 0; i < items.size(); ++i)
    out[i] = conv(items[i]);
  return ULAM_OK;
}

void to_c(const ulamlab::MajorantRecord &r, ulam_majorant_record *out) {
  *out = {};
  out->n = r.n;
  out->u_n = r.u_n;
  out->delta = r.delta;
  out->c_num = r.c.numerator();
  out->c_den = r.c.denominator();
  out->l = r.l;
  out->bound_num = r.bound.numerator();
  out->bound_den = r.bound.denominator();
  out->actual_num = r.actual.numerator();
  out->actual_den = r.actual.denominator();
  out->one_over_c = r.one_over_c();
  out->bound = ulamlab::to_double(r.bound);
  out->actual = ulamlab::to_double(r.actual);
  out->count_check = r.count_check ? 1 : 0;
  out->majorant_check = r.majorant_check ? 1 : 0;
  out->has_floor = r.floor.has_value() ? 1 : 0;
  out->floor = r.floor.value_or(0.0);
  out->meets_floor = r.meets_floor.value_or(false) ? 1 : 0;
}

unsigned resolve_threads(unsigned requested) {
  unsigned threads = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char *env = std::getenv("ULAM_LAB_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0)
      threads = std::min(threads, static_cast<unsigned>(cap));
  }
  return threads;
}

} // namespace

extern "C" {

const char *ulam_version(void) { return "1.0.0"; }

const char *ulam_status_string(ulam_status status) {
  switch (status) {
  case ULAM_OK:
    return "ok";
  case ULAM_ERR_NULL_ARGUMENT:
    return "null argument";
  case ULAM_ERR_CONTRACT:
    return "input contract violated";
  case ULAM_ERR_DOMAIN:
    return "domain error";
  case ULAM_ERR_BUDGET_EXHAUSTED:
    return "search budget exhausted";
  case ULAM_ERR_BUFFER_TOO_SMALL:
    return "buffer too small";
  case ULAM_ERR_OUT_OF_MEMORY:
    return "out of memory";
  case ULAM_ERR_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

const char *ulam_last_error(void) { return last_error.c_str(); }

ulam_status ulam_sequence_generate(uint64_t limit, ulam_algorithm algo, ulam_sequence **out) {
  ULAM_REQUIRE(out);
  return guarded([&] {
    auto seq = algo == ULAM_ALGO_NAIVE ? ulamlab::generate_up_to(limit) : ulamlab::generate_fast(limit);
    *out = new ulam_sequence{std::move(seq)};
    return ULAM_OK;
  });
}

ulam_status ulam_sequence_first(size_t count, ulam_sequence **out) {
  ULAM_REQUIRE(out);
  return guarded([&] {
    if (count == 0)
      return fail(ULAM_ERR_CONTRACT, "count must be positive");
    auto terms = ulamlab::first_ulam_terms(count);
    const auto limit = terms.back();
    *out = new ulam_sequence{{std::move(terms), limit}};
    return ULAM_OK;
  });
}

ulam_status ulam_sequence_from_terms(const uint64_t *terms, size_t n, uint64_t limit, ulam_sequence **out) {
  ULAM_REQUIRE(out);
  if (n > 0)
    ULAM_REQUIRE(terms);
  return guarded([&] {
    *out = new ulam_sequence{{std::vector<ulamlab::Term>(terms, terms + n), limit}};
    return ULAM_OK;
  });
}

void ulam_sequence_free(ulam_sequence *seq) { delete seq; }

size_t ulam_sequence_size(const ulam_sequence *seq) { return seq ? seq->seq.terms.size() : 0; }

const uint64_t *ulam_sequence_terms(const ulam_sequence *seq) { return seq ? seq->seq.terms.data() : nullptr; }

uint64_t ulam_sequence_limit(const ulam_sequence *seq) { return seq ? seq->seq.limit : 0; }

ulam_status ulam_next_term(const ulam_sequence *seq, uint64_t *out) {
  ULAM_REQUIRE(seq);
  ULAM_REQUIRE(out);
  return guarded([&] {
    *out = ulamlab::next_ulam(seq->seq);
    return ULAM_OK;
  });
}

ulam_status ulam_sequence_verify(const ulam_sequence *seq, ulam_verify_summary *out) {
  ULAM_REQUIRE(seq);
  ULAM_REQUIRE(out);
  return guarded([&] {
    const auto r = ulamlab::verify_sequence(seq->seq);
    *out = {};
    out->structure_failures = r.structure_failures.size();
    out->uniqueness_failures = r.uniqueness_failures.size();
    out->completeness_failures = r.completeness_failures.size();
    out->lemma_failures = r.lemma_failures.size();
    if (!r.structure_failures.empty())
      out->first_structure_index = r.structure_failures.front();
    if (!r.uniqueness_failures.empty())
      out->first_uniqueness_term = r.uniqueness_failures.front();
    if (!r.completeness_failures.empty())
      out->first_completeness_value = r.completeness_failures.front();
    if (!r.lemma_failures.empty())
      out->first_lemma_index = r.lemma_failures.front();
    return ULAM_OK;
  });
}

ulam_status ulam_count_representations(const uint64_t *prefix, size_t n, uint64_t x, uint64_t *count) {
  if (n > 0)
    ULAM_REQUIRE(prefix);
  ULAM_REQUIRE(count);
  return guarded([&] {
    *count = ulamlab::count_representations(view(prefix, n), x).count;
    return ULAM_OK;
  });
}

ulam_status ulam_consecutive_sum_violations(const uint64_t *terms, size_t n, size_t *indices, size_t capacity,
                                            size_t *count) {
  if (n > 0)
    ULAM_REQUIRE(terms);
  ULAM_REQUIRE(count);
  return guarded([&] {
    const auto v = ulamlab::check_consecutive_sum_lemma(view(terms, n));
    return fill(v, indices, capacity, count, [](size_t i) { return i; });
  });
}

ulam_status ulam_gap_statistics(const uint64_t *terms, size_t n, uint64_t *max_gap, ulam_gap_bucket *buckets,
                                size_t capacity, size_t *count) {
  if (n > 0)
    ULAM_REQUIRE(terms);
  ULAM_REQUIRE(max_gap);
  ULAM_REQUIRE(count);
  return guarded([&] {
    const auto stats = ulamlab::gap_statistics(view(terms, n));
    *max_gap = stats.max_gap;
    std::vector<ulam_gap_bucket> flat;
    for (const auto &[gap, occurrences] : stats.histogram)
      flat.push_back({gap, occurrences});
    return fill(flat, buckets, capacity, count, [](const ulam_gap_bucket &b) { return b; });
  });
}

ulam_status ulam_chain_create(const uint64_t *terms, size_t n, ulam_chain **out) {
  if (n > 0)
    ULAM_REQUIRE(terms);
  ULAM_REQUIRE(out);
  return guarded([&] {
    *out = new ulam_chain{ulamlab::AdditionChain(std::vector<ulamlab::Term>(terms, terms + n))};
    return ULAM_OK;
  });
}

void ulam_chain_free(ulam_chain *chain) { delete chain; }

size_t ulam_chain_size(const ulam_chain *chain) { return chain ? chain->chain.size() : 0; }

const uint64_t *ulam_chain_terms(const ulam_chain *chain) { return chain ? chain->chain.terms().data() : nullptr; }

size_t ulam_chain_length(const ulam_chain *chain) { return chain ? chain->chain.length() : 0; }

ulam_status ulam_chain_validate(const ulam_chain *chain, ulam_validity_mode mode, ulam_violations **out) {
  ULAM_REQUIRE(chain);
  ULAM_REQUIRE(out);
  return guarded([&] {
    const auto m = mode == ULAM_MODE_STAR ? ulamlab::ValidityMode::Star : ulamlab::ValidityMode::General;
    *out = new ulam_violations{ulamlab::validate(chain->chain, m)};
    return ULAM_OK;
  });
}

size_t ulam_violations_count(const ulam_violations *list) { return list ? list->items.size() : 0; }

ulam_status ulam_violations_get(const ulam_violations *list, size_t i, ulam_violation *out) {
  ULAM_REQUIRE(list);
  ULAM_REQUIRE(out);
  if (i >= list->items.size())
    return fail(ULAM_ERR_CONTRACT, "violation index out of range");
  const auto &v = list->items[i];
  out->index = v.index;
  out->kind = static_cast<ulam_violation_kind>(v.kind);
  out->reason = v.reason.c_str();
  return ULAM_OK;
}

void ulam_violations_free(ulam_violations *list) { delete list; }

const char *ulam_violation_kind_string(ulam_violation_kind kind) {
  return ulamlab::to_string(static_cast<ulamlab::ViolationKind>(kind));
}

ulam_status ulam_chain_decompose(const ulam_chain *chain, ulam_generator *out, size_t capacity, size_t *count) {
  ULAM_REQUIRE(chain);
  ULAM_REQUIRE(count);
  return guarded([&] {
    const auto d = ulamlab::decompose(chain->chain);
    return fill(d.pairs, out, capacity, count, [](const ulamlab::Generator &g) {
      return ulam_generator{g.determiner, g.regulator};
    });
  });
}

ulam_status ulam_chain_regulator_sum(const ulam_chain *chain, uint64_t *out) {
  ULAM_REQUIRE(chain);
  ULAM_REQUIRE(out);
  return guarded([&] {
    *out = ulamlab::regulator_sum(chain->chain);
    return ULAM_OK;
  });
}

ulam_status ulam_chain_constant_compute(const ulam_chain *chain, ulam_chain_constant *out) {
  ULAM_REQUIRE(chain);
  ULAM_REQUIRE(out);
  return guarded([&] {
    const auto cc = ulamlab::chain_constant(chain->chain);
    *out = {cc.n, cc.delta, cc.c.numerator(), cc.c.denominator(), cc.inf_r, cc.sup_r};
    return ULAM_OK;
  });
}

int ulam_hamming_weight(uint64_t n) { return ulamlab::hamming_weight(n); }

ulam_status ulam_schonhage_lower_bound(uint64_t n, double *out) {
  ULAM_REQUIRE(out);
  return guarded([&] {
    *out = ulamlab::schonhage_lower_bound(n);
    return ULAM_OK;
  });
}

ulam_status ulam_upper_bound_indicative(uint64_t n, double *out) {
  ULAM_REQUIRE(out);
  return guarded([&] {
    *out = ulamlab::upper_bound_indicative(n);
    return ULAM_OK;
  });
}

ulam_status ulam_constant_floor(uint64_t n, double *out) {
  ULAM_REQUIRE(out);
  return guarded([&] {
    *out = ulamlab::constant_floor(n);
    return ULAM_OK;
  });
}

namespace {
ulam_shortest_result to_c(const ulamlab::ShortestChainResult &r) {
  return {r.n, r.exact ? 1 : 0, r.lower, r.upper, r.nodes};
}
} // namespace

ulam_status ulam_shortest_chain(uint64_t n, uint64_t node_budget, ulam_shortest_result *out, ulam_chain **witness) {
  ULAM_REQUIRE(out);
  return guarded([&] {
    const auto r = ulamlab::shortest_chain_length(n, node_budget);
    *out = to_c(r);
    if (witness)
      *witness = new ulam_chain{r.witness};
    if (!r.exact)
      return fail(ULAM_ERR_BUDGET_EXHAUSTED, "node budget of " + std::to_string(node_budget) +
                                                 " exhausted; iota(" + std::to_string(n) + ") in [" +
                                                 std::to_string(r.lower) + ", " + std::to_string(r.upper) + "]");
    return ULAM_OK;
  });
}

ulam_status ulam_shortest_chain_table(uint64_t max_n, uint64_t node_budget, unsigned threads,
                                      ulam_shortest_result *out) {
  if (max_n > 0)
    ULAM_REQUIRE(out);
  return guarded([&] {
    const auto table = ulamlab::shortest_chain_table(max_n, node_budget, resolve_threads(threads));
    bool all_exact = true;
    for (size_t i = 0; i < table.size(); ++i) {
      out[i] = to_c(table[i]);
      all_exact = all_exact && table[i].exact;
    }
    if (!all_exact)
      return fail(ULAM_ERR_BUDGET_EXHAUSTED, "node budget exhausted for some n");
    return ULAM_OK;
  });
}

ulam_status ulam_embed(const uint64_t *ulam_terms, size_t n, ulam_chain **out) {
  if (n > 0)
    ULAM_REQUIRE(ulam_terms);
  ULAM_REQUIRE(out);
  return guarded([&] {
    *out = new ulam_chain{ulamlab::embed_ulam(view(ulam_terms, n))};
    return ULAM_OK;
  });
}

ulam_status ulam_covering_report(const uint64_t *ulam_terms, size_t n, uint64_t l, ulam_majorant_record *out) {
  if (n > 0)
    ULAM_REQUIRE(ulam_terms);
  ULAM_REQUIRE(out);
  return guarded([&] {
    to_c(ulamlab::covering_report(view(ulam_terms, n), l), out);
    return ULAM_OK;
  });
}

ulam_status ulam_majorant_series(const uint64_t *term_counts, size_t n, ulam_majorant_record *out) {
  if (n > 0) {
    ULAM_REQUIRE(term_counts);
    ULAM_REQUIRE(out);
  }
  return guarded([&] {
    const auto records = ulamlab::majorant_series(std::span<const std::uint64_t>(term_counts, n));
    for (size_t i = 0; i < records.size(); ++i)
      to_c(records[i], &out[i]);
    return ULAM_OK;
  });
}

ulam_status ulam_density_series(uint64_t limit, const uint64_t *checkpoints, size_t n, ulam_density_record *out) {
  if (n > 0) {
    ULAM_REQUIRE(checkpoints);
    ULAM_REQUIRE(out);
  }
  return guarded([&] {
    const auto records = ulamlab::density_series(limit, view(checkpoints, n));
    for (size_t i = 0; i < records.size(); ++i) {
      const auto &r = records[i];
      out[i] = {r.k, r.count, r.ratio.numerator(), r.ratio.denominator(), r.ratio_decimal()};
    }
    return ULAM_OK;
  });
}

ulam_status ulam_convergence_diagnostic(const ulam_density_record *records, size_t n, ulam_trend_summary *out) {
  if (n > 0)
    ULAM_REQUIRE(records);
  ULAM_REQUIRE(out);
  return guarded([&] {
    std::vector<ulamlab::DensityRecord> in;
    in.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      if (records[i].ratio_den <= 0)
        return fail(ULAM_ERR_CONTRACT, "density record has a non-positive denominator");
      in.push_back({records[i].k, records[i].count, ulamlab::Rational(records[i].ratio_num, records[i].ratio_den)});
    }
    const auto t = ulamlab::convergence_diagnostic(in);
    *out = {t.last_window_mean, t.slope, t.max_oscillation, static_cast<ulam_trend_verdict>(t.verdict)};
    return ULAM_OK;
  });
}

const char *ulam_trend_verdict_string(ulam_trend_verdict verdict) {
  return ulamlab::to_string(static_cast<ulamlab::TrendVerdict>(verdict));
}

} // extern "C"
