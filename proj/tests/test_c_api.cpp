#include <doctest.h>

#include <string>
#include <vector>

#include "ulamlab/ulam_lab.h"

TEST_CASE("sequence handles") {
  ulam_sequence *seq = nullptr;
  REQUIRE(ulam_sequence_generate(100, ULAM_ALGO_FAST, &seq) == ULAM_OK);
  CHECK(ulam_sequence_size(seq) == 26);
  CHECK(ulam_sequence_terms(seq)[25] == 99);
  CHECK(ulam_sequence_limit(seq) == 100);
  std::uint64_t next = 0;
  CHECK(ulam_next_term(seq, &next) == ULAM_OK);
  CHECK(next == 102);
  ulam_verify_summary v{};
  CHECK(ulam_sequence_verify(seq, &v) == ULAM_OK);
  CHECK(v.uniqueness_failures + v.completeness_failures + v.structure_failures + v.lemma_failures == 0);
  ulam_sequence_free(seq);

  CHECK(ulam_sequence_generate(0, ULAM_ALGO_NAIVE, &seq) == ULAM_ERR_CONTRACT);
  CHECK(std::string(ulam_last_error()).find("limit") != std::string::npos);
  CHECK(ulam_sequence_generate(10, ULAM_ALGO_NAIVE, nullptr) == ULAM_ERR_NULL_ARGUMENT);
  ulam_sequence_free(nullptr);
}

TEST_CASE("two-call buffers") {
  const std::uint64_t fake[] = {1, 2, 3, 4, 7};
  std::size_t count = 0;
  CHECK(ulam_consecutive_sum_violations(fake, 5, nullptr, 0, &count) == ULAM_ERR_BUFFER_TOO_SMALL);
  CHECK(count == 1);
  std::size_t index = 0;
  CHECK(ulam_consecutive_sum_violations(fake, 5, &index, 1, &count) == ULAM_OK);
  CHECK(index == 5);

  std::uint64_t max_gap = 0;
  std::vector<ulam_gap_bucket> buckets(8);
  CHECK(ulam_gap_statistics(fake, 5, &max_gap, buckets.data(), buckets.size(), &count) == ULAM_OK);
  CHECK(max_gap == 3);
  CHECK(count == 2);
  CHECK(buckets[0].gap == 1);
  CHECK(buckets[0].occurrences == 3);
}

TEST_CASE("chain handles") {
  const std::uint64_t terms[] = {1, 2, 4, 8};
  ulam_chain *chain = nullptr;
  REQUIRE(ulam_chain_create(terms, 4, &chain) == ULAM_OK);
  CHECK(ulam_chain_length(chain) == 3);

  ulam_violations *vs = nullptr;
  REQUIRE(ulam_chain_validate(chain, ULAM_MODE_STAR, &vs) == ULAM_OK);
  CHECK(ulam_violations_count(vs) == 0);
  ulam_violations_free(vs);

  std::size_t count = 0;
  std::vector<ulam_generator> gens(3);
  CHECK(ulam_chain_decompose(chain, gens.data(), gens.size(), &count) == ULAM_OK);
  CHECK(count == 3);
  CHECK(gens[2].determiner == 4);
  CHECK(gens[2].regulator == 4);

  std::uint64_t sum = 0;
  CHECK(ulam_chain_regulator_sum(chain, &sum) == ULAM_OK);
  CHECK(sum == 7);

  ulam_chain_constant cc{};
  CHECK(ulam_chain_constant_compute(chain, &cc) == ULAM_OK);
  CHECK(cc.c_num == 7);
  CHECK(cc.c_den == 3);
  CHECK(cc.inf_r == 1);
  CHECK(cc.sup_r == 4);
  ulam_chain_free(chain);

  const std::uint64_t bad[] = {1, 2, 5};
  REQUIRE(ulam_chain_create(bad, 3, &chain) == ULAM_OK);
  REQUIRE(ulam_chain_validate(chain, ULAM_MODE_GENERAL, &vs) == ULAM_OK);
  REQUIRE(ulam_violations_count(vs) == 1);
  ulam_violation v{};
  CHECK(ulam_violations_get(vs, 0, &v) == ULAM_OK);
  CHECK(v.index == 3);
  CHECK(v.kind == ULAM_VIOLATION_NOT_A_SUM);
  CHECK(std::string(ulam_violation_kind_string(v.kind)) == "not-a-sum");
  CHECK(ulam_violations_get(vs, 1, &v) == ULAM_ERR_CONTRACT);
  ulam_violations_free(vs);
  CHECK(ulam_chain_regulator_sum(chain, &sum) == ULAM_ERR_CONTRACT);
  ulam_chain_free(chain);
}

TEST_CASE("bounds and search") {
  CHECK(ulam_hamming_weight(15) == 4);
  double x = 0;
  CHECK(ulam_upper_bound_indicative(2, &x) == ULAM_ERR_DOMAIN);
  CHECK(ulam_constant_floor(16, &x) == ULAM_OK);
  CHECK(x == doctest::Approx(2.5));

  ulam_shortest_result r{};
  ulam_chain *w = nullptr;
  CHECK(ulam_shortest_chain(15, 0, &r, &w) == ULAM_OK);
  CHECK(r.exact == 1);
  CHECK(r.lower == 5);
  CHECK(ulam_chain_size(w) == 6);
  ulam_chain_free(w);

  CHECK(ulam_shortest_chain(191, 10, &r, nullptr) == ULAM_ERR_BUDGET_EXHAUSTED);
  CHECK(r.exact == 0);
  CHECK(r.lower <= r.upper);

  std::vector<ulam_shortest_result> table(32);
  CHECK(ulam_shortest_chain_table(32, 0, 2, table.data()) == ULAM_OK);
  CHECK(table[14].lower == 5);
}

TEST_CASE("embedding and reports") {
  ulam_sequence *seq = nullptr;
  REQUIRE(ulam_sequence_first(15, &seq) == ULAM_OK);
  ulam_chain *chain = nullptr;
  REQUIRE(ulam_embed(ulam_sequence_terms(seq), ulam_sequence_size(seq), &chain) == ULAM_OK);
  CHECK(ulam_chain_terms(chain)[ulam_chain_size(chain) - 1] == 47);
  ulam_chain_free(chain);

  ulam_majorant_record rec{};
  CHECK(ulam_covering_report(ulam_sequence_terms(seq), 5, 6, &rec) == ULAM_OK);
  CHECK(rec.c_num == 5);
  CHECK(rec.c_den == 4);
  CHECK(rec.actual_num == 5);
  CHECK(rec.actual_den == 6);
  CHECK(rec.majorant_check == 1);
  CHECK(ulam_covering_report(ulam_sequence_terms(seq), 5, 5, &rec) == ULAM_ERR_DOMAIN);
  ulam_sequence_free(seq);

  const std::uint64_t not_ulam[] = {1, 2, 3, 5};
  CHECK(ulam_embed(not_ulam, 4, &chain) == ULAM_ERR_CONTRACT);

  const std::uint64_t cps[] = {1, 100, 1000};
  ulam_density_record d[3];
  CHECK(ulam_density_series(1000, cps, 3, d) == ULAM_OK);
  CHECK(d[1].count == 26);
  CHECK(d[1].ratio_num == 13);
  CHECK(d[1].ratio_den == 50);
  ulam_trend_summary t{};
  CHECK(ulam_convergence_diagnostic(d, 3, &t) == ULAM_OK);
  CHECK(ulam_convergence_diagnostic(d, 2, &t) == ULAM_ERR_CONTRACT);
  CHECK(ulam_density_series(1000, cps, 0, d) == ULAM_ERR_CONTRACT);
}
