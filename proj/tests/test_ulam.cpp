#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ulamlab/errors.hpp"
#include "ulamlab/ulam.hpp"

using namespace ulamlab;

namespace {
const std::vector<Term> kUlamTo100 = {1,  2,  3,  4,  6,  8,  11, 13, 16, 18, 26, 28, 36,
                                      38, 47, 48, 53, 57, 62, 69, 72, 77, 82, 87, 97, 99};
}

TEST_CASE("count_representations") {
  CHECK(count_representations(std::vector<Term>{1, 2}, 3).count == 1);
  CHECK(count_representations(std::vector<Term>{1, 2, 3, 4}, 5).count == 2);

  const std::vector<Term> prefix{1, 2, 3, 4, 6};
  CHECK(oracle::count_pairs(prefix, 7) == 2);
  CHECK(count_representations(prefix, 7).count == 2);
  CHECK(count_representations(prefix, 7).candidate == 7);

  SUBCASE("distinct summands only") { CHECK(count_representations(std::vector<Term>{1, 2}, 2).count == 0); }

  SUBCASE("contract errors") {
    CHECK_THROWS_AS(count_representations(std::vector<Term>{2, 1}, 3), ContractError);
    CHECK_THROWS_AS(count_representations(std::vector<Term>{1, 1, 2}, 3), ContractError);
    CHECK_THROWS_AS(count_representations(std::vector<Term>{0, 1}, 3), ContractError);
    CHECK_THROWS_AS(count_representations(std::vector<Term>{1, 2}, 1), ContractError);
  }

  SUBCASE("agrees with exhaustive enumeration on random sets") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Term> set;
      for (Term v = 1; v < 80; ++v)
        if (rng() % 3 == 0)
          set.push_back(v);
      const Term x = 2 + rng() % 160;
      CHECK(count_representations(set, x).count == oracle::count_pairs(set, x));
    }
  }
}

TEST_CASE("next_ulam") {
  CHECK(next_ulam({{1, 2}, 2}) == 3);
  CHECK(next_ulam({{1, 2, 3, 4}, 4}) == 6);
  CHECK(next_ulam({{1, 2, 3, 4, 6}, 6}) == 8);
  CHECK_THROWS_AS(next_ulam({{1}, 1}), ContractError);
}

TEST_CASE("generate_up_to") {
  CHECK(generate_up_to(6).terms == std::vector<Term>{1, 2, 3, 4, 6});
  CHECK(generate_up_to(2).terms == std::vector<Term>{1, 2});
  CHECK(generate_up_to(1).terms == std::vector<Term>{1});
  CHECK_THROWS_AS(generate_up_to(0), ContractError);

  const auto seq = generate_up_to(100);
  CHECK(seq.limit == 100);
  CHECK(oracle::ulam_by_tally(100) == kUlamTo100);
  CHECK(seq.terms == kUlamTo100);
}

TEST_CASE("generate_fast matches the reference") {
  CHECK(generate_fast(6).terms == std::vector<Term>{1, 2, 3, 4, 6});
  for (Term limit : {1, 2, 3, 63, 64, 65, 100, 127, 128, 129, 1000, 4096, 20000})
    CHECK_MESSAGE(generate_fast(limit) == generate_up_to(limit), "limit=" << limit);
  CHECK(generate_fast(30000).terms == oracle::ulam_by_tally(30000));
}

TEST_CASE("streaming generator grows its window") {
  FastUlamGenerator gen(64);
  std::vector<Term> streamed;
  for (int i = 0; i < 2000; ++i)
    streamed.push_back(gen.next());
  CHECK(gen.capacity() > 64);
  const auto reference = generate_up_to(streamed.back());
  CHECK(streamed == reference.terms);
  CHECK(first_ulam_terms(26) == kUlamTo100);
}

TEST_CASE("advance respects the bound and resumes") {
  FastUlamGenerator gen(10);
  std::vector<Term> got;
  while (auto t = gen.advance(50))
    got.push_back(*t);
  while (auto t = gen.advance(100))
    got.push_back(*t);
  CHECK(got == kUlamTo100);
}

TEST_CASE("prefix stability") {
  const auto big = generate_up_to(3000).terms;
  for (Term l : {5, 50, 500, 2999}) {
    const auto small = generate_up_to(l).terms;
    REQUIRE(small.size() <= big.size());
    CHECK(std::equal(small.begin(), small.end(), big.begin()));
  }
}

TEST_CASE("check_consecutive_sum_lemma") {
  CHECK(check_consecutive_sum_lemma(std::vector<Term>{1, 2, 3, 4, 6}).empty());
  CHECK(check_consecutive_sum_lemma(std::vector<Term>{1, 2, 3, 4, 7}) == std::vector<std::size_t>{5});
  CHECK(check_consecutive_sum_lemma(first_ulam_terms(100)).empty());
  // 3 = 1 + 2 sits at m = 3, outside the tested range.
  CHECK(check_consecutive_sum_lemma(std::vector<Term>{1, 2, 3}).empty());
}

TEST_CASE("gap_statistics") {
  CHECK(gap_statistics(std::vector<Term>{1, 2, 3, 4, 6}).max_gap == 2);
  CHECK(gap_statistics(std::vector<Term>{1, 2}).max_gap == 1);
  const auto stats = gap_statistics(kUlamTo100);
  CHECK(stats.max_gap == 10); // 87 -> 97
  std::uint64_t total = 0;
  for (const auto &[gap, n] : stats.histogram)
    total += n;
  CHECK(total == kUlamTo100.size() - 1);
  CHECK(stats.histogram.at(2) == 7);
  CHECK_THROWS_AS(gap_statistics(std::vector<Term>{1}), ContractError);
}

TEST_CASE("verify_sequence") {
  SUBCASE("generated sequences pass") {
    CHECK(verify_sequence(generate_fast(5000)).ok());
    CHECK(verify_sequence(generate_up_to(1)).ok());
  }
  SUBCASE("a skipped term is a completeness failure") {
    auto seq = generate_up_to(100);
    seq.terms.erase(std::find(seq.terms.begin(), seq.terms.end(), 47));
    const auto r = verify_sequence(seq);
    CHECK_FALSE(r.ok());
    CHECK(r.completeness_failures.front() == 47);
  }
  SUBCASE("an extra term is a uniqueness failure") {
    UlamSequence seq{{1, 2, 3, 4, 5}, 5};
    const auto r = verify_sequence(seq);
    CHECK(r.uniqueness_failures == std::vector<Term>{5});
  }
  SUBCASE("structure") {
    CHECK(verify_sequence({{2, 3}, 3}).structure_failures.size() >= 2);
    CHECK(verify_sequence({{1, 2, 200}, 100}).structure_failures == std::vector<std::size_t>{3});
  }
}
