#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ulamlab/chain.hpp"
#include "ulamlab/errors.hpp"

using namespace ulamlab;

namespace {
AdditionChain chain(std::vector<Term> t) { return AdditionChain(std::move(t)); }
} // namespace

TEST_CASE("validate") {
  CHECK(is_valid(chain({1, 2, 4, 8}), ValidityMode::Star));
  CHECK(is_valid(chain({1, 2, 3, 4, 6, 8, 11}), ValidityMode::Star));
  CHECK(is_valid(chain({1}), ValidityMode::General));

  const auto v = validate(chain({1, 2, 5}), ValidityMode::General);
  REQUIRE(v.size() == 1);
  CHECK(v[0].index == 3);
  CHECK(v[0].kind == ViolationKind::NotASum);

  SUBCASE("general but not star") {
    // 8 = 4 + 4, but the step 8 - 5 = 3 is not in the chain.
    const auto c = chain({1, 2, 4, 5, 8});
    CHECK(is_valid(c, ValidityMode::General));
    const auto s = validate(c, ValidityMode::Star);
    REQUIRE(s.size() == 1);
    CHECK(s[0].index == 5);
    CHECK(s[0].kind == ViolationKind::NotStarStep);
  }

  SUBCASE("structural violations") {
    CHECK(validate(AdditionChain{}, ValidityMode::General).front().kind == ViolationKind::Empty);
    CHECK(validate(chain({2, 4}), ValidityMode::General).front().kind == ViolationKind::BadFirstTerm);
    const auto dup = validate(chain({1, 2, 2, 4}), ValidityMode::General);
    REQUIRE(!dup.empty());
    CHECK(dup.front().kind == ViolationKind::NotIncreasing);
    CHECK(dup.front().index == 3);
    const auto down = validate(chain({1, 2, 4, 3, 7}), ValidityMode::General);
    REQUIRE(down.size() == 1);
    CHECK(down.front().index == 4);
  }

  SUBCASE("star implies general and agrees with the oracle on random chains") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
      const auto terms = oracle::random_chain(1 + rng() % 5000, rng);
      const auto c = chain(terms);
      CHECK(is_valid(c, ValidityMode::General) == oracle::is_addition_chain(terms));
      if (is_valid(c, ValidityMode::Star))
        CHECK(is_valid(c, ValidityMode::General));
    }
  }
}

TEST_CASE("decompose") {
  using G = std::vector<Generator>;
  CHECK(decompose(chain({1, 2, 4, 8})).pairs == G{{1, 1}, {2, 2}, {4, 4}});
  CHECK(decompose(chain({1, 2, 3})).pairs == G{{1, 1}, {2, 1}});
  CHECK(decompose(chain({1, 2, 3, 4, 6})).pairs == G{{1, 1}, {2, 1}, {3, 1}, {4, 2}});
  CHECK_THROWS_AS(decompose(chain({1, 2, 5})), ContractError);

  const auto d = decompose(chain({1, 2, 3, 6, 12, 15}));
  for (std::size_t i = 0; i + 1 < d.pairs.size(); ++i)
    CHECK(d.pairs[i + 1].determiner == d.pairs[i].determiner + d.pairs[i].regulator);
}

TEST_CASE("regulator_sum telescopes") {
  CHECK(regulator_sum(chain({1, 2, 4, 8})) == 7);
  CHECK(regulator_sum(chain({1, 2, 3})) == 2);
  CHECK(regulator_sum(chain({1})) == 0);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto c = chain(oracle::random_chain(1 + rng() % 10000, rng));
    CHECK(regulator_sum(c) == c.target() - 1);
  }
}

TEST_CASE("chain_constant") {
  const auto a = chain_constant(chain({1, 2, 4, 8}));
  CHECK(a.c == Rational(7, 3));
  CHECK(a.inf_r == 1);
  CHECK(a.sup_r == 4);
  CHECK(a.delta == 3);

  const auto b = chain_constant(chain({1, 2, 3, 4}));
  CHECK(b.c == Rational(1));
  CHECK(b.inf_r == 1);
  CHECK(b.sup_r == 1);

  const auto c = chain_constant(chain({1, 2, 3, 4, 6}));
  CHECK(c.c == Rational(5, 4));
  CHECK(c.inf_r == 1);
  CHECK(c.sup_r == 2);

  CHECK_THROWS_AS(chain_constant(chain({1})), ContractError);
  CHECK_THROWS_AS(chain_constant(chain({1, 3})), ContractError);

  SUBCASE("sandwich on random chains") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
      const auto cc = chain_constant(chain(oracle::random_chain(2 + rng() % 10000, rng)));
      CHECK(Rational(static_cast<std::int64_t>(cc.inf_r)) <= cc.c);
      CHECK(cc.c <= Rational(static_cast<std::int64_t>(cc.sup_r)));
      CHECK(cc.c * static_cast<std::int64_t>(cc.delta) == Rational(static_cast<std::int64_t>(cc.n - 1)));
    }
  }
}

TEST_CASE("hamming weight and bounds") {
  CHECK(hamming_weight(15) == 4);
  CHECK(hamming_weight(16) == 1);
  CHECK(hamming_weight(6) == 2);

  CHECK(schonhage_lower_bound(1) == doctest::Approx(-2.13));
  CHECK(schonhage_lower_bound(8) == doctest::Approx(0.87));
  CHECK(schonhage_lower_bound(15) == doctest::Approx(std::log2(15.0) + 2.0 - 2.13));
  CHECK(schonhage_lower_bound(15) == doctest::Approx(3.7769).epsilon(1e-4));
  CHECK_THROWS_AS(schonhage_lower_bound(0), DomainError);

  CHECK(upper_bound_indicative(4) == doctest::Approx(4.0));
  CHECK(upper_bound_indicative(16) == doctest::Approx(6.0));
  CHECK(upper_bound_indicative(1024) == doctest::Approx(10.0 + 10.0 / std::log2(10.0)));
  CHECK(upper_bound_indicative(1024) == doctest::Approx(13.01).epsilon(1e-3));
  CHECK_THROWS_AS(upper_bound_indicative(2), DomainError);

  CHECK(constant_floor(4) == doctest::Approx(0.75));
  CHECK(constant_floor(16) == doctest::Approx(2.5));
  CHECK_THROWS_AS(constant_floor(2), DomainError);
}

TEST_CASE("binary method chain") {
  for (Term n = 1; n <= 300; ++n) {
    const auto c = binary_method_chain(n);
    CHECK(c.target() == n);
    CHECK(c.length() == binary_method_length(n));
    CHECK(is_valid(c, ValidityMode::Star));
  }
}

TEST_CASE("embed_ulam") {
  CHECK(embed_ulam(std::vector<Term>{1, 2, 3}).terms() == std::vector<Term>{1, 2, 3});
  CHECK(embed_ulam(std::vector<Term>{1, 2, 3, 4, 6, 8, 11}).terms() == std::vector<Term>{1, 2, 3, 4, 6, 8, 11});

  const auto first15 = first_ulam_terms(15);
  const auto c = embed_ulam(first15);
  CHECK(c.target() == 47);
  CHECK(is_valid(c, ValidityMode::Star));
  for (Term u : first15)
    CHECK(c.contains(u));
  CHECK(regulator_sum(embed_ulam(first_ulam_terms(10))) == first_ulam_terms(10).back() - 1);

  CHECK_THROWS_AS(embed_ulam(std::vector<Term>{1, 2, 3, 5}), ContractError);
  CHECK_THROWS_AS(embed_ulam(std::vector<Term>{1, 2, 4}), ContractError);
  CHECK_THROWS_AS(embed_ulam(std::vector<Term>{1}), ContractError);
}

TEST_CASE("covering_report") {
  const auto r5 = covering_report(first_ulam_terms(5), 6);
  CHECK(r5.n == 5);
  CHECK(r5.u_n == 6);
  CHECK(r5.delta == 4);
  CHECK(r5.c == Rational(5, 4));
  CHECK(r5.actual == Rational(5, 6));
  CHECK(r5.bound == Rational(4, 5) + Rational(1, 6));
  CHECK(r5.count_check);
  CHECK(r5.majorant_check);

  const auto r2 = covering_report(std::vector<Term>{1, 2}, 2);
  CHECK(r2.n == 2);
  CHECK(r2.delta + 1 == 2);
  CHECK(r2.count_check);
  CHECK(r2.majorant_check);
  CHECK_FALSE(r2.floor.has_value());

  const auto terms = first_ulam_terms(100);
  const auto r100 = covering_report(terms, terms.back());
  CHECK(r100.count_check);
  CHECK(r100.majorant_check);

  CHECK_THROWS_AS(covering_report(first_ulam_terms(5), 5), DomainError);

  SUBCASE("larger l keeps the inequalities") {
    for (Term l : {6, 7, 60, 6000}) {
      const auto r = covering_report(first_ulam_terms(5), l);
      CHECK(r.majorant_check);
    }
  }
}
