#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"
#include "weylsig/weyl.hpp"

using namespace weylsig;

TEST_CASE("simple reflections on weights") {
  const auto a1 = cartan_matrix({Family::A, 1});
  CHECK(reflect(Weight({1}), 1, a1) == Weight({-1}));

  const auto a2 = cartan_matrix({Family::A, 2});
  CHECK(reflect(Weight({1, 1}), 1, a2) == Weight({-1, 2}));
  CHECK(reflect(Weight({1, 1}), 2, a2) == Weight({2, -1}));

  CHECK_THROWS_AS(reflect(Weight({1, 1}), 0, a2), std::invalid_argument);
  CHECK_THROWS_AS(reflect(Weight({1, 1}), 3, a2), std::invalid_argument);
  CHECK_THROWS_AS(reflect(Weight({1}), 1, a2), std::invalid_argument);
}

TEST_CASE("reflection is an involution") {
  std::mt19937_64 rng(7);
  for (const char* name : {"A2", "B3", "G2", "F4", "E8"}) {
    const auto cm = cartan_matrix(AlgebraId::parse(name));
    std::uniform_int_distribution<int> pick(1, cm.rank);
    for (int trial = 0; trial < 300; ++trial) {
      const Weight w = oracles::random_weight(cm.rank, rng);
      const int i = pick(rng);
      CHECK(reflect(reflect(w, i, cm), i, cm) == w);
    }
  }
}

TEST_CASE("A2 braid relation") {
  const auto cm = cartan_matrix({Family::A, 2});
  std::mt19937_64 rng(11);
  const WeylWord w121({std::vector<int>{1, 2, 1}});
  const WeylWord w212({std::vector<int>{2, 1, 2}});
  for (int trial = 0; trial < 200; ++trial) {
    const Weight w = oracles::random_weight(2, rng);
    CHECK(apply_word(w121, w, cm) == apply_word(w212, w, cm));
  }
}

TEST_CASE("word application composes rightmost-first") {
  const auto a2 = cartan_matrix({Family::A, 2});
  const Weight rho2({1, 1});
  CHECK(apply_word(WeylWord{}, rho2, a2) == rho2);
  // sigma_1(sigma_2(rho)) = sigma_1((2,-1)) = (-2,1)
  CHECK(apply_word(WeylWord({std::vector<int>{1, 2}}), rho2, a2) == Weight({-2, 1}));
  CHECK(apply_word(WeylWord({std::vector<int>{2, 1}}), rho2, a2) == Weight({1, -2}));
}

TEST_CASE("word parsing") {
  CHECK(WeylWord::parse("4,3,2").letters == std::vector<int>{4, 3, 2});
  CHECK(WeylWord::parse("").empty());
  CHECK(WeylWord::parse("7").letters == std::vector<int>{7});
  CHECK_THROWS_AS(WeylWord::parse("4,,3"), std::invalid_argument);
  CHECK_THROWS_AS(WeylWord::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(WeylWord::parse("-1"), std::invalid_argument);
  CHECK_THROWS_AS(WeylWord::parse("a"), std::invalid_argument);
  CHECK(WeylWord::parse("1,2,3").reversed().letters == std::vector<int>{3, 2, 1});
}

TEST_CASE("step roots tag non-root differences") {
  const auto rs = generate_positive_roots({Family::A, 2});
  // non-reduced word 1,1: second step undoes the first
  const auto steps = step_roots(WeylWord({std::vector<int>{1, 1}}), rho({Family::A, 2}), rs);
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].is_root);
  CHECK(steps[0].index == 1);
  CHECK(steps[0].delta == RootVector({1, 0}));
  CHECK(!steps[1].is_root);
  CHECK(steps[1].index == 0);
  CHECK(steps[1].delta == RootVector({-1, 0}));
}

TEST_CASE("step differences telescope to w - word(w)") {
  std::mt19937_64 rng(23);
  for (const char* name : {"A2", "B3", "D4", "E8"}) {
    const auto id = AlgebraId::parse(name);
    const auto rs = generate_positive_roots(id);
    std::uniform_int_distribution<std::size_t> len(0, 40);
    for (int trial = 0; trial < 50; ++trial) {
      const Weight w = oracles::random_weight(rs.rank(), rng);
      const WeylWord word = oracles::random_word(rs.rank(), len(rng), rng);
      const auto steps = step_roots(word, w, rs);
      REQUIRE(steps.size() == word.size());
      std::vector<Int> total(static_cast<std::size_t>(rs.rank()), 0);
      for (const auto& s : steps)
        for (std::size_t t = 0; t < total.size(); ++t) total[t] += s.delta.coeffs[t];
      const auto expect = root_coords_of_weight(w - apply_word(word, w, rs.cartan), rs.cartan);
      for (std::size_t t = 0; t < total.size(); ++t) CHECK(Fraction(total[t]) == expect[t]);
    }
  }
}

TEST_CASE("step deltas of reduced words on strictly dominant weights are distinct") {
  std::mt19937_64 rng(29);
  const auto rs = generate_positive_roots({Family::D, 4});
  for (int trial = 0; trial < 100; ++trial) {
    const WeylWord word = oracles::random_reduced_word(rs.cartan, 1 + static_cast<std::size_t>(trial % 10), rng);
    Weight lambda = oracles::random_weight(4, rng, 1, 3);
    const auto steps = step_roots(word, lambda, rs);
    std::set<std::vector<Int>> seen;
    for (const auto& s : steps) CHECK(seen.insert(s.delta.coeffs).second);
  }
}

TEST_CASE("dominance reduction") {
  const auto a2 = cartan_matrix({Family::A, 2});

  SECTION("already dominant") {
    const auto res = dominance_reduce(Weight({1, 1}), a2);
    CHECK(res.length == 0);
    CHECK(res.word.empty());
    CHECK(res.dominant == Weight({1, 1}));
  }

  SECTION("one step") {
    const auto res = dominance_reduce(Weight({-1, 2}), a2);
    CHECK(res.length == 1);
    CHECK(res.dominant == Weight({1, 1}));
    CHECK(res.word.letters == std::vector<int>{1});
  }

  SECTION("word maps input to dominant; reverse maps back") {
    std::mt19937_64 rng(31);
    for (const char* name : {"A3", "C3", "G2", "E7"}) {
      const auto cm = cartan_matrix(AlgebraId::parse(name));
      for (int trial = 0; trial < 100; ++trial) {
        const Weight w = oracles::random_weight(cm.rank, rng);
        const auto res = dominance_reduce(w, cm);
        CHECK(res.dominant.dominant());
        CHECK(static_cast<Int>(res.word.size()) == res.length);
        CHECK(apply_word(res.word, w, cm) == res.dominant);
        CHECK(apply_word(res.word.reversed(), res.dominant, cm) == w);
      }
    }
  }
}

TEST_CASE("orbit of rho in A2") {
  const auto os = orbit(rho({Family::A, 2}), cartan_matrix({Family::A, 2}));
  REQUIRE(os.size() == 6);
  CHECK(os.seed_regular);
  std::multiset<Int> lengths;
  for (const auto& e : os.elements) lengths.insert(e.length);
  CHECK(lengths == std::multiset<Int>{0, 1, 1, 2, 2, 3});
  CHECK(os.length_histogram() == std::vector<Int>{1, 2, 2, 1});
  // exactly one dominant element
  int dominant = 0;
  for (const auto& e : os.elements) dominant += e.weight.dominant() ? 1 : 0;
  CHECK(dominant == 1);
}

TEST_CASE("orbit of rho in B2: max length is the positive root count") {
  const auto rs = generate_positive_roots({Family::B, 2});
  const auto os = orbit(rho({Family::B, 2}), rs.cartan);
  CHECK(os.size() == 8);
  CHECK(os.max_length() == rs.count());
  CHECK(os.length_histogram() == std::vector<Int>{1, 2, 2, 2, 1});
}

TEST_CASE("orbit of a non-regular seed") {
  const auto os = orbit(Weight({1, 0}), cartan_matrix({Family::A, 2}));
  CHECK(os.size() == 3);
  CHECK(!os.seed_regular);
  std::set<std::vector<Int>> weights;
  for (const auto& e : os.elements) weights.insert(e.weight.labels);
  CHECK(weights == std::set<std::vector<Int>>{{1, 0}, {-1, 1}, {0, -1}});
}

TEST_CASE("orbit accepts non-dominant seeds via the dominant representative") {
  const auto cm = cartan_matrix({Family::A, 2});
  const auto from_rho = orbit(Weight({1, 1}), cm);
  const auto from_low = orbit(Weight({-1, -1}), cm);
  CHECK(from_rho.dominant == from_low.dominant);
  CHECK(from_rho.size() == from_low.size());
}

TEST_CASE("orbit cap") {
  CHECK_THROWS_MATCHES(orbit(rho({Family::E, 6}), cartan_matrix({Family::E, 6}), 100),
                       std::runtime_error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("orbit too large")));
}

TEST_CASE("orbit sizes match the Weyl order for small groups") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    const auto id = AlgebraId::parse(name);
    const auto rs = generate_positive_roots(id);
    const auto os = orbit(rho(id), rs.cartan);
    INFO(name);
    CHECK(BigInt(os.size()) == weyl_order(rs));
    CHECK(os.max_length() == rs.count());
  }
}

TEST_CASE("random reduced words have full dominance length") {
  std::mt19937_64 rng(37);
  const auto cm = cartan_matrix({Family::E, 8});
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t len = 1 + static_cast<std::size_t>(trial % 40);
    const WeylWord word = oracles::random_reduced_word(cm, len, rng);
    REQUIRE(word.size() == len);
    const Weight mu = apply_word(word, rho({Family::E, 8}), cm);
    CHECK(dominance_reduce(mu, cm).length == static_cast<Int>(len));
  }
}
