#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "weylsig/algebra.hpp"
#include "weylsig/e8_example.hpp"

using namespace weylsig;

namespace {

const std::vector<AlgebraId> kSample{
    {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 5}, {Family::B, 2},
    {Family::B, 3}, {Family::C, 2}, {Family::C, 3}, {Family::D, 3}, {Family::D, 4},
    {Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::F, 4}, {Family::G, 2}};

}  // namespace

TEST_CASE("algebra id parsing and rank constraints") {
  CHECK(AlgebraId::parse("E8") == AlgebraId{Family::E, 8});
  CHECK(AlgebraId::parse("a2") == AlgebraId{Family::A, 2});
  CHECK(AlgebraId::parse("D12").rank == 12);
  CHECK(AlgebraId::parse("B2").name() == "B2");

  CHECK_THROWS_AS(AlgebraId::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraId::parse("E"), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraId::parse("H4"), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraId::parse("A2x"), std::invalid_argument);

  for (const auto& bad : {"A0", "B1", "C1", "D2", "E5", "E9", "F3", "F5", "G3"}) {
    CHECK_THROWS_MATCHES(cartan_matrix(AlgebraId::parse(bad)), std::invalid_argument,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("unsupported algebra")));
  }
}

TEST_CASE("cartan matrices of small algebras") {
  CHECK(cartan_matrix({Family::A, 1}).entries == std::vector<Int>{2});
  CHECK(cartan_matrix({Family::A, 2}).entries == std::vector<Int>{2, -1, -1, 2});
  CHECK(cartan_matrix({Family::G, 2}).entries == std::vector<Int>{2, -1, -3, 2});
  // B: last simple root short (A[n-1][n] = -2); C is the transpose
  const auto b3 = cartan_matrix({Family::B, 3});
  const auto c3 = cartan_matrix({Family::C, 3});
  CHECK(b3.entry(2, 3) == -2);
  CHECK(b3.entry(3, 2) == -1);
  CHECK(c3.entry(2, 3) == -1);
  CHECK(c3.entry(3, 2) == -2);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(b3.entry(i, j) == c3.entry(j, i));

  const auto f4 = cartan_matrix({Family::F, 4});
  CHECK(f4.entries == std::vector<Int>{2, -1, 0, 0, -1, 2, -2, 0, 0, -1, 2, -1, 0, 0, -1, 2});
}

TEST_CASE("E8 cartan matrix: chain 1..7 with node 8 on node 5") {
  const auto cm = cartan_matrix({Family::E, 8});
  const std::set<std::pair<int, int>> edges{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}};
  for (int i = 1; i <= 8; ++i) {
    for (int j = i + 1; j <= 8; ++j) {
      const bool linked = edges.count({i, j}) > 0;
      CHECK(cm.entry(i, j) == (linked ? -1 : 0));
      CHECK(cm.entry(j, i) == (linked ? -1 : 0));
    }
  }
}

// The labeling above is forced: the support of every composite root must be
// connected in the Dynkin diagram, and the fixture expansions pin the edges.
TEST_CASE("E8 labeling oracle: all 26 expansion supports are connected") {
  const auto cm = cartan_matrix({Family::E, 8});
  for (const auto& [index, beta] : e8_expansions()) {
    std::vector<int> support;
    for (int j = 1; j <= 8; ++j)
      if (beta.coeff(j) > 0) support.push_back(j);
    REQUIRE(!support.empty());
    // flood fill over diagram edges restricted to the support
    std::set<int> reached{support.front()};
    bool grew = true;
    while (grew) {
      grew = false;
      for (int u : support) {
        if (reached.count(u)) continue;
        for (int v : reached) {
          if (cm.entry(u, v) != 0) {
            reached.insert(u);
            grew = true;
            break;
          }
        }
      }
    }
    INFO("root " << index << " = (" << beta.str() << ")");
    CHECK(reached.size() == support.size());
  }
}

TEST_CASE("cartan invariants: zero-pattern symmetry and nonzero determinant") {
  for (const auto& id : kSample) {
    const auto cm = cartan_matrix(id);
    INFO(id.name());
    for (int i = 1; i <= cm.rank; ++i) {
      CHECK(cm.entry(i, i) == 2);
      for (int j = 1; j <= cm.rank; ++j) {
        if (i == j) continue;
        CHECK(cm.entry(i, j) <= 0);
        CHECK((cm.entry(i, j) == 0) == (cm.entry(j, i) == 0));
      }
    }
    CHECK(cm.determinant() != 0);
  }
}

TEST_CASE("cartan determinants match the classical values") {
  auto det = [](const char* name) { return cartan_matrix(AlgebraId::parse(name)).determinant(); };
  CHECK(det("A1") == 2);
  CHECK(det("A2") == 3);
  CHECK(det("A7") == 8);  // A_n: n+1
  CHECK(det("B3") == 2);
  CHECK(det("C4") == 2);
  CHECK(det("D4") == 4);
  CHECK(det("E6") == 3);
  CHECK(det("E7") == 2);
  CHECK(det("E8") == 1);
  CHECK(det("F4") == 1);
  CHECK(det("G2") == 1);
}

TEST_CASE("weight coordinates of roots") {
  const auto a2 = cartan_matrix({Family::A, 2});
  CHECK(weight_coords_of_root(RootVector({1, 0}), a2) == Weight({2, -1}));
  CHECK(weight_coords_of_root(RootVector({1, 1}), a2) == Weight({1, 1}));

  // hand-computed labels of the E8 root with coefficients (1,2,3,4,5,3,2,3)
  const auto e8 = cartan_matrix({Family::E, 8});
  const RootVector big({1, 2, 3, 4, 5, 3, 2, 3});
  CHECK(weight_coords_of_root(big, e8) == Weight({0, 0, 0, 0, 0, -1, 1, 1}));

  CHECK_THROWS_AS(weight_coords_of_root(RootVector({1, 0, 0}), a2), std::invalid_argument);
}

TEST_CASE("root coordinates of weights are exact rationals") {
  const auto a2 = cartan_matrix({Family::A, 2});
  // rho solves the 2x2 system exactly: (1,1) -> (1,1)
  CHECK(root_coords_of_weight(Weight({1, 1}), a2) == std::vector<Fraction>{1, 1});
  CHECK(root_coords_of_weight(Weight({2, -1}), a2) == std::vector<Fraction>{1, 0});
  CHECK(root_coords_of_weight(Weight({4}), cartan_matrix({Family::A, 1})) ==
        std::vector<Fraction>{2});

  // a fundamental weight has fractional root coordinates: lambda_1 = (2a+b)/3
  const auto coords = root_coords_of_weight(Weight({1, 0}), a2);
  CHECK(coords == std::vector<Fraction>{Fraction(2, 3), Fraction(1, 3)});
  for (const auto& q : coords) {
    CHECK(boost::multiprecision::denominator(q) > 0);
    CHECK(boost::multiprecision::gcd(boost::multiprecision::numerator(q),
                                     boost::multiprecision::denominator(q)) == 1);
  }
}

TEST_CASE("basis changes are mutually inverse on all positive roots") {
  for (const auto& id : kSample) {
    const auto rs = generate_positive_roots(id);
    INFO(id.name());
    for (const auto& beta : rs.positives) {
      const auto labels = weight_coords_of_root(beta, rs.cartan);
      const auto back = root_coords_of_weight(labels, rs.cartan);
      REQUIRE(back.size() == beta.coeffs.size());
      for (std::size_t t = 0; t < back.size(); ++t) CHECK(back[t] == beta.coeffs[t]);
    }
  }
}

TEST_CASE("weight_coords_of_root is linear") {
  std::mt19937_64 rng(20260810);
  for (const auto& id : {AlgebraId{Family::A, 3}, AlgebraId{Family::B, 3}, AlgebraId{Family::E, 6}}) {
    const auto cm = cartan_matrix(id);
    std::uniform_int_distribution<Int> dist(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Int> x(static_cast<std::size_t>(id.rank)), y(static_cast<std::size_t>(id.rank));
      for (auto& v : x) v = dist(rng);
      for (auto& v : y) v = dist(rng);
      const RootVector rx(x), ry(y);
      CHECK(weight_coords_of_root(rx + ry, cm) ==
            weight_coords_of_root(rx, cm) + weight_coords_of_root(ry, cm));
    }
  }
}

TEST_CASE("rho is the all-ones weight") {
  CHECK(rho({Family::A, 1}) == Weight({1}));
  CHECK(rho({Family::E, 8}) == Weight({1, 1, 1, 1, 1, 1, 1, 1}));
  for (const auto& id : kSample) CHECK(rho(id).strictly_dominant());
}

TEST_CASE("weight parsing") {
  CHECK(parse_weight("rho", 3) == Weight({1, 1, 1}));
  CHECK(parse_weight("1,-2,0", 3) == Weight({1, -2, 0}));
  CHECK(parse_weight(" 2 , 3 ", 2) == Weight({2, 3}));
  CHECK_THROWS_AS(parse_weight("1,x", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("1,", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("1,2,3", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("", 1), std::invalid_argument);
}

TEST_CASE("dominance predicates") {
  CHECK(Weight({0, 2}).dominant());
  CHECK(!Weight({0, 2}).strictly_dominant());
  CHECK(Weight({1, 2}).strictly_dominant());
  CHECK(!Weight({-1, 2}).dominant());
}
