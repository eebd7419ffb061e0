// The 0/1 decomposition of lambda+ - mu over the positive root system:
// gamma extraction, the pruned depth-first subset search, per-weight
// signatures, orbit-wide claim verification, and the Poincare polynomial
// cross-check.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "weylsig/weyl.hpp"

namespace weylsig {

/// gamma = lambda - mu in simple-root coordinates. Defined only when the
/// difference lies in the positive root lattice (all coordinates nonnegative
/// integers); anything else throws.
inline RootVector gamma(const Weight& lambda, const Weight& mu, const CartanMatrix& cm) {
  const Weight diff = lambda - mu;
  const auto coords = root_coords_of_weight(diff, cm);
  RootVector g;
  g.coeffs.reserve(coords.size());
  for (const Fraction& f : coords) {
    if (boost::multiprecision::denominator(f) != 1 || f < 0)
      throw std::domain_error("lambda - mu = (" + diff.str() + ") is not in the positive root lattice");
    g.coeffs.push_back(boost::multiprecision::numerator(f).convert_to<Int>());
  }
  return g;
}

/// A subset of positive roots (by canonical index, sorted ascending) summing
/// to some gamma; k is the subset size and epsilon = (-1)^k.
struct Decomposition {
  std::vector<int> subset;

  int k() const { return static_cast<int>(subset.size()); }
  int epsilon() const { return k() % 2 == 0 ? 1 : -1; }
};

enum class DecomposeMode { First, All };

struct DecomposeResult {
  std::vector<Decomposition> solutions;
  bool capped{false};  // mode All only: more solutions existed than the cap
};

/// Depth-first search for subsets of positive roots summing to gamma with
/// coefficients restricted to {0,1}. Roots are visited in descending height;
/// a branch is pruned when the residual goes negative or when the remaining
/// suffix sum cannot cover it coordinate-wise.
inline DecomposeResult decompose(const RootVector& g, const RootSystem& rs, DecomposeMode mode,
                                 int cap = 64) {
  if (g.rank() != rs.rank()) throw std::invalid_argument("gamma rank mismatch");
  if (!g.nonnegative()) throw std::invalid_argument("gamma must be nonnegative");
  const int n = rs.rank();
  const int m = rs.count();

  // roots in descending canonical order = descending height (tallest first)
  // suffix[t][j] = sum of coefficient j over roots t..m-1 of that order
  std::vector<std::vector<Int>> suffix(static_cast<std::size_t>(m) + 1,
                                       std::vector<Int>(static_cast<std::size_t>(n), 0));
  for (int t = m - 1; t >= 0; --t) {
    const RootVector& beta = rs.positives[static_cast<std::size_t>(m - 1 - t)];
    for (int j = 0; j < n; ++j)
      suffix[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] =
          suffix[static_cast<std::size_t>(t) + 1][static_cast<std::size_t>(j)] +
          beta.coeffs[static_cast<std::size_t>(j)];
  }

  DecomposeResult result;
  std::vector<int> chosen;
  std::vector<Int> residual = g.coeffs;

  auto record = [&]() -> bool {  // returns true when the search should stop
    if (mode == DecomposeMode::All && static_cast<int>(result.solutions.size()) == cap) {
      result.capped = true;
      return true;
    }
    Decomposition d;
    d.subset = chosen;
    std::sort(d.subset.begin(), d.subset.end());
    result.solutions.push_back(std::move(d));
    return mode == DecomposeMode::First;
  };

  auto dfs = [&](auto&& self, int t) -> bool {
    if (std::all_of(residual.begin(), residual.end(), [](Int x) { return x == 0; })) return record();
    if (t == m) return false;
    for (int j = 0; j < n; ++j) {
      if (residual[static_cast<std::size_t>(j)] > suffix[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)])
        return false;
    }
    const int index = m - t;  // canonical index of the root visited at depth t
    const RootVector& beta = rs.positives[static_cast<std::size_t>(index) - 1];
    bool fits = true;
    for (int j = 0; j < n; ++j) {
      if (residual[static_cast<std::size_t>(j)] < beta.coeffs[static_cast<std::size_t>(j)]) {
        fits = false;
        break;
      }
    }
    if (fits) {
      for (int j = 0; j < n; ++j) residual[static_cast<std::size_t>(j)] -= beta.coeffs[static_cast<std::size_t>(j)];
      chosen.push_back(index);
      if (self(self, t + 1)) return true;
      chosen.pop_back();
      for (int j = 0; j < n; ++j) residual[static_cast<std::size_t>(j)] += beta.coeffs[static_cast<std::size_t>(j)];
    }
    return self(self, t + 1);
  };
  dfs(dfs, 0);

  if (mode == DecomposeMode::First && result.solutions.empty())
    throw std::domain_error("no 0/1 decomposition of (" + g.str() + ") over the positive roots of " +
                            rs.algebra.name());
  return result;
}

/// Signature of mu relative to a strictly dominant lambda: the unique 0/1
/// decomposition of the corresponding gamma, giving k and epsilon = (-1)^k.
///
/// For lambda = rho the decomposition is taken of rho - mu directly. For any
/// other strictly dominant lambda the group element is recovered through the
/// dominance oracle and the decomposition is taken against rho, which is the
/// regime where the 0/1 property holds.
inline Decomposition signature_of_weight(const Weight& lambda, const Weight& mu, const RootSystem& rs) {
  if (!lambda.strictly_dominant())
    throw std::invalid_argument("lambda must be strictly dominant, got (" + lambda.str() + ")");
  const Weight rho_w = rho(rs.algebra);
  if (lambda == rho_w)
    return std::move(decompose(gamma(lambda, mu, rs.cartan), rs, DecomposeMode::First).solutions.front());
  const DominanceResult dr = dominance_reduce(mu, rs.cartan);
  if (dr.dominant != lambda)
    throw std::domain_error("mu = (" + mu.str() + ") is not in the Weyl orbit of (" + lambda.str() + ")");
  const Weight mu_rho = apply_word(dr.word.reversed(), rho_w, rs.cartan);
  return std::move(decompose(gamma(rho_w, mu_rho, rs.cartan), rs, DecomposeMode::First).solutions.front());
}

enum class VerifyStrategy { Exhaustive, DfsAll };

inline const char* strategy_name(VerifyStrategy s) {
  return s == VerifyStrategy::Exhaustive ? "exhaustive" : "dfs_all";
}

/// Counts 0/1 decompositions by scanning all 2^|Phi+| subsets. Independent of
/// the DFS path; requires |Phi+| <= 20.
inline DecomposeResult decompose_exhaustive(const RootVector& g, const RootSystem& rs, int cap = 64) {
  const int m = rs.count();
  if (m > 20) throw std::invalid_argument("exhaustive scan requires |Phi+| <= 20, " + rs.algebra.name() +
                                          " has " + std::to_string(m));
  const int n = rs.rank();
  DecomposeResult result;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<Int> sum(static_cast<std::size_t>(n), 0);
    for (int t = 0; t < m; ++t) {
      if (mask & (1u << t)) {
        const auto& c = rs.positives[static_cast<std::size_t>(t)].coeffs;
        for (int j = 0; j < n; ++j) sum[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j)];
      }
    }
    if (std::equal(sum.begin(), sum.end(), g.coeffs.begin())) {
      if (static_cast<int>(result.solutions.size()) == cap) {
        result.capped = true;
        break;
      }
      Decomposition d;
      for (int t = 0; t < m; ++t)
        if (mask & (1u << t)) d.subset.push_back(t + 1);
      result.solutions.push_back(std::move(d));
    }
  }
  return result;
}

struct ElementRecord {
  Weight mu;
  RootVector gam;
  long long solution_count{0};
  bool capped{false};
  int k{-1};  // of the first solution found; -1 when none
  Int oracle_length{0};
  bool agree{false};
};

/// Outcome of sweeping an orbit for statements (1) and (2): per element, the
/// number of 0/1 decompositions and the agreement of k with the dominance
/// length. agree holds iff solution_count == 1 and k == oracle_length.
struct ClaimReport {
  AlgebraId algebra;
  Weight seed;
  std::size_t orbit_size{0};
  VerifyStrategy strategy{VerifyStrategy::Exhaustive};
  std::vector<ElementRecord> records;
  std::vector<ElementRecord> counterexamples;

  bool all_agree() const { return counterexamples.empty(); }
  std::size_t agree_count() const { return records.size() - counterexamples.size(); }
};

/// Sweeps the whole orbit of the seed's dominant representative, counting 0/1
/// decompositions of gamma = lambda+ - mu for every mu and comparing k against
/// the dominance oracle. Results are reported, never asserted; non-regular
/// seeds are accepted so failures of the claim can be probed.
inline ClaimReport verify_statement(const AlgebraId& id, const Weight& seed, VerifyStrategy strategy,
                                    std::size_t orbit_cap = 10'000'000, int solution_cap = 64) {
  const RootSystem rs = generate_positive_roots(id);
  const OrbitSet os = orbit(seed, rs.cartan, orbit_cap);

  ClaimReport report;
  report.algebra = id;
  report.seed = os.dominant;
  report.orbit_size = os.size();
  report.strategy = strategy;
  report.records.reserve(os.size());

  for (const auto& elem : os.elements) {
    ElementRecord rec;
    rec.mu = elem.weight;
    rec.oracle_length = elem.length;
    rec.gam = gamma(os.dominant, elem.weight, rs.cartan);
    const DecomposeResult dr = strategy == VerifyStrategy::Exhaustive
                                   ? decompose_exhaustive(rec.gam, rs, solution_cap)
                                   : decompose(rec.gam, rs, DecomposeMode::All, solution_cap);
    rec.solution_count = static_cast<long long>(dr.solutions.size());
    rec.capped = dr.capped;
    if (!dr.solutions.empty()) rec.k = dr.solutions.front().k();
    rec.agree = !dr.capped && rec.solution_count == 1 && rec.k == rec.oracle_length;
    if (!rec.agree) report.counterexamples.push_back(rec);
    report.records.push_back(std::move(rec));
  }
  return report;
}

/// Coefficients (by degree) of prod_i (1 + t + ... + t^{m_i}); the top degree
/// is sum m_i = |Phi+| and the coefficient of t^k counts Weyl group elements
/// of length k.
inline std::vector<BigInt> poincare_polynomial(const RootSystem& rs) {
  std::vector<BigInt> coeffs{1};
  for (Int m : exponents(rs).exponents) {
    std::vector<BigInt> next(coeffs.size() + static_cast<std::size_t>(m), 0);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      if (coeffs[d] == 0) continue;
      for (Int e = 0; e <= m; ++e) next[d + static_cast<std::size_t>(e)] += coeffs[d];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

/// Histogram of dominance lengths over the rho-orbit; must match the Poincare
/// polynomial coefficients degree by degree.
inline std::vector<Int> length_census(const AlgebraId& id, std::size_t orbit_cap = 10'000'000) {
  const CartanMatrix cm = cartan_matrix(id);
  return orbit(rho(id), cm, orbit_cap).length_histogram();
}

/// Everything the `signature` command reports about one weight.
struct SignatureReport {
  AlgebraId algebra;
  Weight lambda;
  Weight mu;
  RootVector gam;          // the decomposed gamma (taken against rho when lambda != rho)
  Decomposition dec;
  Int oracle_length{0};
  long long solution_count{0};
  bool capped{false};
};

inline SignatureReport signature_report(const AlgebraId& id, const Weight& lambda, const Weight& mu,
                                        const RootSystem& rs, int solution_cap = 64) {
  SignatureReport rep;
  rep.algebra = id;
  rep.lambda = lambda;
  rep.mu = mu;
  rep.dec = signature_of_weight(lambda, mu, rs);
  const DominanceResult dr = dominance_reduce(mu, rs.cartan);
  rep.oracle_length = dr.length;
  const Weight rho_w = rho(id);
  const Weight probe = lambda == rho_w ? mu : apply_word(dr.word.reversed(), rho_w, rs.cartan);
  rep.gam = gamma(rho_w, probe, rs.cartan);
  const DecomposeResult all = decompose(rep.gam, rs, DecomposeMode::All, solution_cap);
  rep.solution_count = static_cast<long long>(all.solutions.size());
  rep.capped = all.capped;
  return rep;
}

}  // namespace weylsig
