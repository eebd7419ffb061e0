// Positive root system generation, canonical root indexing, exponents and
// Weyl group order derived from the height histogram.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "weylsig/algebra.hpp"

namespace weylsig {

/// All positive roots of an algebra in canonical order.
///
/// Canonical order: ascending height first, ties broken by ascending
/// lexicographic comparison of the reversed coefficient tuple
/// (c_N, c_{N-1}, ..., c_1). Indices are 1-based; indices 1..N are the simple
/// roots in label order.
struct RootSystem {
  AlgebraId algebra;
  CartanMatrix cartan;
  std::vector<RootVector> positives;
  std::map<std::vector<Int>, int> index_of;
  std::vector<Int> height_histogram;  // [h-1] = number of roots of height h

  int rank() const { return cartan.rank; }
  int count() const { return static_cast<int>(positives.size()); }

  const RootVector& root(int index) const {  // 1-based
    if (index < 1 || index > count()) throw std::out_of_range("root index out of range");
    return positives[static_cast<std::size_t>(index) - 1];
  }

  /// Canonical index of beta, or 0 when beta is not a positive root.
  int find_index(const RootVector& beta) const {
    auto it = index_of.find(beta.coeffs);
    return it == index_of.end() ? 0 : it->second;
  }
};

namespace detail {

inline bool canonical_less(const RootVector& a, const RootVector& b) {
  const Int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  for (std::size_t t = a.coeffs.size(); t-- > 0;) {
    if (a.coeffs[t] != b.coeffs[t]) return a.coeffs[t] < b.coeffs[t];
  }
  return false;
}

}  // namespace detail

/// Generates the full positive root system by reflection closure: starting
/// from the simple roots, sigma_i acts on root coordinates by
/// c_i -= (i-th Dynkin label), and every image with all coefficients
/// nonnegative is kept until a fixpoint is reached.
inline RootSystem generate_positive_roots(const AlgebraId& id) {
  RootSystem rs;
  rs.algebra = id;
  rs.cartan = cartan_matrix(id);
  const int n = rs.rank();

  std::map<std::vector<Int>, int> known;
  std::vector<std::vector<Int>> work;
  for (int i = 1; i <= n; ++i) {
    std::vector<Int> c(static_cast<std::size_t>(n), 0);
    c[static_cast<std::size_t>(i) - 1] = 1;
    known.emplace(c, 0);
    work.push_back(std::move(c));
  }

  while (!work.empty()) {
    const std::vector<Int> coeffs = std::move(work.back());
    work.pop_back();
    for (int i = 1; i <= n; ++i) {
      Int label_i = 0;
      for (int j = 1; j <= n; ++j) label_i += coeffs[static_cast<std::size_t>(j) - 1] * rs.cartan.entry(j, i);
      if (label_i == 0) continue;
      std::vector<Int> image = coeffs;
      image[static_cast<std::size_t>(i) - 1] -= label_i;
      if (std::all_of(image.begin(), image.end(), [](Int x) { return x >= 0; }) &&
          known.emplace(image, 0).second) {
        work.push_back(std::move(image));
      }
    }
  }

  rs.positives.reserve(known.size());
  for (const auto& [coeffs, unused] : known) rs.positives.emplace_back(coeffs);
  std::sort(rs.positives.begin(), rs.positives.end(), detail::canonical_less);

  Int max_height = 0;
  for (int t = 0; t < rs.count(); ++t) {
    rs.index_of.emplace(rs.positives[static_cast<std::size_t>(t)].coeffs, t + 1);
    max_height = std::max(max_height, rs.positives[static_cast<std::size_t>(t)].height());
  }
  rs.height_histogram.assign(static_cast<std::size_t>(max_height), 0);
  for (const auto& beta : rs.positives) ++rs.height_histogram[static_cast<std::size_t>(beta.height()) - 1];
  return rs;
}

/// 1-based canonical index of a positive root; throws for non-roots.
inline int canonical_index(const RootSystem& rs, const RootVector& beta) {
  const int idx = rs.find_index(beta);
  if (idx == 0)
    throw std::domain_error("not a positive root of " + rs.algebra.name() + ": (" + beta.str() + ")");
  return idx;
}

/// Exponents m_1 <= ... <= m_N of the Weyl group.
struct ExponentList {
  std::vector<Int> exponents;
};

/// Exponents as the conjugate partition of the height histogram:
/// #{roots of height h} = #{i : m_i >= h}.
inline ExponentList exponents(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<Int> m;
  m.reserve(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k) {  // k-th largest column of the histogram
    Int mk = 0;
    for (Int cnt : rs.height_histogram) {
      if (cnt >= k)
        ++mk;
      else
        break;  // histogram is weakly decreasing for irreducible systems
    }
    m.push_back(mk);
  }
  return ExponentList{std::move(m)};
}

/// |W| = prod (m_i + 1). Exceeds 64 bits already for A_20, hence BigInt.
inline BigInt weyl_order(const RootSystem& rs) {
  BigInt order = 1;
  for (Int m : exponents(rs).exponents) order *= (m + 1);
  return order;
}

}  // namespace weylsig
