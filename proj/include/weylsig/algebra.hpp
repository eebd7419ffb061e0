// Simple Lie algebra identification, Cartan matrices, and exact coordinate
// changes between the fundamental-weight basis (Dynkin labels) and the
// simple-root basis. All arithmetic is exact: 64-bit integers for labels and
// root coefficients, arbitrary-precision rationals for basis changes.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weylsig {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

// Reduced fraction with positive denominator; exact rational coordinates of
// weights in the simple-root basis live here.
using Fraction = boost::multiprecision::cpp_rational;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Lie algebra family letter plus rank, e.g. E8.
struct AlgebraId {
  Family family{Family::A};
  int rank{1};

  friend bool operator==(const AlgebraId&, const AlgebraId&) = default;

  std::string name() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
  }

  // Accepts strings like "E8", "a2", "D12".
  static AlgebraId parse(std::string_view s) {
    if (s.size() < 2) throw std::invalid_argument("malformed algebra name: '" + std::string(s) + "'");
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (f < 'A' || f > 'G') throw std::invalid_argument("malformed algebra name: '" + std::string(s) + "'");
    int rank = 0;
    for (std::size_t t = 1; t < s.size(); ++t) {
      if (!std::isdigit(static_cast<unsigned char>(s[t])))
        throw std::invalid_argument("malformed algebra name: '" + std::string(s) + "'");
      rank = rank * 10 + (s[t] - '0');
      if (rank > 1000) throw std::invalid_argument("rank out of range: '" + std::string(s) + "'");
    }
    return AlgebraId{static_cast<Family>(f), rank};
  }
};

// Rank constraints per family. B2/C2 are transposes of each other and both
// allowed; D3 coincides with A3 and is allowed as well.
inline bool is_supported(const AlgebraId& id) {
  switch (id.family) {
    case Family::A: return id.rank >= 1;
    case Family::B: return id.rank >= 2;
    case Family::C: return id.rank >= 2;
    case Family::D: return id.rank >= 3;
    case Family::E: return id.rank >= 6 && id.rank <= 8;
    case Family::F: return id.rank == 4;
    case Family::G: return id.rank == 2;
  }
  return false;
}

inline void require_supported(const AlgebraId& id) {
  if (!is_supported(id)) throw std::invalid_argument("unsupported algebra: " + id.name());
}

/// Integer weight in the fundamental-weight basis (Dynkin labels).
struct Weight {
  std::vector<Int> labels;

  Weight() = default;
  explicit Weight(std::vector<Int> l) : labels(std::move(l)) {}

  int rank() const { return static_cast<int>(labels.size()); }
  Int label(int i) const { return labels.at(static_cast<std::size_t>(i) - 1); }  // 1-based

  bool dominant() const {
    return std::all_of(labels.begin(), labels.end(), [](Int x) { return x >= 0; });
  }
  bool strictly_dominant() const {
    return std::all_of(labels.begin(), labels.end(), [](Int x) { return x >= 1; });
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.labels <=> b.labels; }

  Weight operator+(const Weight& o) const {
    require_same_rank(o);
    Weight r = *this;
    for (std::size_t t = 0; t < labels.size(); ++t) r.labels[t] += o.labels[t];
    return r;
  }
  Weight operator-(const Weight& o) const {
    require_same_rank(o);
    Weight r = *this;
    for (std::size_t t = 0; t < labels.size(); ++t) r.labels[t] -= o.labels[t];
    return r;
  }

  std::string str() const { return join(labels); }

  static std::string join(const std::vector<Int>& v) {
    std::ostringstream os;
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (t) os << ',';
      os << v[t];
    }
    return os.str();
  }

 private:
  void require_same_rank(const Weight& o) const {
    if (labels.size() != o.labels.size()) throw std::invalid_argument("weight rank mismatch");
  }
};

/// Integer vector in the simple-root basis. Positive roots have nonnegative
/// coefficients; signed entries are kept so that step differences of
/// non-reduced words can be represented and tagged invalid.
struct RootVector {
  std::vector<Int> coeffs;

  RootVector() = default;
  explicit RootVector(std::vector<Int> c) : coeffs(std::move(c)) {}

  int rank() const { return static_cast<int>(coeffs.size()); }
  Int coeff(int j) const { return coeffs.at(static_cast<std::size_t>(j) - 1); }  // 1-based

  Int height() const { return std::accumulate(coeffs.begin(), coeffs.end(), Int{0}); }
  bool nonnegative() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](Int x) { return x >= 0; });
  }
  bool zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](Int x) { return x == 0; });
  }

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector& a, const RootVector& b) { return a.coeffs <=> b.coeffs; }

  RootVector operator+(const RootVector& o) const {
    if (coeffs.size() != o.coeffs.size()) throw std::invalid_argument("root vector rank mismatch");
    RootVector r = *this;
    for (std::size_t t = 0; t < coeffs.size(); ++t) r.coeffs[t] += o.coeffs[t];
    return r;
  }

  std::string str() const { return Weight::join(coeffs); }
};

/// Cartan matrix under the convention A[i][j] = 2(alpha_i, alpha_j)/(alpha_j, alpha_j).
///
/// Note the convention: with it, row i of the matrix is exactly the Dynkin
/// label vector of the simple root alpha_i, and B_n / C_n come out as
/// transposes of one another (B_n has A[n-1][n] = -2, C_n has A[n][n-1] = -2).
struct CartanMatrix {
  int rank{0};
  std::vector<Int> entries;  // row-major, rank*rank

  Int entry(int i, int j) const {  // 1-based
    return entries.at(static_cast<std::size_t>(i - 1) * rank + (j - 1));
  }
  Int& entry(int i, int j) {
    return entries.at(static_cast<std::size_t>(i - 1) * rank + (j - 1));
  }

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

  /// Exact determinant (Bareiss fraction-free elimination).
  BigInt determinant() const {
    const int n = rank;
    std::vector<BigInt> m(entries.begin(), entries.end());
    auto at = [&](int r, int c) -> BigInt& { return m[static_cast<std::size_t>(r) * n + c]; };
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (at(k, k) == 0) {
        int p = k + 1;
        while (p < n && at(p, k) == 0) ++p;
        if (p == n) return 0;
        for (int c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
        sign = -sign;
      }
      for (int r = k + 1; r < n; ++r)
        for (int c = k + 1; c < n; ++c)
          at(r, c) = (at(r, c) * at(k, k) - at(r, k) * at(k, c)) / prev;
      prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
  }
};

/// Cartan matrix of the given algebra. E-series node labeling: chain
/// 1-2-...-(n-1) with node n attached to node n-3 (for E8: branch node 5).
inline CartanMatrix cartan_matrix(const AlgebraId& id) {
  require_supported(id);
  const int n = id.rank;
  CartanMatrix cm{n, std::vector<Int>(static_cast<std::size_t>(n) * n, 0)};
  for (int i = 1; i <= n; ++i) cm.entry(i, i) = 2;
  // link(i,j,a,b): A[i][j] = a, A[j][i] = b
  auto link = [&cm](int i, int j, Int aij, Int aji) {
    cm.entry(i, j) = aij;
    cm.entry(j, i) = aji;
  };
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) link(i, i + 1, -1, -1);
  };
  switch (id.family) {
    case Family::A:
      chain(1, n);
      break;
    case Family::B:  // alpha_n short
      chain(1, n - 1);
      link(n - 1, n, -2, -1);
      break;
    case Family::C:  // alpha_n long
      chain(1, n - 1);
      link(n - 1, n, -1, -2);
      break;
    case Family::D:
      chain(1, n - 1);
      link(n - 2, n, -1, -1);
      break;
    case Family::E:
      chain(1, n - 1);
      link(n - 3, n, -1, -1);
      break;
    case Family::F:  // alpha_1, alpha_2 long
      link(1, 2, -1, -1);
      link(2, 3, -2, -1);
      link(3, 4, -1, -1);
      break;
    case Family::G:  // alpha_1 short
      link(1, 2, -1, -3);
      break;
  }
  return cm;
}

/// Weyl vector: every Dynkin label equal to 1.
inline Weight rho(const AlgebraId& id) {
  require_supported(id);
  return Weight(std::vector<Int>(static_cast<std::size_t>(id.rank), 1));
}

/// Dynkin labels of a root-lattice element: label i of sum_j c_j alpha_j is
/// sum_j c_j A[j][i].
inline Weight weight_coords_of_root(const RootVector& beta, const CartanMatrix& cm) {
  if (beta.rank() != cm.rank) throw std::invalid_argument("root vector rank mismatch");
  const int n = cm.rank;
  Weight w(std::vector<Int>(static_cast<std::size_t>(n), 0));
  for (int i = 1; i <= n; ++i) {
    Int acc = 0;
    for (int j = 1; j <= n; ++j) acc += beta.coeff(j) * cm.entry(j, i);
    w.labels[static_cast<std::size_t>(i) - 1] = acc;
  }
  return w;
}

/// Exact simple-root coordinates of a weight: solves A^T c = w over the
/// rationals. The result is integral and nonnegative iff the weight lies in
/// the positive root lattice.
inline std::vector<Fraction> root_coords_of_weight(const Weight& w, const CartanMatrix& cm) {
  if (w.rank() != cm.rank) throw std::invalid_argument("weight rank mismatch");
  const int n = cm.rank;
  // augmented [A^T | w], Gaussian elimination with exact fractions
  std::vector<std::vector<Fraction>> m(static_cast<std::size_t>(n),
                                       std::vector<Fraction>(static_cast<std::size_t>(n) + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[r][c] = cm.entry(c + 1, r + 1);
    m[r][n] = w.labels[static_cast<std::size_t>(r)];
  }
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) throw std::runtime_error("singular Cartan matrix");
    std::swap(m[k], m[p]);
    for (int r = k + 1; r < n; ++r) {
      if (m[r][k] == 0) continue;
      const Fraction f = m[r][k] / m[k][k];
      for (int c = k; c <= n; ++c) m[r][c] -= f * m[k][c];
    }
  }
  std::vector<Fraction> x(static_cast<std::size_t>(n));
  for (int r = n - 1; r >= 0; --r) {
    Fraction acc = m[r][n];
    for (int c = r + 1; c < n; ++c) acc -= m[r][c] * x[static_cast<std::size_t>(c)];
    x[static_cast<std::size_t>(r)] = acc / m[r][r];
  }
  return x;
}

/// Parses "1,-2,0" (or the keyword "rho") into a Weight of the given rank.
inline Weight parse_weight(std::string_view s, int rank) {
  if (s == "rho") return Weight(std::vector<Int>(static_cast<std::size_t>(rank), 1));
  std::vector<Int> labels;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw std::invalid_argument("malformed weight: '" + std::string(s) + "'");
    std::size_t pos = 0;
    Int v = 0;
    try {
      v = std::stoll(cur, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed weight: '" + std::string(s) + "'");
    }
    if (pos != cur.size()) throw std::invalid_argument("malformed weight: '" + std::string(s) + "'");
    labels.push_back(v);
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  flush();
  if (static_cast<int>(labels.size()) != rank)
    throw std::invalid_argument("weight has " + std::to_string(labels.size()) + " labels, expected " +
                                std::to_string(rank));
  return Weight(std::move(labels));
}

}  // namespace weylsig
