// Simple reflections on weights, word application (rightmost letter acts
// first), step-root extraction, the dominance length oracle, and Weyl orbit
// enumeration.
#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "weylsig/root_system.hpp"

namespace weylsig {

/// Word in the simple reflections; letters are 1-based node indices.
/// Composition convention: sigma_{i1.i2}(w) = sigma_{i1}(sigma_{i2}(w)),
/// so the rightmost letter is applied first.
struct WeylWord {
  std::vector<int> letters;

  WeylWord() = default;
  explicit WeylWord(std::vector<int> l) : letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  WeylWord reversed() const { return WeylWord(std::vector<int>(letters.rbegin(), letters.rend())); }

  friend bool operator==(const WeylWord&, const WeylWord&) = default;

  std::string str() const {
    std::string s;
    for (std::size_t t = 0; t < letters.size(); ++t) {
      if (t) s += ',';
      s += std::to_string(letters[t]);
    }
    return s;
  }

  /// Parses "4,3,2,5,..." (1-based letters); the empty string is the identity.
  static WeylWord parse(std::string_view s) {
    WeylWord w;
    if (s.empty()) return w;
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) throw std::invalid_argument("malformed word: '" + std::string(s) + "'");
      std::size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(cur, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed word: '" + std::string(s) + "'");
      }
      if (pos != cur.size() || v < 1) throw std::invalid_argument("malformed word: '" + std::string(s) + "'");
      w.letters.push_back(v);
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
    return w;
  }
};

/// sigma_i(w) = w - w_i * alpha_i, with alpha_i given by the i-th row of the
/// Cartan matrix in the fundamental-weight basis. An involution.
inline Weight reflect(const Weight& w, int i, const CartanMatrix& cm) {
  if (i < 1 || i > cm.rank) throw std::invalid_argument("reflection index out of range: " + std::to_string(i));
  if (w.rank() != cm.rank) throw std::invalid_argument("weight rank mismatch");
  Weight out = w;
  const Int wi = w.labels[static_cast<std::size_t>(i) - 1];
  if (wi == 0) return out;
  for (int j = 1; j <= cm.rank; ++j) out.labels[static_cast<std::size_t>(j) - 1] -= wi * cm.entry(i, j);
  return out;
}

inline Weight apply_word(const WeylWord& word, const Weight& w, const CartanMatrix& cm) {
  Weight cur = w;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) cur = reflect(cur, *it, cm);
  return cur;
}

/// One step difference phi_N between the images of the length-(N-1) and
/// length-N prefixes of a word. For reduced words on weights with all labels
/// equal to 1 these are distinct positive roots; otherwise they may be
/// negative, zero, or non-root multiples, and are tagged accordingly.
struct StepRoot {
  RootVector delta;  // in simple-root coordinates, possibly with negative entries
  bool is_root{false};
  int index{0};  // canonical index when is_root
};

inline std::vector<StepRoot> step_roots(const WeylWord& word, const Weight& w, const RootSystem& rs) {
  std::vector<StepRoot> steps;
  steps.reserve(word.size());
  Weight prev = w;
  for (std::size_t len = 1; len <= word.size(); ++len) {
    const WeylWord prefix(std::vector<int>(word.letters.begin(), word.letters.begin() + static_cast<long>(len)));
    const Weight cur = apply_word(prefix, w, rs.cartan);
    const Weight diff = prev - cur;
    const auto coords = root_coords_of_weight(diff, rs.cartan);
    StepRoot sr;
    sr.delta.coeffs.reserve(coords.size());
    for (const Fraction& f : coords) {
      if (boost::multiprecision::denominator(f) != 1)
        throw std::logic_error("step difference outside the root lattice");
      sr.delta.coeffs.push_back(boost::multiprecision::numerator(f).convert_to<Int>());
    }
    sr.index = rs.find_index(sr.delta);
    sr.is_root = sr.index != 0;
    steps.push_back(std::move(sr));
    prev = cur;
  }
  return steps;
}

/// Result of the dominance algorithm. `word` is the group element mapping the
/// input weight to its dominant representative (so applying `word` to the
/// input gives `dominant`, and applying `word.reversed()` to `dominant`
/// returns the input). `length` equals the number of reflections taken, which
/// is the minimal word length over the coset.
struct DominanceResult {
  Int length{0};
  WeylWord word;
  Weight dominant;
};

/// Repeatedly reflects at the smallest index carrying a negative label until
/// dominant. Each step strictly decreases the number of positive roots pairing
/// negatively with the weight, so this terminates for every integer weight.
inline DominanceResult dominance_reduce(const Weight& w, const CartanMatrix& cm) {
  if (w.rank() != cm.rank) throw std::invalid_argument("weight rank mismatch");
  DominanceResult res;
  res.dominant = w;
  std::vector<int> applied;
  for (;;) {
    int neg = 0;
    for (int i = 1; i <= cm.rank; ++i) {
      if (res.dominant.labels[static_cast<std::size_t>(i) - 1] < 0) {
        neg = i;
        break;
      }
    }
    if (neg == 0) break;
    res.dominant = reflect(res.dominant, neg, cm);
    applied.push_back(neg);
    ++res.length;
  }
  res.word = WeylWord(std::vector<int>(applied.rbegin(), applied.rend()));
  return res;
}

struct OrbitElement {
  Weight weight;
  Int length{0};
};

/// Weyl orbit of the dominant representative of a seed weight; every element
/// is annotated with its dominance length.
struct OrbitSet {
  Weight dominant;
  bool seed_regular{false};
  std::vector<OrbitElement> elements;  // breadth-first layer order

  std::size_t size() const { return elements.size(); }

  Int max_length() const {
    Int m = 0;
    for (const auto& e : elements) m = std::max(m, e.length);
    return m;
  }

  /// Histogram of lengths, index = length.
  std::vector<Int> length_histogram() const {
    std::vector<Int> h(static_cast<std::size_t>(max_length()) + 1, 0);
    for (const auto& e : elements) ++h[static_cast<std::size_t>(e.length)];
    return h;
  }
};

/// Breadth-first closure of the seed's dominant representative under all
/// simple reflections. The BFS layer of an element equals its dominance
/// length; this is checked against dominance_reduce rather than assumed
/// (exhaustively for small orbits, sampled above 20000 elements).
inline OrbitSet orbit(const Weight& seed, const CartanMatrix& cm, std::size_t cap = 10'000'000) {
  OrbitSet os;
  os.dominant = dominance_reduce(seed, cm).dominant;
  os.seed_regular = os.dominant.strictly_dominant();

  std::set<std::vector<Int>> seen;
  std::vector<Weight> frontier{os.dominant};
  seen.insert(os.dominant.labels);
  Int layer = 0;
  while (!frontier.empty()) {
    for (const auto& w : frontier) os.elements.push_back({w, layer});
    if (os.elements.size() > cap)
      throw std::runtime_error("orbit too large (cap " + std::to_string(cap) + ")");
    std::vector<Weight> next;
    for (const auto& w : frontier) {
      for (int i = 1; i <= cm.rank; ++i) {
        Weight img = reflect(w, i, cm);
        if (seen.insert(img.labels).second) next.push_back(std::move(img));
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
    ++layer;
  }

  const std::size_t stride = os.elements.size() <= 20000 ? 1 : 997;
  for (std::size_t t = 0; t < os.elements.size(); t += stride) {
    if (dominance_reduce(os.elements[t].weight, cm).length != os.elements[t].length)
      throw std::logic_error("orbit layer disagrees with dominance length");
  }
  return os;
}

}  // namespace weylsig
