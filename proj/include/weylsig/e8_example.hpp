// Built-in E8 reproduction case: a reduced word of length 29, the canonical
// indices of its step roots (listed in reduction order, i.e. reverse prefix
// order), and the expansions of the 26 composite roots among them. The same
// data ships as data/e8_fixture.json for reuse outside this header.
#pragma once

#include <array>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "weylsig/signature.hpp"

namespace weylsig {

inline const WeylWord& e8_word() {
  static const WeylWord w(std::vector<int>{4, 3, 2, 5, 4, 3, 7, 8, 5, 4, 3, 2, 1, 6, 5,
                                           4, 3, 2, 8, 5, 4, 3, 6, 5, 4, 7, 6, 5, 8});
  return w;
}

/// Step-root indices in reduction order (step 29 first, step 1 last).
inline const std::vector<int>& e8_step_indices() {
  static const std::vector<int> idx{114, 104, 92, 88, 75, 54, 48, 70, 49, 42, 65, 64, 43, 36, 60,
                                    55,  39,  15, 8,  33, 27, 21, 7,  24, 18, 12,  17, 11, 4};
  return idx;
}

/// The 26 composite roots among the step roots, as (index, coefficients).
inline const std::vector<std::pair<int, RootVector>>& e8_expansions() {
  static const std::vector<std::pair<int, RootVector>> table = [] {
    const std::vector<std::pair<int, std::vector<Int>>> raw{
        {114, {1, 2, 3, 4, 5, 3, 2, 3}}, {104, {1, 2, 3, 4, 4, 2, 1, 2}},
        {92, {0, 1, 2, 3, 4, 2, 1, 2}},  {88, {0, 1, 2, 3, 3, 2, 1, 2}},
        {75, {1, 2, 2, 2, 2, 1, 1, 1}},  {54, {0, 1, 1, 1, 2, 1, 1, 1}},
        {48, {0, 1, 1, 1, 1, 1, 1, 1}},  {70, {1, 1, 2, 2, 2, 1, 1, 1}},
        {49, {0, 0, 1, 1, 2, 1, 1, 1}},  {42, {0, 0, 1, 1, 1, 1, 1, 1}},
        {65, {0, 1, 2, 2, 2, 1, 1, 1}},  {64, {1, 1, 1, 2, 2, 1, 1, 1}},
        {43, {0, 0, 0, 1, 2, 1, 1, 1}},  {36, {0, 0, 0, 1, 1, 1, 1, 1}},
        {60, {0, 1, 1, 2, 2, 1, 1, 1}},  {55, {0, 0, 1, 2, 2, 1, 1, 1}},
        {39, {1, 1, 1, 1, 1, 0, 0, 1}},  {15, {0, 0, 0, 0, 1, 0, 0, 1}},
        {33, {0, 1, 1, 1, 1, 0, 0, 1}},  {27, {0, 0, 1, 1, 1, 0, 0, 1}},
        {21, {0, 0, 0, 1, 1, 0, 0, 1}},  {24, {0, 1, 1, 1, 1, 0, 0, 0}},
        {18, {0, 0, 1, 1, 1, 0, 0, 0}},  {12, {0, 0, 0, 1, 1, 0, 0, 0}},
        {17, {0, 1, 1, 1, 0, 0, 0, 0}},  {11, {0, 0, 1, 1, 0, 0, 0, 0}},
    };
    std::vector<std::pair<int, RootVector>> t;
    t.reserve(raw.size());
    for (const auto& [idx, coeffs] : raw) t.emplace_back(idx, RootVector(coeffs));
    return t;
  }();
  return table;
}

// Spot identities displayed alongside the example: step 19 (prefix 18 vs 19)
// yields root 65, step 9 (prefix 8 vs 9) yields root 27.
inline constexpr std::pair<int, int> kE8SpotStep65{19, 65};
inline constexpr std::pair<int, int> kE8SpotStep27{9, 27};

struct E8Check {
  std::string name;
  bool pass{false};
  std::string detail;  // expected/actual diff on failure, summary on success
};

struct E8Report {
  WeylWord word;
  bool compose_left{false};
  Weight mu;
  std::vector<E8Check> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const E8Check& c) { return c.pass; });
  }
};

namespace detail {

template <typename Seq>
std::string seq_str(const Seq& v) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& x : v) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << ']';
  return os.str();
}

}  // namespace detail

/// Runs the full pipeline on the built-in length-29 word (or an override) and
/// checks: (a) the dominance oracle gives length 29, (b) the decomposition has
/// k = 29 and epsilon = -1, (c) the decomposed index set matches, (d) the 26
/// composite expansions match, (e) the step-root sequence read in reverse
/// matches reduction order, including both spot identities.
inline E8Report run_e8_reproduction(const WeylWord& word = e8_word(), bool compose_left = false) {
  const AlgebraId e8{Family::E, 8};
  const RootSystem rs = generate_positive_roots(e8);
  const Weight lambda = rho(e8);
  const WeylWord effective = compose_left ? word.reversed() : word;

  E8Report report;
  report.word = word;
  report.compose_left = compose_left;
  report.mu = apply_word(effective, lambda, rs.cartan);

  {  // (a) oracle length
    const Int len = dominance_reduce(report.mu, rs.cartan).length;
    report.checks.push_back({"oracle-length", len == 29,
                             "expected 29, got " + std::to_string(len)});
  }

  Decomposition dec;
  bool have_dec = false;
  {  // (b) k and epsilon from the 0/1 decomposition
    E8Check c{"signature", false, ""};
    try {
      dec = signature_of_weight(lambda, report.mu, rs);
      have_dec = true;
      c.pass = dec.k() == 29 && dec.epsilon() == -1;
      c.detail = "expected k=29 epsilon=-1, got k=" + std::to_string(dec.k()) +
                 " epsilon=" + std::to_string(dec.epsilon());
    } catch (const std::exception& e) {
      c.detail = std::string("decomposition failed: ") + e.what();
    }
    report.checks.push_back(std::move(c));
  }

  {  // (c) index set of the decomposition
    E8Check c{"index-set", false, "no decomposition"};
    if (have_dec) {
      const std::set<int> expected(e8_step_indices().begin(), e8_step_indices().end());
      const std::set<int> actual(dec.subset.begin(), dec.subset.end());
      c.pass = expected == actual;
      c.detail = "expected " + detail::seq_str(expected) + ", got " + detail::seq_str(actual);
    }
    report.checks.push_back(std::move(c));
  }

  {  // (d) composite-root expansions
    E8Check c{"expansions", true, ""};
    for (const auto& [idx, coeffs] : e8_expansions()) {
      if (rs.root(idx) != coeffs || rs.find_index(coeffs) != idx) {
        c.pass = false;
        c.detail += "root " + std::to_string(idx) + ": expected (" + coeffs.str() + "), got (" +
                    rs.root(idx).str() + "); ";
      }
    }
    if (c.pass) c.detail = "all 26 expansions match";
    report.checks.push_back(std::move(c));
  }

  {  // (e) step-root sequence in reverse prefix order, plus spot identities
    E8Check c{"step-sequence", false, ""};
    const auto steps = step_roots(effective, lambda, rs);
    std::vector<int> reversed;
    bool all_roots = true;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      if (!it->is_root) all_roots = false;
      reversed.push_back(it->index);
    }
    const bool order_ok = all_roots && reversed == e8_step_indices();
    const bool spot65 = steps.size() >= static_cast<std::size_t>(kE8SpotStep65.first) &&
                        steps[static_cast<std::size_t>(kE8SpotStep65.first) - 1].index == kE8SpotStep65.second;
    const bool spot27 = steps.size() >= static_cast<std::size_t>(kE8SpotStep27.first) &&
                        steps[static_cast<std::size_t>(kE8SpotStep27.first) - 1].index == kE8SpotStep27.second;
    c.pass = order_ok && spot65 && spot27;
    c.detail = "expected " + detail::seq_str(e8_step_indices()) + ", got " + detail::seq_str(reversed) +
               (spot65 ? "" : "; spot check step 19 != root 65") +
               (spot27 ? "" : "; spot check step 9 != root 27");
    if (c.pass) c.detail = "reverse step order matches, spot identities hold";
    report.checks.push_back(std::move(c));
  }

  return report;
}

}  // namespace weylsig
