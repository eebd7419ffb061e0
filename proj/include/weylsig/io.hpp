// JSON and text rendering for root systems, orbits, signatures, claim
// reports, Poincare data, and the E8 reproduction report. JSON uses ordered
// keys and integers only, so emitted documents re-serialize byte-identically.
#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "weylsig/e8_example.hpp"
#include "weylsig/signature.hpp"

namespace weylsig {

using Json = nlohmann::ordered_json;

inline Json json_of(const Weight& w) { return Json(w.labels); }
inline Json json_of(const RootVector& r) { return Json(r.coeffs); }

inline Json json_of(const RootSystem& rs) {
  Json roots = Json::array();
  for (int i = 1; i <= rs.count(); ++i) {
    const RootVector& beta = rs.root(i);
    roots.push_back(Json{{"index", i}, {"height", beta.height()}, {"coeffs", beta.coeffs}});
  }
  return Json{{"algebra", rs.algebra.name()}, {"count", rs.count()}, {"roots", std::move(roots)}};
}

// one root per line: index, height, coefficient tuple
inline std::string text_of(const RootSystem& rs) {
  std::ostringstream os;
  os << "# " << rs.algebra.name() << " positive roots: " << rs.count() << "\n";
  os << "# index height coeffs\n";
  for (int i = 1; i <= rs.count(); ++i) {
    const RootVector& beta = rs.root(i);
    os << i << ' ' << beta.height() << ' ' << beta.str() << '\n';
  }
  return os.str();
}

inline Json json_of(const OrbitSet& os, const AlgebraId& id, bool include_elements) {
  Json j{{"algebra", id.name()},
         {"seed", os.dominant.labels},
         {"orbit_size", os.size()},
         {"max_length", os.max_length()},
         {"length_histogram", os.length_histogram()}};
  if (include_elements) {
    Json elems = Json::array();
    for (const auto& e : os.elements) elems.push_back(Json{{"weight", e.weight.labels}, {"length", e.length}});
    j["elements"] = std::move(elems);
  }
  return j;
}

inline std::string text_of(const OrbitSet& os, const AlgebraId& id, bool include_elements) {
  std::ostringstream out;
  out << "algebra: " << id.name() << "\n";
  out << "seed: " << os.dominant.str() << "\n";
  out << "orbit_size: " << os.size() << "\n";
  out << "max_length: " << os.max_length() << "\n";
  out << "length_histogram:";
  for (Int c : os.length_histogram()) out << ' ' << c;
  out << "\n";
  if (include_elements) {
    for (const auto& e : os.elements) out << e.length << ": " << e.weight.str() << "\n";
  }
  return out.str();
}

inline std::string expansion_text(int index, const RootVector& beta) {
  std::ostringstream os;
  os << "alpha_" << index << " =";
  bool first = true;
  for (int j = 1; j <= beta.rank(); ++j) {
    const Int c = beta.coeff(j);
    if (c == 0) continue;
    os << (first ? " " : " + ");
    if (c != 1) os << c << ' ';
    os << "alpha_" << j;
    first = false;
  }
  if (first) os << " 0";
  return os.str();
}

inline Json json_of(const SignatureReport& rep, const RootSystem& rs) {
  Json expansions = Json::array();
  for (int idx : rep.dec.subset) expansions.push_back(rs.root(idx).coeffs);
  return Json{{"algebra", rep.algebra.name()},
              {"lambda", rep.lambda.labels},
              {"mu", rep.mu.labels},
              {"gamma", rep.gam.coeffs},
              {"subset_indices", rep.dec.subset},
              {"subset_expansions", std::move(expansions)},
              {"k", rep.dec.k()},
              {"epsilon", rep.dec.epsilon()},
              {"oracle_length", rep.oracle_length},
              {"solution_count", rep.solution_count}};
}

inline std::string text_of(const SignatureReport& rep, const RootSystem& rs) {
  std::ostringstream os;
  os << "algebra: " << rep.algebra.name() << "\n";
  os << "lambda: " << rep.lambda.str() << "\n";
  os << "mu: " << rep.mu.str() << "\n";
  os << "gamma: " << rep.gam.str() << "\n";
  os << "k: " << rep.dec.k() << "\n";
  os << "epsilon: " << (rep.dec.epsilon() > 0 ? "+1" : "-1") << "\n";
  os << "oracle_length: " << rep.oracle_length << "\n";
  os << "solution_count: " << rep.solution_count << (rep.capped ? " (capped)" : "") << "\n";
  os << "subset (" << rep.dec.k() << "):";
  for (int idx : rep.dec.subset) os << ' ' << idx;
  os << "\n";
  for (int idx : rep.dec.subset) os << "  " << expansion_text(idx, rs.root(idx)) << "\n";
  return os.str();
}

inline Json json_of(const ElementRecord& rec) {
  return Json{{"mu", rec.mu.labels},
              {"gamma", rec.gam.coeffs},
              {"solution_count", rec.solution_count},
              {"capped", rec.capped},
              {"k", rec.k},
              {"oracle_length", rec.oracle_length},
              {"agree", rec.agree}};
}

inline Json json_of(const ClaimReport& rep) {
  Json records = Json::array();
  for (const auto& rec : rep.records) records.push_back(json_of(rec));
  Json counterexamples = Json::array();
  for (const auto& rec : rep.counterexamples) counterexamples.push_back(json_of(rec));
  return Json{{"algebra", rep.algebra.name()},
              {"seed", rep.seed.labels},
              {"orbit_size", rep.orbit_size},
              {"strategy", strategy_name(rep.strategy)},
              {"agree_count", rep.agree_count()},
              {"all_agree", rep.all_agree()},
              {"counterexamples", std::move(counterexamples)},
              {"records", std::move(records)}};
}

inline std::string text_of(const ClaimReport& rep) {
  std::ostringstream os;
  os << "algebra: " << rep.algebra.name() << "\n";
  os << "seed: " << rep.seed.str() << "\n";
  os << "strategy: " << strategy_name(rep.strategy) << "\n";
  os << "orbit_size: " << rep.orbit_size << "\n";
  os << "agree: " << rep.agree_count() << "/" << rep.orbit_size << "\n";
  if (rep.all_agree()) {
    os << "counterexamples: none\n";
  } else {
    os << "counterexamples (" << rep.counterexamples.size() << "):\n";
    for (const auto& rec : rep.counterexamples) {
      os << "  mu=(" << rec.mu.str() << ") gamma=(" << rec.gam.str() << ") solutions="
         << rec.solution_count << (rec.capped ? "+" : "") << " k=" << rec.k
         << " oracle_length=" << rec.oracle_length << "\n";
    }
  }
  return os.str();
}

struct PoincareReport {
  AlgebraId algebra;
  ExponentList exps;
  BigInt order;
  std::vector<BigInt> coefficients;
  bool census_checked{false};
  bool census_matches{false};
  std::vector<Int> census;
};

inline Json json_of(const PoincareReport& rep) {
  Json coeffs = Json::array();
  for (const BigInt& c : rep.coefficients) coeffs.push_back(c.str());
  Json j{{"algebra", rep.algebra.name()},
         {"exponents", rep.exps.exponents},
         {"weyl_order", rep.order.str()},
         {"top_degree", rep.coefficients.size() - 1},
         {"coefficients", std::move(coeffs)}};
  if (rep.census_checked) {
    j["length_census"] = rep.census;
    j["census_matches"] = rep.census_matches;
  }
  return j;
}

inline std::string text_of(const PoincareReport& rep) {
  std::ostringstream os;
  os << "algebra: " << rep.algebra.name() << "\n";
  os << "exponents:";
  for (Int m : rep.exps.exponents) os << ' ' << m;
  os << "\n";
  os << "weyl_order: " << rep.order.str() << "\n";
  os << "top_degree: " << rep.coefficients.size() - 1 << "\n";
  os << "coefficients:";
  for (const BigInt& c : rep.coefficients) os << ' ' << c.str();
  os << "\n";
  if (rep.census_checked)
    os << "length_census: " << (rep.census_matches ? "matches" : "MISMATCH") << "\n";
  return os.str();
}

inline Json json_of(const E8Report& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"algebra", "E8"},
              {"word", rep.word.letters},
              {"compose", rep.compose_left ? "left" : "right"},
              {"mu", rep.mu.labels},
              {"all_pass", rep.all_pass()},
              {"checks", std::move(checks)}};
}

inline std::string text_of(const E8Report& rep) {
  std::ostringstream os;
  os << "word (" << rep.word.size() << "): " << rep.word.str() << "\n";
  for (const auto& c : rep.checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.pass || c.name == "oracle-length" || c.name == "signature") os << ": " << c.detail;
    os << "\n";
  }
  os << "result: " << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace weylsig
