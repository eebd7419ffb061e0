// weylsig command line: root systems, orbits, weight signatures, claim
// verification sweeps, Poincare checks, and the built-in E8 reproduction.
//
// Exit codes: 0 success, 1 usage or input errors, 2 claim violation.
#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "weylsig/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct CommonOpts {
  std::string algebra;
  std::string format = "text";
};

void emit(const weylsig::Json& j) { std::cout << j.dump(2) << "\n"; }

int run_roots(const CommonOpts& opt) {
  const auto id = weylsig::AlgebraId::parse(opt.algebra);
  const auto rs = weylsig::generate_positive_roots(id);
  if (opt.format == "json")
    emit(weylsig::json_of(rs));
  else
    std::cout << weylsig::text_of(rs);
  return kExitOk;
}

int run_orbit(const CommonOpts& opt, const std::string& lambda_str, std::size_t cap, bool elements) {
  const auto id = weylsig::AlgebraId::parse(opt.algebra);
  const auto cm = weylsig::cartan_matrix(id);
  const auto seed = weylsig::parse_weight(lambda_str, id.rank);
  const auto os = weylsig::orbit(seed, cm, cap);
  if (opt.format == "json")
    emit(weylsig::json_of(os, id, elements));
  else
    std::cout << weylsig::text_of(os, id, elements);
  return kExitOk;
}

int run_signature(const CommonOpts& opt, const std::string& lambda_str, const std::string& word_str,
                  const std::string& mu_str, const std::string& compose, int solution_cap) {
  const auto id = weylsig::AlgebraId::parse(opt.algebra);
  const auto rs = weylsig::generate_positive_roots(id);
  const auto lambda = weylsig::parse_weight(lambda_str, id.rank);
  weylsig::Weight mu;
  if (!word_str.empty()) {
    auto word = weylsig::WeylWord::parse(word_str);
    for (int letter : word.letters) {
      if (letter > id.rank)
        throw std::invalid_argument("word letter " + std::to_string(letter) + " out of range for " + id.name());
    }
    if (compose == "left") word = word.reversed();
    mu = weylsig::apply_word(word, lambda, rs.cartan);
  } else {
    mu = weylsig::parse_weight(mu_str, id.rank);
  }
  const auto rep = weylsig::signature_report(id, lambda, mu, rs, solution_cap);
  if (opt.format == "json")
    emit(weylsig::json_of(rep, rs));
  else
    std::cout << weylsig::text_of(rep, rs);
  return kExitOk;
}

int run_verify(const CommonOpts& opt, const std::string& lambda_str, const std::string& strategy,
               std::size_t orbit_cap, int solution_cap) {
  const auto id = weylsig::AlgebraId::parse(opt.algebra);
  const auto seed = weylsig::parse_weight(lambda_str, id.rank);
  weylsig::VerifyStrategy strat;
  if (strategy == "exhaustive") {
    strat = weylsig::VerifyStrategy::Exhaustive;
  } else if (strategy == "dfs_all") {
    strat = weylsig::VerifyStrategy::DfsAll;
  } else {  // auto: exhaustive where the 2^|Phi+| scan is feasible
    strat = weylsig::generate_positive_roots(id).count() <= 20 ? weylsig::VerifyStrategy::Exhaustive
                                                               : weylsig::VerifyStrategy::DfsAll;
  }
  const auto rep = weylsig::verify_statement(id, seed, strat, orbit_cap, solution_cap);
  if (opt.format == "json")
    emit(weylsig::json_of(rep));
  else
    std::cout << weylsig::text_of(rep);
  return rep.all_agree() ? kExitOk : kExitViolation;
}

int run_poincare(const CommonOpts& opt, bool check_census, std::size_t orbit_cap) {
  const auto id = weylsig::AlgebraId::parse(opt.algebra);
  const auto rs = weylsig::generate_positive_roots(id);
  weylsig::PoincareReport rep;
  rep.algebra = id;
  rep.exps = weylsig::exponents(rs);
  rep.order = weylsig::weyl_order(rs);
  rep.coefficients = weylsig::poincare_polynomial(rs);
  if (check_census) {
    rep.census_checked = true;
    rep.census = weylsig::length_census(id, orbit_cap);
    rep.census_matches = rep.census.size() == rep.coefficients.size();
    if (rep.census_matches) {
      for (std::size_t d = 0; d < rep.census.size(); ++d) {
        if (weylsig::BigInt(rep.census[d]) != rep.coefficients[d]) {
          rep.census_matches = false;
          break;
        }
      }
    }
  }
  if (opt.format == "json")
    emit(weylsig::json_of(rep));
  else
    std::cout << weylsig::text_of(rep);
  return (!check_census || rep.census_matches) ? kExitOk : kExitViolation;
}

int run_reproduce_e8(const std::string& format, const std::string& compose, const std::string& word_str) {
  const auto word = word_str.empty() ? weylsig::e8_word() : weylsig::WeylWord::parse(word_str);
  for (int letter : word.letters) {
    if (letter > 8) throw std::invalid_argument("word letter " + std::to_string(letter) + " out of range for E8");
  }
  const auto rep = weylsig::run_e8_reproduction(word, compose == "left");
  if (format == "json")
    emit(weylsig::json_of(rep));
  else
    std::cout << weylsig::text_of(rep);
  return rep.all_pass() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl group element signatures computed directly from weights"};
  app.require_subcommand(1);

  CommonOpts opt;
  std::string lambda_str = "rho";
  std::string mu_str;
  std::string word_str;
  std::string compose = "right";
  std::string strategy = "auto";
  std::size_t orbit_cap = 10'000'000;
  int solution_cap = 64;
  bool elements = false;
  bool check_census = false;

  auto add_common = [&](CLI::App* cmd, bool need_algebra) {
    if (need_algebra)
      cmd->add_option("-a,--algebra", opt.algebra, "algebra name, e.g. A2, D4, E8")->required();
    cmd->add_option("-f,--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* roots = app.add_subcommand("roots", "list the positive root system");
  add_common(roots, true);

  auto* orbit_cmd = app.add_subcommand("orbit", "enumerate a Weyl orbit with dominance lengths");
  add_common(orbit_cmd, true);
  orbit_cmd->add_option("-l,--lambda", lambda_str, "seed weight (labels or 'rho')");
  orbit_cmd->add_option("--orbit-cap", orbit_cap, "maximum orbit size");
  orbit_cmd->add_flag("--elements", elements, "print every orbit element");

  auto* sig = app.add_subcommand("signature", "signature of a weight via 0/1 decomposition");
  add_common(sig, true);
  sig->add_option("-l,--lambda", lambda_str, "dominant weight (labels or 'rho')");
  auto* word_opt = sig->add_option("-w,--word", word_str, "reflection word applied to lambda");
  auto* mu_opt = sig->add_option("-m,--mu", mu_str, "target weight directly");
  word_opt->excludes(mu_opt);
  mu_opt->excludes(word_opt);
  sig->add_option("--compose", compose, "word composition convention")
      ->check(CLI::IsMember({"right", "left"}));
  sig->add_option("--solution-cap", solution_cap, "cap for the find-all solution count");

  auto* verify = app.add_subcommand("verify", "sweep an orbit checking uniqueness and length agreement");
  add_common(verify, true);
  verify->add_option("-l,--lambda", lambda_str, "seed weight (labels or 'rho')");
  verify->add_option("-s,--strategy", strategy, "decomposition counting strategy")
      ->check(CLI::IsMember({"auto", "exhaustive", "dfs_all"}));
  verify->add_option("--orbit-cap", orbit_cap, "maximum orbit size");
  verify->add_option("--solution-cap", solution_cap, "cap for find-all counting");

  auto* poincare = app.add_subcommand("poincare", "exponents, Weyl order, Poincare polynomial");
  add_common(poincare, true);
  poincare->add_flag("--check", check_census, "compare against the orbit length census");
  poincare->add_option("--orbit-cap", orbit_cap, "maximum orbit size for --check");

  auto* repro = app.add_subcommand("reproduce-e8", "run the built-in E8 length-29 reproduction");
  add_common(repro, false);
  repro->add_option("-w,--word", word_str, "override the built-in word");
  repro->add_option("--compose", compose, "word composition convention")
      ->check(CLI::IsMember({"right", "left"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (roots->parsed()) return run_roots(opt);
    if (orbit_cmd->parsed()) return run_orbit(opt, lambda_str, orbit_cap, elements);
    if (sig->parsed()) {
      if (word_str.empty() && mu_str.empty())
        throw std::invalid_argument("signature needs --word or --mu");
      return run_signature(opt, lambda_str, word_str, mu_str, compose, solution_cap);
    }
    if (verify->parsed()) return run_verify(opt, lambda_str, strategy, orbit_cap, solution_cap);
    if (poincare->parsed()) return run_poincare(opt, check_census, orbit_cap);
    if (repro->parsed()) return run_reproduce_e8(opt.format, compose, word_str);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
