// arbigeom command-line tool: arbitrage detection with exact
// certificates, Farkas feasibility, cone structure, orthant censuses,
// Q-tables, Monte Carlo verification, and Bernoulli-market pricing.
//
// Exit codes: 0 success, 1 domain/input error, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "arbigeom/arbigeom.hpp"

namespace {

using arbigeom::Rational;
using arbigeom::RatVector;
using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t env_threads() {
  const char* v = std::getenv("ARBIGEOM_THREADS");
  if (v == nullptr || *v == '\0') return 0;  // auto
  return static_cast<std::size_t>(std::strtoull(v, nullptr, 10));
}

std::string vec_text(const RatVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += arbigeom::format_rational(v[i]);
  }
  return s + "]";
}

json vec_json(const RatVector& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(arbigeom::format_rational(e));
  return a;
}

RatVector parse_vector_arg(const std::string& text) {
  RatVector v;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) v.push_back(arbigeom::parse_rational(cell));
  if (v.empty()) throw std::runtime_error("empty vector argument");
  return v;
}

int run_detect(const std::string& matrix_path, bool as_json) {
  const arbigeom::PayoffMatrix a = arbigeom::load_matrix_file(matrix_path);
  const arbigeom::ArbitrageVerdict verdict = arbigeom::detect(a);
  if (!arbigeom::verify_verdict(a, verdict))
    throw std::logic_error("internal error: verdict certificate failed exact re-verification");
  const bool arb = verdict.tag == arbigeom::VerdictTag::Arbitrage;
  if (as_json) {
    json out;
    out["verdict"] = arb ? "arbitrage" : "no-arbitrage";
    if (arb)
      out["portfolio"] = vec_json(verdict.portfolio);
    else
      out["state_prices"] = vec_json(verdict.state_prices);
    std::cout << out.dump() << "\n";
  } else if (arb) {
    std::cout << "ARBITRAGE v=" << vec_text(verdict.portfolio) << "\n";
  } else {
    std::cout << "NO-ARBITRAGE pi=" << vec_text(verdict.state_prices) << "\n";
  }
  return 0;
}

int run_farkas(const std::string& matrix_path, const std::string& target_path, bool as_json) {
  const arbigeom::RatMatrix a = arbigeom::load_matrix_file(matrix_path);
  const RatVector b = arbigeom::load_vector_file(target_path);
  const arbigeom::FarkasOutcome out = arbigeom::farkas(a, b);
  if (!arbigeom::verify_outcome(a, b, out))
    throw std::logic_error("internal error: Farkas certificate failed exact re-verification");
  const bool comb = out.tag == arbigeom::FarkasTag::Combination;
  if (as_json) {
    json j;
    j["outcome"] = comb ? "combination" : "separator";
    if (comb)
      j["x"] = vec_json(out.x);
    else
      j["y"] = vec_json(out.y);
    std::cout << j.dump() << "\n";
  } else if (comb) {
    std::cout << "COMBINATION x=" << vec_text(out.x) << "\n";
  } else {
    std::cout << "SEPARATOR y=" << vec_text(out.y) << "\n";
  }
  return 0;
}

int run_cone(const std::string& matrix_path, const std::string& member_arg, bool as_json) {
  const arbigeom::RatMatrix gens = arbigeom::load_matrix_file(matrix_path);
  std::vector<RatVector> generators;
  for (std::size_t j = 0; j < gens.cols(); ++j) generators.push_back(gens.col(j));
  const arbigeom::Cone cone(generators);
  const arbigeom::ConeDecomposition dec = arbigeom::decompose(cone);
  const bool pointed = dec.lineality_basis.empty();

  json member_out;
  std::string member_text;
  if (!member_arg.empty()) {
    const RatVector point = parse_vector_arg(member_arg);
    const arbigeom::MembershipResult mem = arbigeom::member(cone, point);
    if (mem.inside) {
      // re-check the witness combination exactly before printing
      RatVector recon(point.size(), Rational(0));
      for (std::size_t g = 0; g < generators.size(); ++g)
        for (std::size_t i = 0; i < point.size(); ++i)
          recon[i] += mem.coefficients[g] * generators[g][i];
      if (recon != point)
        throw std::logic_error("internal error: membership witness failed exact re-verification");
      member_out = json{{"inside", true}, {"coefficients", vec_json(mem.coefficients)}};
      member_text = "member: yes, coefficients=" + vec_text(mem.coefficients);
    } else {
      member_out = json{{"inside", false}};
      member_text = "member: no";
    }
  }

  if (as_json) {
    json out;
    out["pointed"] = pointed;
    out["lineality_basis"] = json::array();
    for (const auto& v : dec.lineality_basis) out["lineality_basis"].push_back(vec_json(v));
    out["slice_generators"] = json::array();
    for (const auto& v : dec.slice_generators) out["slice_generators"].push_back(vec_json(v));
    if (!member_out.is_null()) out["member"] = member_out;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "pointed: " << (pointed ? "yes" : "no") << "\n";
    std::cout << "lineality basis (" << dec.lineality_basis.size() << "):\n";
    for (const auto& v : dec.lineality_basis) std::cout << "  " << vec_text(v) << "\n";
    std::cout << "slice generators:\n";
    for (const auto& v : dec.slice_generators) std::cout << "  " << vec_text(v) << "\n";
    if (!member_text.empty()) std::cout << member_text << "\n";
  }
  return 0;
}

int run_orthants(const std::string& matrix_path, bool list, std::size_t m_limit, bool as_json) {
  const arbigeom::PayoffMatrix a = arbigeom::load_matrix_file(matrix_path);
  const arbigeom::OrthantCensus census = arbigeom::orthant_census(a, env_threads(), m_limit);
  const std::uint64_t total = std::uint64_t(1) << census.m;
  if (as_json) {
    json out;
    out["m"] = census.m;
    out["n"] = census.n;
    out["count"] = census.count;
    out["total"] = total;
    if (list) {
      json hit = json::array();
      for (std::uint64_t mask = 0; mask < total; ++mask)
        if (census.hits[mask])
          hit.push_back(arbigeom::SignVector::from_mask(census.m, mask).to_string());
      out["hit"] = hit;
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << census.count << " / " << total << " orthants hit (m=" << census.m
              << ", n=" << census.n << ")\n";
    if (list)
      for (std::uint64_t mask = 0; mask < total; ++mask)
        if (census.hits[mask])
          std::cout << arbigeom::SignVector::from_mask(census.m, mask).to_string() << "\n";
  }
  return 0;
}

int run_qtable(unsigned max_m, unsigned max_n, bool as_json) {
  if (max_m < 1 || max_n < 1) throw std::runtime_error("qtable: ranges must be >= 1");
  if (as_json) {
    json out;
    out["max_m"] = max_m;
    out["max_n"] = max_n;
    json rows = json::array();
    for (unsigned m = 1; m <= max_m; ++m) {
      json row = json::array();
      for (unsigned n = 1; n <= max_n; ++n) row.push_back(arbigeom::q(m, n).str());
      rows.push_back(row);
    }
    out["q"] = rows;
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> cells(max_m);
  std::size_t width = 1;
  for (unsigned m = 1; m <= max_m; ++m) {
    for (unsigned n = 1; n <= max_n; ++n) {
      cells[m - 1].push_back(arbigeom::q(m, n).str());
      width = std::max(width, cells[m - 1].back().size());
    }
    width = std::max(width, std::to_string(m).size());
  }
  std::cout << std::setw(static_cast<int>(width + 2)) << "m\\n";
  for (unsigned n = 1; n <= max_n; ++n) std::cout << std::setw(static_cast<int>(width + 2)) << n;
  std::cout << "\n";
  for (unsigned m = 1; m <= max_m; ++m) {
    std::cout << std::setw(static_cast<int>(width + 2)) << m;
    for (const auto& c : cells[m - 1]) std::cout << std::setw(static_cast<int>(width + 2)) << c;
    std::cout << "\n";
  }
  return 0;
}

int run_simulate(std::size_t m, std::size_t n, std::uint64_t trials, std::uint64_t seed,
                 const std::string& orthant) {
  arbigeom::SimConfig cfg(m, n, trials, seed);
  if (!orthant.empty())
    cfg = std::move(cfg).with_target(arbigeom::SignVector::parse(orthant));
  const arbigeom::SimReport rep = arbigeom::estimate_arbitrage_probability(cfg, env_threads());
  json out;
  out["m"] = rep.m;
  out["n"] = rep.n;
  out["trials"] = rep.trials;
  out["seed"] = rep.seed;
  out["hits"] = rep.hits;
  out["estimate"] = rep.estimate;
  out["theoretical_num"] = numerator(rep.theoretical).str();
  out["theoretical_den"] = denominator(rep.theoretical).str();
  out["std_error"] = rep.std_error;
  out["ci95_lo"] = rep.ci95_lo;
  out["ci95_hi"] = rep.ci95_hi;
  std::cout << out.dump() << "\n";
  return 0;
}

int run_price(const std::string& spot, const std::string& up, const std::string& down,
              const std::string& rate, const std::string& strike,
              const std::vector<std::string>& securities, bool include_risk_free) {
  const arbigeom::BernoulliMarket mkt(
      arbigeom::parse_rational(spot), arbigeom::parse_rational(up), arbigeom::parse_rational(down),
      arbigeom::parse_rational(rate), arbigeom::parse_rational(strike));
  std::vector<arbigeom::SecurityPayoff> secs;
  for (const auto& s : securities) {
    const RatVector v = parse_vector_arg(s);
    if (v.size() != 3) throw std::runtime_error("--security expects P,payoff_up,payoff_down");
    secs.push_back(arbigeom::SecurityPayoff{v[0], v[1], v[2]});
  }
  const auto [pi_u, pi_d] = arbigeom::risk_neutral_probs(mkt);
  const arbigeom::PayoffMatrix a = arbigeom::build_payoff_matrix(mkt, secs, include_risk_free);
  const arbigeom::ArbitrageVerdict verdict = arbigeom::detect(a);
  if (!arbigeom::verify_verdict(a, verdict))
    throw std::logic_error("internal error: verdict certificate failed exact re-verification");
  json out;
  out["pi_u"] = arbigeom::format_rational(pi_u);
  out["pi_d"] = arbigeom::format_rational(pi_d);
  out["call_price"] = arbigeom::format_rational(arbigeom::price_call(mkt));
  out["verdict"] =
      verdict.tag == arbigeom::VerdictTag::Arbitrage ? "arbitrage" : "no-arbitrage";
  std::cout << out.dump() << "\n";
  return 0;
}

int run_generic_check(const std::string& matrix_path, bool as_json) {
  const arbigeom::PayoffMatrix a = arbigeom::load_matrix_file(matrix_path);
  const arbigeom::GenericityResult res = arbigeom::is_generic(a);
  if (as_json) {
    json out;
    out["generic"] = res.generic;
    if (!res.generic) out["deleted_rows"] = res.deleted_rows;
    std::cout << out.dump() << "\n";
  } else if (res.generic) {
    std::cout << "GENERIC\n";
  } else {
    std::cout << "NOT-GENERIC deleting rows [";
    for (std::size_t i = 0; i < res.deleted_rows.size(); ++i)
      std::cout << (i ? ", " : "") << res.deleted_rows[i];
    std::cout << "] leaves a singular submatrix\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arbitrage detection, orthant geometry, and Monte Carlo verification"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::string matrix_path, target_path, member_arg, orthant_arg;
  std::uint64_t seed = 0;
  app.add_flag("--json", as_json, "emit machine-readable JSON");
  app.add_option("--matrix", matrix_path, "CSV matrix file (rows = scenarios)");
  app.add_option("--seed", seed, "RNG seed for simulation subcommands");

  CLI::App* detect_cmd = app.add_subcommand("detect", "arbitrage/no-arbitrage verdict with certificate");
  CLI::App* farkas_cmd = app.add_subcommand("farkas", "Farkas feasibility of {x >= 0 : Ax = b}");
  farkas_cmd->add_option("--target", target_path, "CSV vector file for b")->required();
  CLI::App* cone_cmd = app.add_subcommand("cone", "cone pointedness, lineality, decomposition (columns = generators)");
  cone_cmd->add_option("--member", member_arg, "comma-separated point to test for membership");
  CLI::App* orthants_cmd = app.add_subcommand("orthants", "orthants met by the column space");
  bool list_orthants = false;
  std::size_t m_limit = 16;
  orthants_cmd->add_flag("--list", list_orthants, "list every hit sign vector");
  orthants_cmd->add_option("--max-rows", m_limit, "census size guard (default 16 rows)");
  CLI::App* qtable_cmd = app.add_subcommand("qtable", "table of Q(m,n) orthant counts");
  unsigned max_m = 8, max_n = 8;
  qtable_cmd->add_option("--max-m", max_m, "largest m (default 8)");
  qtable_cmd->add_option("--max-n", max_n, "largest n (default 8)");
  CLI::App* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo arbitrage-probability estimate (JSON report)");
  std::size_t sim_m = 0, sim_n = 0;
  std::uint64_t trials = 10000;
  simulate_cmd->add_option("-m", sim_m, "scenario count")->required();
  simulate_cmd->add_option("-n", sim_n, "investment count")->required();
  simulate_cmd->add_option("--trials", trials, "number of trials (default 10000)");
  simulate_cmd->add_option("--orthant", orthant_arg, "target orthant as +/- string (default all +)");
  CLI::App* price_cmd = app.add_subcommand("price", "risk-neutral pricing in a Bernoulli market (JSON)");
  std::string spot, up, down, rate, strike;
  std::vector<std::string> securities;
  bool include_risk_free = false;
  price_cmd->add_option("--spot", spot, "spot price S")->required();
  price_cmd->add_option("--up", up, "up factor u")->required();
  price_cmd->add_option("--down", down, "down factor d")->required();
  price_cmd->add_option("--rate", rate, "risk-free rate r")->required();
  price_cmd->add_option("--strike", strike, "call strike K")->required();
  price_cmd->add_option("--security", securities, "security as P,payoff_up,payoff_down (repeatable)");
  price_cmd->add_flag("--include-risk-free", include_risk_free, "append the all-zero risk-free column");
  CLI::App* generic_cmd = app.add_subcommand("generic-check", "test every n x n row-submatrix for nonsingularity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    auto need_matrix = [&]() -> const std::string& {
      if (matrix_path.empty()) throw UsageError("--matrix FILE is required");
      return matrix_path;
    };
    if (*detect_cmd) return run_detect(need_matrix(), as_json);
    if (*farkas_cmd) return run_farkas(need_matrix(), target_path, as_json);
    if (*cone_cmd) return run_cone(need_matrix(), member_arg, as_json);
    if (*orthants_cmd) return run_orthants(need_matrix(), list_orthants, m_limit, as_json);
    if (*qtable_cmd) return run_qtable(max_m, max_n, as_json);
    if (*simulate_cmd) return run_simulate(sim_m, sim_n, trials, seed, orthant_arg);
    if (*price_cmd) return run_price(spot, up, down, rate, strike, securities, include_risk_free);
    if (*generic_cmd) return run_generic_check(need_matrix(), as_json);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
