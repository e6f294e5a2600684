#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "hser/engine.hpp"
#include "hser/render.hpp"
#include "hser/schur.hpp"
#include "hser/sweep.hpp"
#include "hser/verify.hpp"

using namespace hser;

// exit codes: 0 ok, 1 verification failure, 2 parse error, 3 ineligible request
namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitParseError = 2;
constexpr int kExitIneligible = 3;

RatFunc series_for(const ReprSpec& spec, const std::string& kind, long L) {
  if (kind == "invariant") return invariant_hilbert(spec);
  if (kind == "covariant") {
    if (L < 0) throw std::domain_error("covariant kind needs L >= 0");
    return covariant_hilbert(spec, L);
  }
  return onshell_hilbert(spec);
}

const char* source_name(GammaSource s) {
  return s == GammaSource::schur_formula ? "schur_formula" : "laurent_extraction";
}

int cmd_hilbert(const std::string& rep, const std::string& kind, long L,
                const std::string& format) {
  ReprSpec spec = ReprSpec::parse(rep);
  RatFunc f = series_for(spec, kind, L);
  if (format == "json") {
    nlohmann::json j;
    j["rep"] = spec.str();
    j["kind"] = kind;
    j["L"] = kind == "covariant" ? L : 0;
    auto coeffs = [](const Poly& p) {
      std::vector<std::string> v;
      for (const Rat& c : p.coeffs()) v.push_back(rat_str(c));
      if (v.empty()) v.push_back("0");
      return v;
    };
    j["num"] = coeffs(f.num());
    j["den"] = coeffs(f.den());
    std::cout << j.dump() << "\n";
  } else if (format == "latex") {
    std::cout << latex(f) << "\n";
  } else {
    std::cout << f.str() << "\n";
  }
  return 0;
}

int cmd_laurent(const std::string& rep, const std::string& kind, long L, long order) {
  ReprSpec spec = ReprSpec::parse(rep);
  RatFunc f = series_for(spec, kind, L);
  if (f.is_zero()) {
    std::cout << "zero function\n";
    return 0;
  }
  LaurentExpansion le = laurent_at_one(f, order);
  std::cout << "pole_order: " << le.pole_order << "\n";
  for (long i = 0; i < (long)le.coefficients.size(); ++i)
    std::cout << "(1-t)^" << (i - le.pole_order) << ": " << rat_str(le.coefficients[i])
              << "\n";
  if (kind == "onshell") {
    GammaReport g = gamma0_onshell(spec);
    Rat lead = le.coefficients.at(0);
    std::cout << "gamma0_on: " << rat_str(g.value) << " [" << source_name(g.source) << "]\n";
    if (g.applicable)
      std::cout << "gamma0_on extraction: " << rat_str(lead) << " ["
                << (g.value == lead ? "agree" : "DISAGREE") << "]\n";
  } else {
    GammaReport g0 = gamma0_covariant(spec, kind == "covariant" ? L : 0);
    GammaReport g1 = gamma1_covariant(spec, kind == "covariant" ? L : 0);
    GammaReport g2 = gamma2_covariant(spec, kind == "covariant" ? L : 0);
    std::cout << "gamma0: " << rat_str(g0.value) << " [" << source_name(g0.source) << "]\n";
    std::cout << "gamma1: " << rat_str(g1.value) << " [" << source_name(g1.source) << "]\n";
    std::cout << "gamma2: " << rat_str(g2.value) << " [" << source_name(g2.source) << "]\n";
  }
  return 0;
}

int cmd_sweep(long max_dim, const std::string& out_path, long jobs) {
  if (max_dim < 2 || max_dim % 2 != 0)
    throw std::invalid_argument("max_dim must be even and >= 2");
  std::vector<SweepRow> rows = run_sweep(max_dim, jobs, /*verbose=*/true);
  if (out_path.empty()) {
    write_sweep_csv(std::cout, rows);
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open " << out_path << " for writing\n";
    return kExitParseError;
  }
  write_sweep_csv(out, rows);
  if (!out) {
    std::cerr << "write failed: " << out_path << "\n";
    return kExitParseError;
  }
  std::cerr << "sweep: " << rows.size() << " rows -> " << out_path << "\n";
  return 0;
}

int cmd_verify(long max_dim, long depth) {
  VerifyResult r = verify_all(max_dim, depth);
  if (!r.ok) {
    std::cout << "FAIL " << r.message << "\n";
    return kExitVerifyFail;
  }
  std::cout << "verify: all checks passed (max_dim=" << max_dim << ", depth=" << depth
            << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert series of SL2 invariants, covariants, and SU2 symplectic quotients"};
  app.require_subcommand(1);

  std::string rep, kind = "invariant", format = "plain", out_path;
  long L = 0, order = 3, max_dim = 14, depth = 24, jobs = 1;

  auto add_rep_kind = [&](CLI::App* sub) {
    sub->add_option("--rep", rep, "degree multiset, e.g. 1+2+2")->required();
    sub->add_option("--kind", kind, "series kind")
        ->check(CLI::IsMember({"invariant", "covariant", "onshell"}));
    sub->add_option("--L", L, "target irreducible for covariants");
  };

  CLI::App* hilbert = app.add_subcommand("hilbert", "print one Hilbert series");
  add_rep_kind(hilbert);
  hilbert->add_option("--format", format, "plain, json, or latex")
      ->check(CLI::IsMember({"plain", "json", "latex"}));

  CLI::App* laurent = app.add_subcommand("laurent", "Laurent data at t = 1");
  add_rep_kind(laurent);
  laurent->add_option("--order", order, "coefficients beyond the leading one");

  CLI::App* sweep = app.add_subcommand("sweep", "CSV survey up to a quotient dimension");
  sweep->add_option("--max-dim", max_dim, "largest dim M_0 to include");
  sweep->add_option("--out", out_path, "output file (default: stdout)");
  sweep->add_option("--jobs", jobs, "worker threads");

  CLI::App* verify = app.add_subcommand("verify", "run the cross-check suites");
  verify->add_option("--max-dim", max_dim, "largest dim M_0 to include");
  verify->add_option("--depth", depth, "series truncation for dimension counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParseError;
  }

  try {
    if (hilbert->parsed()) return cmd_hilbert(rep, kind, L, format);
    if (laurent->parsed()) return cmd_laurent(rep, kind, L, order);
    if (sweep->parsed()) return cmd_sweep(max_dim, out_path, jobs);
    return cmd_verify(max_dim, depth);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIneligible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
}
