#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "hodge/arrangement.hpp"
#include "hodge/report.hpp"

using namespace hodge;

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return static_cast<int>(ExitCode::Input);
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hodge ideals of hypersurfaces via total-order Groebner bases"};
  app.require_subcommand(1);

  JobSpec job;
  std::string vars, weights, out_path, bfunction;
  std::vector<std::string> pins;
  bool no_timings = false;
  auto* an = app.add_subcommand("analyze", "run the full pipeline on one polynomial");
  an->add_option("--vars", vars, "comma-separated variable names")->required();
  an->add_option("--poly", job.poly, "polynomial text")->required();
  an->add_option("--bfunction", bfunction, "injected Bernstein-Sato polynomial in s");
  an->add_option("--weights", weights, "weights for the local-cohomology root criterion");
  an->add_flag("--locally-pwh", job.locally_pwh, "assert f is positively weighted homogeneous locally everywhere");
  an->add_option("--max-level", job.max_level, "highest level K (default max(n-2, 0))")->check(CLI::NonNegativeNumber);
  an->add_flag("--arrangement", job.arrangement, "poly is a product of linear forms; compare with the flat formula");
  an->add_option("--pin", pins, "hypothesis pin name=value:source, e.g. parametrically_prime=prime:paper");
  an->add_option("--budget", job.budget, "S-pair reductions allowed per Groebner basis (0 = unlimited)");
  an->add_option("--out", out_path, "report file (default stdout)");
  an->add_flag("--no-timings", no_timings, "omit timing lines");

  std::string corpus_dir;
  unsigned workers = std::max(1u, std::min(4u, std::thread::hardware_concurrency()));
  auto* co = app.add_subcommand("corpus", "run every fixture in a directory");
  co->add_option("dir", corpus_dir, "fixture directory")->required();
  co->add_option("--jobs", workers, "parallel workers")->check(CLI::PositiveNumber);

  std::string oracle_vars, forms;
  auto* orc = app.add_subcommand("oracle", "multiplier ideal of a central arrangement from its flats");
  orc->add_option("--vars", oracle_vars, "comma-separated variable names")->required();
  orc->add_option("--arrangement", forms, "comma-separated linear forms")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::Input);
  }

  try {
    if (*an) {
      job.vars = split_list(vars);
      if (!bfunction.empty()) job.bfunction = bfunction;
      if (!weights.empty()) {
        std::vector<Rational> w;
        for (const auto& x : split_list(weights)) w.push_back(parse_rational(x));
        job.weights = w;
      }
      for (const auto& p : pins) job.pins.push_back(parse_pin(p));
      ReportDocument doc = run_job(job);
      int rc = write_out(doc.text(!no_timings), out_path);
      return rc ? rc : static_cast<int>(doc.exit_code);
    }
    if (*co) {
      CorpusResult r = run_corpus(corpus_dir, workers);
      std::cout << r.table();
      return r.all_pass() ? 0 : static_cast<int>(ExitCode::Failure);
    }
    if (*orc) {
      Ring R = PolyRing::make(split_list(oracle_vars));
      std::vector<Polynomial> ls;
      for (const auto& s : split_list(forms)) ls.push_back(parse_polynomial(s, R));
      Arrangement A = make_arrangement(ls);
      for (const auto& F : flats(A).flats) {
        std::cout << "flat rank " << F.rank << " m " << F.multiplicity() << " (";
        for (std::size_t i = 0; i < F.span.size(); ++i) std::cout << (i ? ", " : "") << F.span[i].to_string();
        std::cout << ")\n";
      }
      std::cout << "I_0: " << mustata_multiplier_ideal(A).to_string() << "\n";
      return 0;
    }
  } catch (const HypothesisFailure& e) {
    std::cerr << "hypothesis failure: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Hypothesis);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Budget);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Input);
  }
  return 0;
}
