#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hpopa/audit.hpp"
#include "hpopa/boundary.hpp"
#include "hpopa/bounds.hpp"
#include "hpopa/corpus.hpp"
#include "hpopa/fspec.hpp"
#include "hpopa/orthogonality.hpp"
#include "hpopa/records.hpp"
#include "hpopa/solver.hpp"

namespace {

// Exit codes: 0 all checks satisfied, 2 a bound violated beyond tolerance,
// 3 solver non-convergence present, 4 input error.
enum ExitCode { kOk = 0, kBoundViolated = 2, kNonConvergence = 3, kInputError = 4 };

std::vector<double> parse_p_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) throw std::invalid_argument("empty entry in p list");
    out.push_back(std::stod(part));
  }
  if (out.empty()) throw std::invalid_argument("empty p list");
  return out;
}

int exit_code_for(const std::vector<hpopa::SweepRecord>& records) {
  bool violated = false;
  bool nonconverged = false;
  for (const hpopa::SweepRecord& rec : records) {
    nonconverged = nonconverged || !rec.converged;
    for (const hpopa::BoundReport& b : rec.bounds) violated = violated || !b.satisfied;
  }
  if (violated) return kBoundViolated;
  if (nonconverged) return kNonConvergence;
  return kOk;
}

void print_record(const hpopa::SweepRecord& rec) {
  std::printf("f = %s, p = %g, n = %d (grid %d)\n", rec.f_descriptor.c_str(),
              rec.p, rec.n, rec.grid);
  std::printf("  coeffs:");
  for (const hpopa::Complex& c : rec.coeffs.coeffs())
    std::printf(" %s", hpopa::format_complex(c).c_str());
  std::printf("\n  residual p-norm: %.12g\n", rec.residual_norm);
  double worst = 0.0;
  for (double v : rec.orth_residuals) worst = std::max(worst, v);
  std::printf("  max orthogonality residual: %.3g\n", worst);
  if (rec.w)
    std::printf("  a = %s, w = %s, |w| = %.12g\n",
                hpopa::format_complex(*rec.a).c_str(),
                hpopa::format_complex(*rec.w).c_str(), std::abs(*rec.w));
  for (const hpopa::BoundReport& b : rec.bounds)
    std::printf("  bound %-20s lhs %.9g rhs %.9g slack % .3g %s\n",
                b.name.c_str(), b.lhs, b.rhs, b.slack,
                b.satisfied ? "ok" : "VIOLATED");
  if (rec.formulas)
    std::printf("  max pairwise root-formula deviation: %.3g\n",
                rec.formulas->max_pairwise_w_deviation);
  std::printf("  converged: %s (%d iterations)\n", rec.converged ? "yes" : "no",
              rec.iterations);
}

hpopa::SweepRecord record_for_solve(const hpopa::HpFunction& f, double p, int n,
                                    const hpopa::OpaResult& res) {
  hpopa::SweepRecord rec;
  rec.f_descriptor = hpopa::descriptor_of(f);
  rec.p = p;
  rec.n = n;
  rec.grid = f.grid_size();
  rec.coeffs = res.coeffs;
  rec.residual_norm = res.residual_norm;
  rec.orth_residuals = res.orth_residuals;
  rec.converged = res.converged;
  rec.iterations = res.iterations;
  if (n == 1) {
    if (auto lin = hpopa::linear_factor(res)) {
      rec.a = lin->a;
      rec.w = lin->w;
    }
  }
  return rec;
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    out += argv[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal polynomial approximants to 1/f in H^p on the unit "
               "circle: solver, inequality audits, and root-location sweeps"};
  app.require_subcommand(1);

  std::string fspec, corpus_path, plist_text, json_path, csv_path;
  double p = 2.0;
  int n = 1, grid = hpopa::kDefaultGridSize, nmax = 8, threads = 1, trials = 1000;
  std::uint64_t seed = 1;

  CLI::App* cmd_solve = app.add_subcommand("solve", "compute one approximant");
  cmd_solve->add_option("--f", fspec, "function spec (poly:... | blaschke:...)")->required();
  cmd_solve->add_option("--p", p, "exponent in (1, inf)")->required();
  cmd_solve->add_option("--n", n, "degree bound")->required();
  cmd_solve->add_option("--grid", grid, "grid size (power of two, >= 4)");
  cmd_solve->add_option("--json", json_path, "write the JSON record here");

  CLI::App* cmd_audit = app.add_subcommand("audit", "solve and check every applicable bound and formula");
  cmd_audit->add_option("--f", fspec)->required();
  cmd_audit->add_option("--p", p)->required();
  cmd_audit->add_option("--n", n)->required();
  cmd_audit->add_option("--grid", grid);
  cmd_audit->add_option("--json", json_path, "output JSON record")->required();

  CLI::App* cmd_sweep = app.add_subcommand("sweep-roots", "root-location sweep over a corpus");
  cmd_sweep->add_option("--corpus", corpus_path, "corpus spec JSON file")->required();
  cmd_sweep->add_option("--p", plist_text, "comma-separated exponents")->required();
  cmd_sweep->add_option("--n", n, "degree bound (default 1)");
  cmd_sweep->add_option("--grid", grid);
  cmd_sweep->add_option("--threads", threads, "concurrent instances");
  cmd_sweep->add_option("--csv", csv_path, "write sweep CSV here");
  cmd_sweep->add_option("--json", json_path, "write sweep JSON here");

  CLI::App* cmd_cyclic = app.add_subcommand("sweep-cyclic", "degree sweep for a cyclic polynomial");
  cmd_cyclic->add_option("--f", fspec)->required();
  cmd_cyclic->add_option("--p", p)->required();
  cmd_cyclic->add_option("--nmax", nmax)->required();
  cmd_cyclic->add_option("--grid", grid);
  cmd_cyclic->add_option("--csv", csv_path, "write sweep CSV here");

  CLI::App* cmd_pythag = app.add_subcommand("pythag", "Pythagorean inequality audit on random orthogonal pairs");
  cmd_pythag->add_option("--trials", trials, "pairs per exponent");
  cmd_pythag->add_option("--seed", seed, "corpus seed");
  cmd_pythag->add_option("--p", plist_text, "comma-separated exponents")->required();
  cmd_pythag->add_option("--grid", grid);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_solve->parsed()) {
      const hpopa::HpFunction f = hpopa::parse_function_spec(fspec, grid);
      const hpopa::OpaResult res = hpopa::solve(f, n, p);
      const hpopa::SweepRecord rec = record_for_solve(f, p, n, res);
      print_record(rec);
      if (!json_path.empty())
        hpopa::write_text_file(json_path, hpopa::record_to_json(rec) + "\n");
      return res.converged ? kOk : kNonConvergence;
    }

    if (cmd_audit->parsed()) {
      const hpopa::HpFunction f = hpopa::parse_function_spec(fspec, grid);
      const hpopa::SweepRecord rec = hpopa::audit(f, p, n);
      print_record(rec);
      hpopa::write_text_file(json_path, hpopa::record_to_json(rec) + "\n");
      return exit_code_for({rec});
    }

    if (cmd_sweep->parsed()) {
      const hpopa::CorpusSpec spec = hpopa::parse_corpus_file(corpus_path);
      const std::vector<double> p_list = parse_p_list(plist_text);
      const std::vector<hpopa::HpFunction> corpus = hpopa::generate_corpus(spec, grid);
      const hpopa::SweepResult result =
          hpopa::sweep_roots(corpus, p_list, n, threads);
      for (const auto& [pv, s] : result.summary) {
        std::printf("p = %-6g converged %3d, degenerate %3d, nonconverged %3d",
                    pv, s.converged, s.degenerate, s.nonconverged);
        if (s.min_abs_w) std::printf(", min |w| = %.12g", *s.min_abs_w);
        std::printf("\n");
      }
      if (!csv_path.empty())
        hpopa::write_text_file(csv_path, hpopa::sweep_to_csv(result.records));
      if (!json_path.empty())
        hpopa::write_text_file(json_path,
                               hpopa::sweep_to_json(result, join_args(argc, argv)) + "\n");
      return exit_code_for(result.records);
    }

    if (cmd_cyclic->parsed()) {
      const hpopa::HpFunction f = hpopa::parse_function_spec(fspec, grid);
      const std::vector<hpopa::SweepRecord> records = hpopa::sweep_cyclic(f, p, nmax);
      bool monotone = true;
      for (std::size_t i = 0; i + 1 < records.size(); ++i)
        monotone = monotone &&
                   records[i + 1].residual_norm <= records[i].residual_norm + 1e-12;
      for (const hpopa::SweepRecord& rec : records)
        std::printf("n = %2d residual %.12g root-floor %.12g %s\n", rec.n,
                    rec.residual_norm,
                    hpopa::root_modulus_lower_bound(rec.residual_norm, p),
                    rec.converged ? "" : "(not converged)");
      std::printf("residuals nonincreasing: %s\n", monotone ? "yes" : "NO");
      if (!csv_path.empty())
        hpopa::write_text_file(csv_path, hpopa::sweep_to_csv(records));
      const int code = exit_code_for(records);
      return monotone ? code : kBoundViolated;
    }

    if (cmd_pythag->parsed()) {
      const std::vector<double> p_list = parse_p_list(plist_text);
      bool any_violation = false;
      for (double pv : p_list) {
        hpopa::Rng rng(seed);
        double min_lower = std::numeric_limits<double>::infinity();
        double min_upper = min_lower;
        for (int t = 0; t < trials; ++t) {
          std::vector<hpopa::Complex> xc(7), gc(7);
          for (auto& c : xc) c = rng.unit_square();
          for (auto& c : gc) c = rng.unit_square();
          const hpopa::BoundaryGrid x = hpopa::sample(hpopa::TaylorPoly(xc), grid);
          const hpopa::BoundaryGrid g = hpopa::sample(hpopa::TaylorPoly(gc), grid);
          const hpopa::BoundaryGrid y = hpopa::orthogonalize(x, g, pv);
          if (hpopa::p_norm(y, pv) < 1e-12 * hpopa::p_norm(g, pv)) continue;
          const hpopa::PythagoreanReport rep = hpopa::check_pythagorean(x, y, pv);
          min_lower = std::min(min_lower, rep.lower_slack);
          min_upper = std::min(min_upper, rep.upper_slack);
        }
        const bool ok = min_lower >= -1e-9 && min_upper >= -1e-9;
        any_violation = any_violation || !ok;
        std::printf("p = %-6g min lower slack % .3e, min upper slack % .3e %s\n",
                    pv, min_lower, min_upper, ok ? "ok" : "VIOLATED");
      }
      return any_violation ? kBoundViolated : kOk;
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kInputError;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kInputError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return kOk;
}
