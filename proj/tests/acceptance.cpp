// Acceptance suite: every criterion below runs at grid size 4096 and prints
// one pass/fail line. The process exits nonzero if any criterion fails.
//
// Usage: acceptance [--cli <path-to-hpopa-binary>]
// The CLI path enables the end-to-end determinism check (criterion 9); when
// omitted that check falls back to in-process sweeps only.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
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
#include "hpopa/roots.hpp"
#include "hpopa/solver.hpp"
#include "test_util.hpp"

namespace {

using hpopa::Complex;
using hpopa::CorpusKind;
using hpopa::CorpusSpec;
using hpopa::HpFunction;
using hpopa::OpaResult;
using hpopa::SolverOptions;
using hpopa::TaylorPoly;

constexpr int kGrid = 4096;

// Regression locks, frozen after the first accepted run (blaschke corpus
// seed 42, grid 4096). They turn the non-constructive positivity statements
// into drift detectors.
constexpr double kLockedMinAbsW_p3 = 8.7182617506638884;
constexpr double kLockedMinAbsW_p4 = 5.2969840658270568;
constexpr double kLockedCyclicResidual_p3_n8 = 0.4201966164689368;

struct Criterion {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
};

CorpusSpec poly_corpus_spec() {
  CorpusSpec spec;
  spec.kind = CorpusKind::RandomPoly;
  spec.count = 100;
  spec.seed = 1;
  spec.degree_min = 0;
  spec.degree_max = 6;
  spec.min_f0 = 0.1;
  return spec;
}

CorpusSpec blaschke_corpus_spec() {
  CorpusSpec spec;
  spec.kind = CorpusKind::Blaschke;
  spec.count = 50;
  spec.seed = 42;
  spec.degree_min = 1;
  spec.degree_max = 3;
  spec.zero_modulus_min = 0.2;
  spec.zero_modulus_max = 0.8;
  spec.min_f0 = 0.005;
  return spec;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// 1. Oracle equivalence at p = 2, plus the hand-solved instance.
Criterion criterion_oracle_equivalence(const std::vector<HpFunction>& polys) {
  Criterion c;
  SolverOptions cold;
  cold.init = SolverOptions::Init::Zero;
  double worst = 0.0;
  for (const HpFunction& f : polys) {
    for (int n = 0; n <= 4; ++n) {
      const OpaResult direct = hpopa::solve_l2(f, n);
      const OpaResult iterative = hpopa::solve(f, n, 2.0, cold);
      c.require(iterative.converged, "iterative p=2 solve failed to converge");
      worst = std::max(worst,
                       testutil::max_coeff_deviation(direct.coeffs, iterative.coeffs));
    }
  }
  c.require(worst <= 1e-8, "max coefficient deviation " + fmt(worst));

  const HpFunction hand(TaylorPoly({{1, 0}, {-1, 0}}), kGrid);
  const OpaResult res = hpopa::solve(hand, 1, 2.0, cold);
  const auto lin = hpopa::linear_factor(res);
  c.require(lin.has_value(), "hand instance is degenerate");
  if (lin) {
    c.require(std::abs(res.coeffs.coeffs()[0] - Complex{2.0 / 3, 0}) < 1e-9 &&
                  std::abs(res.coeffs.coeffs()[1] - Complex{1.0 / 3, 0}) < 1e-9,
              "hand instance coefficients off");
    c.require(std::abs(lin->w - Complex{-2, 0}) < 1e-8, "hand instance root off");
  }
  c.detail << "max |dc| = " << fmt(worst);
  return c;
}

// 2. Optimality certificates for p in {1.5, 3, 4, 6}.
Criterion criterion_certificates(const std::vector<HpFunction>& polys) {
  Criterion c;
  double worst = 0.0;
  int nonconverged = 0;
  for (double p : {1.5, 3.0, 4.0, 6.0}) {
    for (const HpFunction& f : polys) {
      for (int n = 0; n <= 4; ++n) {
        const OpaResult res = hpopa::solve(f, n, p);
        if (!res.converged) {
          ++nonconverged;
          continue;
        }
        for (double v : res.orth_residuals) worst = std::max(worst, v);
      }
    }
  }
  c.require(worst <= 1e-7, "orthogonality residual " + fmt(worst));
  c.require(nonconverged == 0,
            std::to_string(nonconverged) + " solves failed to converge");
  c.detail << "max residual = " << fmt(worst);
  return c;
}

// 3. Analytic gradient vs central finite differences.
Criterion criterion_gradient(const std::vector<HpFunction>& polys) {
  Criterion c;
  hpopa::Rng rng(77);
  double worst_rel = 0.0;
  int instances = 0;
  for (double p : {2.0, 3.0, 4.0}) {
    for (int t = 0; t < 25; ++t) {
      const HpFunction& f = polys[(t * 7 + static_cast<int>(p)) % polys.size()];
      const int m = rng.uniform_int(1, 4);
      std::vector<Complex> coeffs(static_cast<std::size_t>(m));
      for (Complex& v : coeffs) v = rng.unit_square();
      const TaylorPoly q(coeffs);
      const std::vector<Complex> grad = hpopa::gradient(f, q, p);
      const double h = 1e-5;
      double worst = 0.0, scale = 1e-12;
      for (int k = 0; k < m; ++k) {
        auto phi = [&](Complex delta) {
          std::vector<Complex> cc = coeffs;
          cc[k] += delta;
          return hpopa::objective(f, TaylorPoly(cc), p);
        };
        const double fd_re = (phi({h, 0}) - phi({-h, 0})) / (2 * h);
        const double fd_im = (phi({0, h}) - phi({0, -h})) / (2 * h);
        worst = std::max({worst, std::abs(grad[k].real() - fd_re),
                          std::abs(grad[k].imag() - fd_im)});
        scale = std::max({scale, std::abs(fd_re), std::abs(fd_im)});
      }
      worst_rel = std::max(worst_rel, worst / scale);
      ++instances;
    }
  }
  c.require(worst_rel <= 1e-5, "finite-difference deviation " + fmt(worst_rel));
  c.detail << instances << " instances, max rel dev = " << fmt(worst_rel);
  return c;
}

// 4. Pythagorean inequality audit over seeded orthogonal pairs.
Criterion criterion_pythagorean() {
  Criterion c;
  double min_slack = std::numeric_limits<double>::infinity();
  double worst_p2 = 0.0;
  for (double p : {1.2, 1.5, 2.0, 3.0, 4.0, 7.3}) {
    hpopa::Rng rng(2026);
    int pairs = 0, attempts = 0;
    while (pairs < 1000 && attempts < 1300) {
      ++attempts;
      const TaylorPoly xf = testutil::random_poly(rng, 6, 0.05);
      const TaylorPoly gf = testutil::random_poly(rng, 6);
      const hpopa::BoundaryGrid x = hpopa::sample(xf, kGrid);
      const hpopa::BoundaryGrid g = hpopa::sample(gf, kGrid);
      const hpopa::BoundaryGrid y = hpopa::orthogonalize(x, g, p);
      // A remainder at roundoff scale means g was collinear with x; the
      // inequalities are vacuous equalities there, so redraw.
      if (hpopa::p_norm(y, p) < 1e-12 * hpopa::p_norm(g, p)) continue;
      ++pairs;
      const hpopa::PythagoreanReport rep = hpopa::check_pythagorean(x, y, p);
      min_slack = std::min({min_slack, rep.lower_slack, rep.upper_slack});
      if (p == 2.0)
        worst_p2 = std::max({worst_p2, std::abs(rep.lower_slack),
                             std::abs(rep.upper_slack)});
    }
    c.require(pairs == 1000, "could not assemble 1000 pairs at p = " + fmt(p));
  }
  c.require(min_slack >= -1e-9, "slack " + fmt(min_slack));
  c.require(worst_p2 <= 1e-10, "p = 2 slack magnitude " + fmt(worst_p2));
  c.detail << "min slack = " << fmt(min_slack)
           << ", p=2 max |slack| = " << fmt(worst_p2);
  return c;
}

// 5. Bound audit over the full corpus.
Criterion criterion_bounds(const std::vector<HpFunction>& corpus) {
  Criterion c;
  double min_slack = std::numeric_limits<double>::infinity();
  double worst_collapse = 0.0;
  int checked = 0;
  for (double p : {1.5, 2.0, 3.0, 4.0}) {
    for (const HpFunction& f : corpus) {
      const hpopa::SweepRecord rec = hpopa::audit(f, p, 1);
      if (!rec.converged) {
        c.require(false, "non-convergence in audit at p = " + fmt(p));
        continue;
      }
      for (const hpopa::BoundReport& b : rec.bounds) {
        min_slack = std::min(min_slack, b.slack);
        ++checked;
      }
      if (p == 2.0 && rec.w) {
        for (const hpopa::BoundReport& b : rec.bounds) {
          if (b.name == "root_interval_lower")
            worst_collapse = std::max(worst_collapse, std::abs(b.lhs - std::abs(*rec.w)));
          if (b.name == "root_interval_upper")
            worst_collapse = std::max(worst_collapse, std::abs(b.rhs - std::abs(*rec.w)));
        }
      }
    }
  }
  c.require(min_slack >= -1e-7, "bound slack " + fmt(min_slack));
  c.require(worst_collapse <= 1e-8,
            "p = 2 interval collapse deviation " + fmt(worst_collapse));
  c.detail << checked << " reports, min slack = " << fmt(min_slack)
           << ", p=2 collapse dev = " << fmt(worst_collapse);
  return c;
}

// 6. Closed-form cross-check, including the hand-derived moment quadruple.
Criterion criterion_formulas(const std::vector<HpFunction>& corpus) {
  Criterion c;
  double worst = 0.0;
  int checked = 0;
  for (double p : {2.0, 4.0, 6.0}) {
    for (const HpFunction& f : corpus) {
      const OpaResult res = hpopa::solve(f, 1, p);
      if (!res.converged) continue;
      const auto lin = hpopa::linear_factor(res);
      if (!lin) continue;
      const hpopa::FormulaCrossCheck cc = hpopa::cross_check(f, *lin);
      worst = std::max(worst, cc.max_pairwise_w_deviation);
      ++checked;
    }
  }
  c.require(worst <= 1e-6, "formula deviation " + fmt(worst));

  // Hand-derived instance: f = 1 - z at p = 2 has unnormalized moments
  // (A, B, C, D) = (1, 0, 2, -1), a = 1/3, w = -2, and the linear-system
  // denominator for a degenerates there.
  const HpFunction hand(TaylorPoly({{1, 0}, {-1, 0}}), kGrid);
  const OpaResult res = hpopa::solve(hand, 1, 2.0);
  const auto lin = hpopa::linear_factor(res);
  c.require(lin.has_value(), "hand instance degenerate");
  if (lin) {
    const hpopa::WeightedMoments m =
        hpopa::weighted_moments(hand, lin->source.coeffs, 2.0);
    const double s = m.scale;
    c.require(std::abs(m.f_mean * s - Complex{1, 0}) < 1e-10, "A != 1");
    c.require(std::abs(m.zf_mean * s) < 1e-10, "B != 0");
    c.require(std::abs(m.f_sq_mean * s * s - Complex{2, 0}) < 1e-10, "C != 2");
    c.require(std::abs(m.zbar_f_sq_mean * s * s - Complex{-1, 0}) < 1e-10, "D != -1");
    const hpopa::FormulaCrossCheck cc = hpopa::cross_check(hand, *lin);
    c.require(std::abs(cc.a_solver - Complex{1.0 / 3, 0}) < 1e-9, "a != 1/3");
    c.require(std::abs(cc.w_solver - Complex{-2, 0}) < 1e-8, "w != -2");
    c.require(cc.a.via_system.degenerate,
              "linear-system coefficient formula not flagged degenerate");
    c.require(!cc.w.moment_ratio.degenerate && !cc.w.via_c.degenerate &&
                  !cc.w.via_d.degenerate,
              "root formulas unexpectedly degenerate");
    c.require(cc.max_pairwise_w_deviation < 1e-8, "hand instance deviation");
  }
  c.detail << checked << " instances, max w deviation = " << fmt(worst);
  return c;
}

// 7. Root-separation experiment with regression locks.
Criterion criterion_root_separation(const std::vector<HpFunction>& blaschkes,
                                    const std::vector<HpFunction>& polys) {
  Criterion c;
  const hpopa::SweepResult sweep = hpopa::sweep_roots(blaschkes, {2.0, 3.0, 4.0}, 1, 4);

  // Every root of the p = 2 minimizer lies outside the closed disk. For the
  // inner-function corpus the degree-one minimizer is constant (the Gram
  // basis is orthonormal), so the claim is checked vacuously there and
  // non-vacuously on the polynomial corpus below.
  const auto& s2 = sweep.summary.at(2.0);
  if (s2.min_abs_w) c.require(*s2.min_abs_w >= 1.0 - 1e-6, "blaschke p=2 root inside");
  double poly_min_w2 = std::numeric_limits<double>::infinity();
  for (const HpFunction& f : polys) {
    const OpaResult res = hpopa::solve(f, 1, 2.0);
    if (!res.converged) continue;
    const auto lin = hpopa::linear_factor(res);
    if (!lin) continue;
    poly_min_w2 = std::min(poly_min_w2, std::abs(lin->w));
  }
  c.require(poly_min_w2 >= 1.0 - 1e-6, "poly p=2 min |w| = " + fmt(poly_min_w2));

  // p in {3, 4}: strictly positive minimum, locked after the first run.
  for (double p : {3.0, 4.0}) {
    const auto& s = sweep.summary.at(p);
    c.require(s.nonconverged == 0, "non-convergence at p = " + fmt(p));
    c.require(s.min_abs_w.has_value(), "no non-degenerate instance at p = " + fmt(p));
    if (!s.min_abs_w) continue;
    c.require(*s.min_abs_w > 0.0, "min |w| not positive at p = " + fmt(p));
    const double locked = p == 3.0 ? kLockedMinAbsW_p3 : kLockedMinAbsW_p4;
    if (std::isnan(locked)) {
      c.require(false, "lock not frozen; measured min |w|(p=" + fmt(p) +
                           ") = " + fmt(*s.min_abs_w));
    } else {
      c.require(std::abs(*s.min_abs_w - locked) <= 1e-9,
                "min |w| drifted from lock at p = " + fmt(p) + ": " +
                    fmt(*s.min_abs_w) + " vs " + fmt(locked));
    }
    c.detail << "min |w|(p=" << p << ") = " << fmt(*s.min_abs_w) << "  ";
  }

  // No converged root may undercut the residual floor.
  double worst_margin = std::numeric_limits<double>::infinity();
  for (const hpopa::SweepRecord& rec : sweep.records) {
    if (!rec.converged || !rec.w) continue;
    const double floor = hpopa::root_modulus_lower_bound(rec.residual_norm, rec.p);
    worst_margin = std::min(worst_margin, std::abs(*rec.w) - floor);
  }
  c.require(worst_margin >= -1e-7, "root below residual floor by " + fmt(-worst_margin));
  c.detail << "blaschke p=2 all-degenerate: " << (s2.degenerate == 50 ? "yes" : "no")
           << ", poly p=2 min |w| = " << fmt(poly_min_w2);
  return c;
}

// 8. Cyclicity convergence for f = 1 - z.
Criterion criterion_cyclic() {
  Criterion c;
  const HpFunction f(TaylorPoly({{1, 0}, {-1, 0}}), kGrid);
  for (double p : {2.0, 3.0}) {
    const auto records = hpopa::sweep_cyclic(f, p, 8);
    double prev = 2.0, prev_floor = -1.0;
    for (const hpopa::SweepRecord& rec : records) {
      c.require(rec.converged, "non-convergence in cyclic sweep");
      c.require(rec.residual_norm < prev - 1e-9, "residuals not strictly decreasing");
      const double floor = hpopa::root_modulus_lower_bound(rec.residual_norm, p);
      c.require(floor >= prev_floor - 1e-12, "floor not nondecreasing");
      prev = rec.residual_norm;
      prev_floor = floor;
    }
    if (p == 2.0) {
      // Exact value for this f: the degree-n residual is 1/sqrt(n+2).
      for (const hpopa::SweepRecord& rec : records)
        c.require(std::abs(rec.residual_norm - 1.0 / std::sqrt(rec.n + 2.0)) <= 1e-9,
                  "p=2 residual at n=" + std::to_string(rec.n) + " off closed form");
    } else {
      const double last = records.back().residual_norm;
      if (std::isnan(kLockedCyclicResidual_p3_n8)) {
        c.require(false, "lock not frozen; measured residual(p=3, n=8) = " + fmt(last));
      } else {
        c.require(std::abs(last - kLockedCyclicResidual_p3_n8) <= 1e-9,
                  "p=3 final residual drifted: " + fmt(last));
      }
      c.detail << "residual(p=3, n=8) = " << fmt(last);
    }
  }
  return c;
}

// 9. Determinism: byte-identical CSV bodies across repeated and concurrent
// runs, and across the external CLI when available.
Criterion criterion_determinism(const std::vector<HpFunction>& blaschkes,
                                const std::string& cli_path) {
  Criterion c;
  std::vector<HpFunction> sub(blaschkes.begin(), blaschkes.begin() + 12);
  const std::vector<double> ps{2.0, 3.0};
  const auto run1 = hpopa::sweep_roots(sub, ps, 1, 1);
  const auto run2 = hpopa::sweep_roots(sub, ps, 1, 1);
  const auto run4 = hpopa::sweep_roots(sub, ps, 1, 4);
  c.require(hpopa::csv_body(run1.records) == hpopa::csv_body(run2.records),
            "repeated in-process sweeps differ");
  c.require(hpopa::csv_body(run1.records) == hpopa::csv_body(run4.records),
            "concurrent sweep differs from serial");

  // Full JSON documents agree once the header's timestamp line is dropped.
  auto strip_timestamp = [](const std::string& doc) {
    std::string out;
    std::istringstream in(doc);
    std::string line;
    while (std::getline(in, line))
      if (line.find("\"timestamp\"") == std::string::npos) out += line + '\n';
    return out;
  };
  c.require(strip_timestamp(hpopa::sweep_to_json(run1, "cmd")) ==
                strip_timestamp(hpopa::sweep_to_json(run4, "cmd")),
            "sweep JSON differs beyond the timestamp");

  if (!cli_path.empty()) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "hpopa_acceptance";
    fs::create_directories(dir);
    const fs::path corpus = dir / "corpus.json";
    hpopa::write_text_file(corpus.string(),
                           "{\"kind\":\"blaschke\",\"count\":12,\"seed\":42,"
                           "\"degree_range\":[1,3],\"zero_modulus_range\":[0.2,0.8],"
                           "\"min_f0\":0.005}\n");
    auto run_cli = [&](const fs::path& csv, int threads) {
      std::ostringstream cmd;
      cmd << cli_path << " sweep-roots --corpus " << corpus << " --p 2,3"
          << " --threads " << threads << " --csv " << csv << " > " << (dir / "log.txt");
      return std::system(cmd.str().c_str());
    };
    auto slurp = [](const fs::path& path) {
      std::ifstream in(path, std::ios::binary);
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    };
    const fs::path csv_a = dir / "a.csv", csv_b = dir / "b.csv", csv_c = dir / "c.csv";
    const int rc_a = run_cli(csv_a, 1);
    const int rc_b = run_cli(csv_b, 1);
    const int rc_c = run_cli(csv_c, 4);
    c.require(rc_a == 0 && rc_b == 0 && rc_c == 0, "CLI sweep exited nonzero");
    const std::string body_a = slurp(csv_a);
    c.require(!body_a.empty(), "CLI produced empty CSV");
    c.require(body_a == slurp(csv_b), "repeated CLI sweeps differ");
    c.require(body_a == slurp(csv_c), "threaded CLI sweep differs");
    c.detail << "CLI runs compared byte-for-byte";
  } else {
    c.detail << "CLI path not supplied; in-process checks only";
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<HpFunction> polys = hpopa::generate_corpus(poly_corpus_spec(), kGrid);
  const std::vector<HpFunction> blaschkes =
      hpopa::generate_corpus(blaschke_corpus_spec(), kGrid);
  std::vector<HpFunction> full = polys;
  full.insert(full.end(), blaschkes.begin(), blaschkes.end());

  struct Entry {
    const char* name;
    Criterion result;
  };
  std::vector<Entry> entries;
  entries.push_back({"1 oracle equivalence (p=2)", criterion_oracle_equivalence(polys)});
  entries.push_back({"2 optimality certificates", criterion_certificates(polys)});
  entries.push_back({"3 gradient vs finite differences", criterion_gradient(polys)});
  entries.push_back({"4 pythagorean audit", criterion_pythagorean()});
  entries.push_back({"5 bound audit", criterion_bounds(full)});
  entries.push_back({"6 closed-form cross-check", criterion_formulas(full)});
  entries.push_back({"7 root separation", criterion_root_separation(blaschkes, polys)});
  entries.push_back({"8 cyclicity convergence", criterion_cyclic()});
  entries.push_back({"9 determinism", criterion_determinism(blaschkes, cli_path)});

  bool all_pass = true;
  for (const Entry& e : entries) {
    all_pass = all_pass && e.result.pass;
    const std::string detail = e.result.detail.str();
    std::printf("[%s] criterion %s%s%s\n", e.result.pass ? "PASS" : "FAIL", e.name,
                detail.empty() ? "" : " - ", detail.c_str());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s (%d/%zu criteria, %.1f s)\n", all_pass ? "ACCEPTED" : "REJECTED",
              static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                             [](const Entry& e) { return e.result.pass; })),
              entries.size(), seconds);
  return all_pass ? 0 : 1;
}
