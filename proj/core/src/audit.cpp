#include "hpopa/audit.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hpopa/boundary.hpp"
#include "hpopa/fspec.hpp"
#include "hpopa/roots.hpp"

namespace hpopa {

namespace {

std::string make_digest(const std::string& descriptor, double p, int n) {
  std::ostringstream out;
  out << "f=" << descriptor << ";p=" << p << ";n=" << n;
  return out.str();
}

void push(std::vector<BoundReport>& into, BoundReport rep,
          const std::string& digest) {
  rep.inputs_digest = digest;
  into.push_back(std::move(rep));
}

// Unit-p-norm copy for the interpolation estimate. Blaschke products are
// already unimodular on the boundary; polynomials are rescaled exactly.
HpFunction normalized_copy(const HpFunction& f, double p) {
  const double s = p_norm(f.grid(), p);
  if (const TaylorPoly* poly = f.poly())
    return HpFunction(poly->scaled(Complex{1.0 / s, 0.0}), f.grid_size());
  return f;
}

SweepRecord base_record(const HpFunction& f, double p, int n,
                        const OpaResult& res, int instance_id,
                        std::string descriptor) {
  SweepRecord rec;
  rec.instance_id = instance_id;
  rec.f_descriptor = std::move(descriptor);
  rec.p = p;
  rec.n = n;
  rec.grid = f.grid_size();
  rec.coeffs = res.coeffs;
  rec.residual_norm = res.residual_norm;
  rec.orth_residuals = res.orth_residuals;
  rec.converged = res.converged;
  rec.iterations = res.iterations;
  return rec;
}

// Compares the roots of the computed minimizer lying strictly inside the
// open disk against the residual floor sqrt(1 - residual^p). No report when
// every root is outside.
void check_inside_roots(SweepRecord& rec, const std::vector<Complex>& roots,
                        double residual_norm, double p,
                        const std::string& digest) {
  const double floor = root_modulus_lower_bound(residual_norm, p);
  double min_inside = std::numeric_limits<double>::infinity();
  for (const Complex& z : roots) min_inside = std::min(min_inside, std::abs(z));
  if (!(min_inside < 1.0)) return;
  BoundReport rep;
  rep.name = "root_modulus_lower";
  rep.lhs = floor;
  rep.rhs = min_inside;
  rep.slack = min_inside - floor;
  rep.satisfied = rep.slack >= -kDefaultBoundTol;
  push(rec.bounds, std::move(rep), digest);
}

}  // namespace

SweepRecord audit(const HpFunction& f, double p, int n, const SolverOptions& opts,
                  int instance_id, std::string descriptor) {
  if (f.value_at_zero() == Complex{0.0, 0.0})
    throw std::invalid_argument("audit: requires f(0) != 0");
  if (descriptor.empty()) descriptor = descriptor_of(f);

  const OpaResult res = solve(f, n, p, opts);
  const OpaResult res0 = n == 0 ? res : solve(f, 0, p, opts);

  SweepRecord rec = base_record(f, p, n, res, instance_id, std::move(descriptor));
  const std::string digest = make_digest(rec.f_descriptor, p, n);

  if (res0.converged) {
    const Complex lambda = res0.coeffs.at_zero();
    push(rec.bounds, deg0_upper_simple(f, p, lambda), digest);
    push(rec.bounds, deg0_upper_mvt(f, p, lambda), digest);
    push(rec.bounds, deg0_lower(f, p, lambda), digest);
  }

  if (res.converged && n == 1) {
    if (const std::optional<LinearOpa> lin = linear_factor(res)) {
      rec.a = lin->a;
      rec.w = lin->w;
      const double abs_w = std::abs(lin->w);

      auto [lo, hi] = root_interval(f, *lin, p);
      push(rec.bounds, std::move(lo), digest);
      push(rec.bounds, std::move(hi), digest);
      if (abs_w > 1e-12)
        push(rec.bounds, leading_coeff_bound(f, *lin, p), digest);
      if (std::optional<BoundReport> rep = linear_factor_norm_bound(f, *lin, p))
        push(rec.bounds, std::move(*rep), digest);
      if (abs_w > 1e-12 && abs_w < 1.0) {
        // Q = Q0 (1 - z/w) with Q0 = -a w.
        const double q0f = std::abs(lin->a * lin->w) * p_norm(f.grid(), p);
        const double bound = diff_quotient_root_bound(
            q0f, res.residual_norm);
        BoundReport rep;
        rep.name = "diff_quotient_root";
        rep.lhs = bound;
        rep.rhs = abs_w;
        rep.slack = abs_w - bound;
        rep.satisfied = rep.slack >= -kDefaultBoundTol;
        push(rec.bounds, std::move(rep), digest);
      }
      check_inside_roots(rec, {lin->w}, res.residual_norm, p, digest);
      rec.formulas = cross_check(f, *lin);
    }
  } else if (res.converged && n >= 2) {
    const TaylorPoly trimmed = res.coeffs.trimmed();
    if (trimmed.degree() >= 1)
      check_inside_roots(rec, polynomial_roots(trimmed), res.residual_norm, p,
                         digest);
  }

  if (res.converged && p > 2.0) {
    const HpFunction fn = normalized_copy(f, p);
    push(rec.bounds, norm_interpolation_check(fn, p, 2.0), digest);
    push(rec.bounds, norm_interpolation_check(fn, p, 0.5 * (p + 2.0)), digest);
  }

  return rec;
}

SweepResult sweep_roots(const std::vector<HpFunction>& corpus,
                        const std::vector<double>& p_list, int n, int threads,
                        const SolverOptions& opts) {
  SweepResult result;
  const std::size_t total = corpus.size() * p_list.size();
  result.records.resize(total);

  auto run_task = [&](std::size_t flat) {
    const std::size_t pi = flat / corpus.size();
    const std::size_t idx = flat % corpus.size();
    result.records[flat] =
        audit(corpus[idx], p_list[pi], n, opts, static_cast<int>(idx),
              std::string{});
  };

  if (threads <= 1) {
    for (std::size_t flat = 0; flat < total; ++flat) run_task(flat);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min<int>(threads, static_cast<int>(total));
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t flat = next.fetch_add(1); flat < total;
             flat = next.fetch_add(1))
          run_task(flat);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  for (double p : p_list) result.summary[p] = PerPSummary{};
  for (const SweepRecord& rec : result.records) {
    PerPSummary& s = result.summary[rec.p];
    if (!rec.converged) {
      ++s.nonconverged;
      continue;
    }
    ++s.converged;
    if (!rec.w) {
      ++s.degenerate;
      continue;
    }
    const double abs_w = std::abs(*rec.w);
    if (!s.min_abs_w || abs_w < *s.min_abs_w) s.min_abs_w = abs_w;
  }
  return result;
}

std::vector<SweepRecord> sweep_cyclic(const HpFunction& f, double p, int n_max,
                                      const SolverOptions& opts) {
  const TaylorPoly* poly = f.poly();
  if (!poly)
    throw std::invalid_argument("sweep_cyclic: f must be a polynomial");
  for (const Complex& z : polynomial_roots(poly->trimmed())) {
    if (std::abs(z) < 1.0 - 1e-9)
      throw std::invalid_argument(
          "sweep_cyclic: f has a zero inside the open disk (not cyclic)");
  }

  std::vector<SweepRecord> records;
  records.reserve(static_cast<std::size_t>(n_max) + 1);
  const std::string descriptor = descriptor_of(f);
  for (int n = 0; n <= n_max; ++n) {
    const OpaResult res = solve(f, n, p, opts);
    SweepRecord rec = base_record(f, p, n, res, n, descriptor);
    const std::string digest = make_digest(rec.f_descriptor, p, n);
    const TaylorPoly trimmed = res.coeffs.trimmed();
    if (res.converged && trimmed.degree() >= 1)
      check_inside_roots(rec, polynomial_roots(trimmed), res.residual_norm, p,
                         digest);
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace hpopa
