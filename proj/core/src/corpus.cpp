#include "hpopa/corpus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hpopa {

namespace {

constexpr int kMaxRejections = 1000;

TaylorPoly draw_poly(Rng& rng, const CorpusSpec& spec) {
  const int degree = rng.uniform_int(spec.degree_min, spec.degree_max);
  std::vector<Complex> coeffs(static_cast<std::size_t>(degree) + 1);
  for (Complex& c : coeffs) c = rng.unit_square();
  int rejections = 0;
  while (std::abs(coeffs[0]) < spec.min_f0) {
    if (++rejections > kMaxRejections)
      throw std::runtime_error("generate_corpus: cannot satisfy min_f0 for random_poly");
    coeffs[0] = rng.unit_square();
  }
  return TaylorPoly(std::move(coeffs));
}

BlaschkeProduct draw_blaschke(Rng& rng, const CorpusSpec& spec) {
  const int degree = rng.uniform_int(std::max(1, spec.degree_min), spec.degree_max);
  for (int attempt = 0; attempt <= kMaxRejections; ++attempt) {
    std::vector<Complex> zeros(static_cast<std::size_t>(degree));
    double f0_mag = 1.0;
    for (Complex& z : zeros) {
      const double mod = rng.range(spec.zero_modulus_min, spec.zero_modulus_max);
      const double angle = rng.range(0.0, 2.0 * std::numbers::pi);
      z = std::polar(mod, angle);
      f0_mag *= mod;
    }
    if (f0_mag >= spec.min_f0) return BlaschkeProduct(std::move(zeros));
  }
  throw std::runtime_error("generate_corpus: cannot satisfy min_f0 for blaschke");
}

void validate(const CorpusSpec& spec) {
  if (spec.count < 0) throw std::invalid_argument("corpus count must be nonnegative");
  if (spec.degree_min < 0 || spec.degree_max < spec.degree_min)
    throw std::invalid_argument("corpus degree range invalid");
  if (spec.kind == CorpusKind::Blaschke) {
    if (!(spec.zero_modulus_min > 0.0) || !(spec.zero_modulus_max < 1.0) ||
        spec.zero_modulus_min > spec.zero_modulus_max)
      throw std::invalid_argument(
          "blaschke zero moduli must satisfy 0 < min <= max < 1");
  }
  if (spec.min_f0 < 0.0) throw std::invalid_argument("min_f0 must be nonnegative");
}

}  // namespace

std::vector<HpFunction> generate_corpus(const CorpusSpec& spec, int grid_size) {
  validate(spec);
  Rng rng(spec.seed);
  std::vector<HpFunction> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i) {
    if (spec.kind == CorpusKind::RandomPoly)
      out.emplace_back(draw_poly(rng, spec), grid_size);
    else
      out.emplace_back(draw_blaschke(rng, spec), grid_size);
  }
  return out;
}

}  // namespace hpopa
