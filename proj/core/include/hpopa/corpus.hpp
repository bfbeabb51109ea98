#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hpopa/types.hpp"

namespace hpopa {

enum class CorpusKind { RandomPoly, Blaschke };

/// Deterministic corpus description: the same spec always produces the same
/// functions, byte for byte. RandomPoly draws coefficients uniformly from
/// the square [-1,1] x [-1,1], re-drawing the constant term until
/// |f(0)| >= min_f0. Blaschke draws zeros uniformly from the annulus
/// zero_modulus_min <= |z| <= zero_modulus_max (bounded away from 0 and 1),
/// re-drawing the zero set until |f(0)| >= min_f0.
struct CorpusSpec {
  CorpusKind kind = CorpusKind::RandomPoly;
  int count = 0;
  std::uint64_t seed = 0;
  int degree_min = 0;
  int degree_max = 0;
  double zero_modulus_min = 0.2;
  double zero_modulus_max = 0.8;
  double min_f0 = 0.1;
};

/// Throws when the spec cannot be satisfied after 1000 rejections per draw.
std::vector<HpFunction> generate_corpus(const CorpusSpec& spec, int grid_size);

/// mt19937_64 behind a fixed integer-to-double mapping. The engine is
/// bit-exact by the standard; avoiding std::uniform_real_distribution keeps
/// the stream identical across standard library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double unit() { return static_cast<double>(eng_() >> 11) * 0x1p-53; }
  double range(double a, double b) { return a + (b - a) * unit(); }
  Complex unit_square() { return {range(-1.0, 1.0), range(-1.0, 1.0)}; }
  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(unit() * static_cast<double>(hi - lo + 1));
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace hpopa
