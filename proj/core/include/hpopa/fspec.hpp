#pragma once

#include <string>
#include <string_view>

#include "hpopa/corpus.hpp"
#include "hpopa/types.hpp"

namespace hpopa {

// Function-spec grammar: "poly:c0,c1,..." or "blaschke:z1,z2,..." with
// complex literals of the form a+bi (e.g. 1, -0.5, 0.3+0.4i, -2i, i).

Complex parse_complex(std::string_view text);
std::string format_complex(Complex value);

HpFunction parse_function_spec(const std::string& spec, int grid_size);

/// Round-trippable spec string for a corpus or parsed function.
std::string descriptor_of(const HpFunction& f);

/// Reads a corpus spec from a JSON file:
/// {"kind":"blaschke","count":50,"seed":42,"degree_range":[1,3],
///  "zero_modulus_range":[0.2,0.8],"min_f0":0.05}
CorpusSpec parse_corpus_file(const std::string& path);

}  // namespace hpopa
