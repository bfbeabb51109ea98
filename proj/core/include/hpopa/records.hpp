#pragma once

#include <string>
#include <vector>

#include "hpopa/audit.hpp"

namespace hpopa {

// JSON record schema (stable field order):
// {"schema_version":1,"p":...,"n":...,"grid":...,"coeffs":[[re,im],...],
//  "residual_pnorm":...,"orth_residuals":[...],"a":[re,im]|null,
//  "w":[re,im]|null,"bounds":[{"name","lhs","rhs","slack","satisfied"}],
//  "formulas":{...}|null,"converged":...,"iterations":...}

/// Single record object, exactly the schema above.
std::string record_to_json(const SweepRecord& rec, int indent = 2);

/// Sweep document: a header (the only place a timestamp appears), the per-p
/// summary, and the records, each prefixed with instance_id/f_descriptor.
std::string sweep_to_json(const SweepResult& result,
                          const std::string& command_line);

std::string csv_header();
/// Data rows only, no header; repeated runs with identical inputs are
/// byte-identical.
std::string csv_body(const std::vector<SweepRecord>& records);
std::string sweep_to_csv(const std::vector<SweepRecord>& records);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace hpopa
