#include "hpopa/records.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace hpopa {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json complex_or_null(const std::optional<Complex>& v) {
  if (!v) return nullptr;
  return ordered_json::array({v->real(), v->imag()});
}

ordered_json formula_value(const FormulaValue& v) {
  if (v.degenerate) return nullptr;
  return ordered_json::array({v.value.real(), v.value.imag()});
}

ordered_json record_body(const SweepRecord& rec) {
  ordered_json j;
  j["schema_version"] = 1;
  j["p"] = rec.p;
  j["n"] = rec.n;
  j["grid"] = rec.grid;
  ordered_json coeffs = ordered_json::array();
  for (const Complex& c : rec.coeffs.coeffs())
    coeffs.push_back(ordered_json::array({c.real(), c.imag()}));
  j["coeffs"] = std::move(coeffs);
  j["residual_pnorm"] = rec.residual_norm;
  j["orth_residuals"] = rec.orth_residuals;
  j["a"] = complex_or_null(rec.a);
  j["w"] = complex_or_null(rec.w);
  ordered_json bounds = ordered_json::array();
  for (const BoundReport& b : rec.bounds) {
    ordered_json jb;
    jb["name"] = b.name;
    jb["lhs"] = b.lhs;
    jb["rhs"] = b.rhs;
    jb["slack"] = b.slack;
    jb["satisfied"] = b.satisfied;
    bounds.push_back(std::move(jb));
  }
  j["bounds"] = std::move(bounds);
  if (rec.formulas) {
    const FormulaCrossCheck& fc = *rec.formulas;
    ordered_json jf;
    jf["w_moment_ratio"] = formula_value(fc.w.moment_ratio);
    jf["w_via_c"] = formula_value(fc.w.via_c);
    jf["w_via_d"] = formula_value(fc.w.via_d);
    jf["a_via_system"] = formula_value(fc.a.via_system);
    jf["a_closed_form"] = formula_value(fc.a.closed_form);
    jf["w_solver"] = ordered_json::array({fc.w_solver.real(), fc.w_solver.imag()});
    jf["a_solver"] = ordered_json::array({fc.a_solver.real(), fc.a_solver.imag()});
    jf["scale"] = fc.scale;
    jf["weight_valid"] = fc.weight_valid;
    jf["max_pairwise_w_deviation"] = fc.max_pairwise_w_deviation;
    j["formulas"] = std::move(jf);
  } else {
    j["formulas"] = nullptr;
  }
  j["converged"] = rec.converged;
  j["iterations"] = rec.iterations;
  return j;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string iso_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace

std::string record_to_json(const SweepRecord& rec, int indent) {
  return record_body(rec).dump(indent);
}

std::string sweep_to_json(const SweepResult& result,
                          const std::string& command_line) {
  ordered_json doc;
  ordered_json header;
  header["schema_version"] = 1;
  header["timestamp"] = iso_timestamp();  // isolated here; records are stable
  header["command"] = command_line;
  doc["header"] = std::move(header);

  ordered_json summary = ordered_json::array();
  for (const auto& [p, s] : result.summary) {
    ordered_json js;
    js["p"] = p;
    js["min_abs_w"] = s.min_abs_w ? ordered_json(*s.min_abs_w) : ordered_json(nullptr);
    js["converged"] = s.converged;
    js["degenerate"] = s.degenerate;
    js["nonconverged"] = s.nonconverged;
    summary.push_back(std::move(js));
  }
  doc["summary"] = std::move(summary);

  ordered_json records = ordered_json::array();
  for (const SweepRecord& rec : result.records) {
    ordered_json jr;
    jr["instance_id"] = rec.instance_id;
    jr["f_descriptor"] = rec.f_descriptor;
    jr.update(record_body(rec));
    records.push_back(std::move(jr));
  }
  doc["records"] = std::move(records);
  return doc.dump(2);
}

std::string csv_header() {
  return "instance_id,f_descriptor,p,n,residual,a_re,a_im,w_re,w_im,w_abs,"
         "min_bound_slack,converged";
}

std::string csv_body(const std::vector<SweepRecord>& records) {
  std::string out;
  for (const SweepRecord& rec : records) {
    out += std::to_string(rec.instance_id);
    out += ",\"" + rec.f_descriptor + "\",";
    out += fmt(rec.p);
    out += ',';
    out += std::to_string(rec.n);
    out += ',';
    out += fmt(rec.residual_norm);
    out += ',';
    if (rec.a) {
      out += fmt(rec.a->real());
      out += ',';
      out += fmt(rec.a->imag());
    } else {
      out += ',';
    }
    out += ',';
    if (rec.w) {
      out += fmt(rec.w->real());
      out += ',';
      out += fmt(rec.w->imag());
      out += ',';
      out += fmt(std::abs(*rec.w));
    } else {
      out += ",,";
    }
    out += ',';
    if (!rec.bounds.empty()) {
      double min_slack = rec.bounds.front().slack;
      for (const BoundReport& b : rec.bounds) min_slack = std::min(min_slack, b.slack);
      out += fmt(min_slack);
    }
    out += ',';
    out += rec.converged ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string sweep_to_csv(const std::vector<SweepRecord>& records) {
  return csv_header() + "\n" + csv_body(records);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace hpopa
