#include "hpopa/fspec.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace hpopa {

namespace {

double parse_real(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty numeric literal");
  std::size_t consumed = 0;
  double value;
  try {
    value = std::stod(std::string(text), &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad numeric literal: " + std::string(text));
  }
  if (consumed != text.size())
    throw std::invalid_argument("bad numeric literal: " + std::string(text));
  return value;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

Complex parse_complex(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty complex literal");

  if (text.back() != 'i' && text.back() != 'I') return {parse_real(text), 0.0};

  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not a leading sign and not an exponent sign.
  std::size_t sign_pos = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    const char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      sign_pos = i;
      break;
    }
  }
  if (sign_pos == std::string_view::npos) {
    // Pure imaginary: "i", "-i", "2i", "-0.5i".
    if (body.empty() || body == "+") return {0.0, 1.0};
    if (body == "-") return {0.0, -1.0};
    return {0.0, parse_real(body)};
  }
  const double re = parse_real(body.substr(0, sign_pos));
  std::string_view imag = body.substr(sign_pos);
  if (imag == "+") return {re, 1.0};
  if (imag == "-") return {re, -1.0};
  return {re, parse_real(imag)};
}

std::string format_complex(Complex value) {
  if (value.imag() == 0.0) return format_real(value.real());
  std::string out = format_real(value.real());
  out += value.imag() < 0.0 ? "-" : "+";
  out += format_real(std::abs(value.imag()));
  out += 'i';
  return out;
}

HpFunction parse_function_spec(const std::string& spec, int grid_size) {
  const std::string_view view(spec);
  constexpr std::string_view kPoly = "poly:";
  constexpr std::string_view kBlaschke = "blaschke:";
  if (view.starts_with(kPoly)) {
    std::vector<Complex> coeffs;
    for (std::string_view part : split(view.substr(kPoly.size()), ','))
      coeffs.push_back(parse_complex(part));
    return HpFunction(TaylorPoly(std::move(coeffs)), grid_size);
  }
  if (view.starts_with(kBlaschke)) {
    std::vector<Complex> zeros;
    for (std::string_view part : split(view.substr(kBlaschke.size()), ','))
      zeros.push_back(parse_complex(part));
    return HpFunction(BlaschkeProduct(std::move(zeros)), grid_size);
  }
  throw std::invalid_argument("function spec must start with poly: or blaschke:");
}

std::string descriptor_of(const HpFunction& f) {
  std::string out;
  if (const TaylorPoly* p = f.poly()) {
    out = "poly:";
    for (std::size_t i = 0; i < p->coeffs().size(); ++i) {
      if (i) out += ',';
      out += format_complex(p->coeffs()[i]);
    }
    if (p->coeffs().empty()) out += "0";
  } else {
    const BlaschkeProduct* b = f.blaschke();
    out = "blaschke:";
    for (std::size_t i = 0; i < b->zeros().size(); ++i) {
      if (i) out += ',';
      out += format_complex(b->zeros()[i]);
    }
  }
  return out;
}

CorpusSpec parse_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open corpus file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw std::invalid_argument("corpus file parse error: " + std::string(e.what()));
  }

  CorpusSpec spec;
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "random_poly") spec.kind = CorpusKind::RandomPoly;
  else if (kind == "blaschke") spec.kind = CorpusKind::Blaschke;
  else throw std::invalid_argument("corpus kind must be random_poly or blaschke");

  spec.count = doc.at("count").get<int>();
  spec.seed = doc.at("seed").get<std::uint64_t>();
  const auto degree_range = doc.at("degree_range");
  spec.degree_min = degree_range.at(0).get<int>();
  spec.degree_max = degree_range.at(1).get<int>();
  if (doc.contains("zero_modulus_range")) {
    spec.zero_modulus_min = doc["zero_modulus_range"].at(0).get<double>();
    spec.zero_modulus_max = doc["zero_modulus_range"].at(1).get<double>();
  }
  if (doc.contains("min_f0")) spec.min_f0 = doc["min_f0"].get<double>();
  return spec;
}

}  // namespace hpopa
