#include "rankdec/serdes.hpp"

#include <stdexcept>

namespace rankdec::serdes {

namespace {

std::uint64_t parse_hex(const std::string& s) {
  if (s.size() < 3 || (s.substr(0, 2) != "0x" && s.substr(0, 2) != "0X"))
    throw std::invalid_argument("serdes: expected a 0x... literal, got '" + s + "'");
  return std::stoull(s.substr(2), nullptr, 16);
}

}  // namespace

json field_to_json(const gf::Field& f) {
  return {{"m", f.degree()}, {"modulus", gf::format_modulus(f)}};
}

std::shared_ptr<const gf::Field> field_from_json(const json& j) {
  int m = j.at("m").get<int>();
  const json& mod = j.at("modulus");
  std::uint64_t bits =
      mod.is_string() ? parse_hex(mod.get<std::string>()) : mod.get<std::uint64_t>();
  return std::make_shared<gf::Field>(m, bits);
}

json vector_to_json(std::span<const gf::Element> v) {
  json a = json::array();
  for (const gf::Element& e : v) a.push_back(gf::format_element(e));
  return a;
}

std::vector<gf::Element> vector_from_json(const gf::Field& f, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("serdes: vector must be an array");
  std::vector<gf::Element> v;
  for (const json& e : j) v.push_back(gf::parse_element(f, e.get<std::string>()));
  return v;
}

json matrix_to_json(const linalg::Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    rows.push_back(vector_to_json(r));
  }
  return rows;
}

json codespec_to_json(const code::CodeSpec& c) {
  return {{"field", field_to_json(c.field())},
          {"sigma_power", c.aut().s},
          {"h", vector_to_json(c.h())},
          {"T", c.t_set()}};
}

code::CodeSpec codespec_from_json(const json& j) {
  auto field = field_from_json(j.at("field"));
  int s = j.value("sigma_power", 1);
  gf::Automorphism sigma(*field, s);
  std::vector<gf::Element> h;
  const json& hj = j.at("h");
  if (hj.is_object() && hj.contains("normal_from")) {
    gf::Element alpha = gf::parse_element(*field, hj.at("normal_from").get<std::string>());
    for (int i = 0; i < sigma.order; ++i) h.push_back(sigma.apply(alpha, i));
  } else {
    h = vector_from_json(*field, hj);
  }
  std::vector<int> t = j.at("T").get<std::vector<int>>();
  return code::CodeSpec(std::move(field), s, std::move(h), t);
}

json pattern_to_json(const bounds::Pattern& p) {
  return {{"b", p.b}, {"t1", p.t1}, {"t2", p.t2}, {"delta", p.delta}, {"ks", p.ks}};
}

bounds::Pattern pattern_from_json(const json& j) {
  return bounds::Pattern(j.at("b").get<long long>(), j.at("t1").get<long long>(),
                         j.at("t2").get<long long>(), j.at("delta").get<int>(),
                         j.value("ks", std::vector<int>{0}));
}

json certificate_to_json(const bounds::BoundCertificate& c) {
  return {{"kind", c.kind == bounds::BoundCertificate::Kind::kHartmannTzeng
                       ? "HartmannTzeng"
                       : "Roos"},
          {"value", c.value},
          {"pattern", pattern_to_json(c.pattern)}};
}

json skewpoly_to_json(const skew::SkewPoly& p) {
  return {{"twist", {{"sigma_power", p.twist().aut.s}, {"t", p.twist().t}}},
          {"coeffs", vector_to_json(p.coeffs())}};
}

json outcome_to_json(const decoder::DecodeOutcome& o) {
  json j;
  if (o.success()) {
    j["status"] = "success";
    j["codeword"] = vector_to_json(o.codeword);
    j["error"] = vector_to_json(o.error);
    j["nu"] = o.nu;
    j["epsilon"] = vector_to_json(o.epsilon);
    json etas = json::array();
    for (const auto& eta : o.eta_blocks) etas.push_back(vector_to_json(eta));
    j["eta"] = etas;
  } else {
    j["status"] = "failure";
    j["kind"] = decoder::failure_kind_name(o.failure->kind);
    j["observed_length"] = o.failure->observed_length;
    if (o.failure->kernel_dim >= 0) j["kernel_dimension"] = o.failure->kernel_dim;
    j["block"] = o.failure->block;
  }
  if (!o.sfsr.empty()) j["sfsr"] = vector_to_json(o.sfsr);
  return j;
}

}  // namespace rankdec::serdes
