#ifndef RANKDEC_SERDES_HPP
#define RANKDEC_SERDES_HPP

#include <memory>
#include <span>

#include "json.hpp"
#include "rankdec/bounds.hpp"
#include "rankdec/code.hpp"
#include "rankdec/decoder.hpp"
#include "rankdec/skew.hpp"

namespace rankdec::serdes {

using nlohmann::json;

json field_to_json(const gf::Field& f);
std::shared_ptr<const gf::Field> field_from_json(const json& j);

json codespec_to_json(const code::CodeSpec& c);
code::CodeSpec codespec_from_json(const json& j);

json pattern_to_json(const bounds::Pattern& p);
bounds::Pattern pattern_from_json(const json& j);

json certificate_to_json(const bounds::BoundCertificate& c);

json vector_to_json(std::span<const gf::Element> v);
std::vector<gf::Element> vector_from_json(const gf::Field& f, const json& j);

json matrix_to_json(const linalg::Mat& m);

json skewpoly_to_json(const skew::SkewPoly& p);

json outcome_to_json(const decoder::DecodeOutcome& o);

}  // namespace rankdec::serdes

#endif
