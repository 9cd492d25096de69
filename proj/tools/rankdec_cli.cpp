// Command-line front end: construct codes, certify designed distances,
// encode, inject seeded rank errors and decode.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rankdec/serdes.hpp"

using namespace rankdec;
using nlohmann::json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

std::string set_to_string(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("RANKDEC_SEED")) return std::stoull(env);
  return flag_seed;
}

int cmd_make_code(const std::string& spec_path) {
  code::CodeSpec spec = serdes::codespec_from_json(load_json(spec_path));
  std::cout << "n=" << spec.length() << " |sigma|=" << spec.aut().order
            << " k=" << spec.dimension() << " T=" << set_to_string(spec.t_set())
            << "\n";
  std::cout << "defining_set=" << set_to_string(code::defining_set(spec)) << "\n";
  std::cout << "parity: " << spec.parity().rows() << "x" << spec.parity().cols()
            << " over GF(2^" << spec.field().degree()
            << "), rank " << linalg::rank(spec.parity()) << "\n";
  return 0;
}

int cmd_bounds(const std::string& spec_path, const std::string& pattern_path,
               int max_r) {
  code::CodeSpec spec = serdes::codespec_from_json(load_json(spec_path));
  std::vector<int> ds = code::defining_set(spec);
  int order = spec.aut().order;
  if (pattern_path.empty()) {
    bounds::SearchLimits limits;
    if (max_r >= 0) limits.max_r = max_r;
    auto best = bounds::best_bound_search(ds, order, limits);
    if (!best) {
      std::cout << "no certificate found\n";
      return 0;
    }
    std::cout << "best certificate: " << serdes::certificate_to_json(*best).dump()
              << "\n";
    std::cout << "rank distance >= " << best->value << "\n";
    return 0;
  }
  bounds::Pattern p = serdes::pattern_from_json(load_json(pattern_path));
  auto ht = bounds::ht_check(p, order, ds);
  auto roos = bounds::roos_check(p, order, ds);
  if (!ht && !roos) {
    std::cout << "not certified\n";
    return 0;
  }
  if (ht) std::cout << "HartmannTzeng >= " << ht->value << "\n";
  if (roos) std::cout << "Roos >= " << roos->value << "\n";
  std::cout << "tau=" << p.tau() << " capacity=" << bounds::decoding_capacity(p, order)
            << " interleaved_advisory(l=2)=" << bounds::interleaved_advisory_radius(p, 2)
            << "\n";
  return 0;
}

int cmd_encode(const std::string& spec_path, const std::string& msg_path,
               const std::string& out_path) {
  code::CodeSpec spec = serdes::codespec_from_json(load_json(spec_path));
  auto msg = serdes::vector_from_json(spec.field(), load_json(msg_path));
  auto cw = code::encode(spec, msg);
  write_json(out_path, serdes::vector_to_json(cw));
  std::cout << "wrote codeword of length " << cw.size() << "\n";
  return 0;
}

int cmd_corrupt(const std::string& spec_path, const std::string& in_path, int nu,
                std::uint64_t seed, const std::string& out_path,
                const std::string& error_out) {
  code::CodeSpec spec = serdes::codespec_from_json(load_json(spec_path));
  auto cw = serdes::vector_from_json(spec.field(), load_json(in_path));
  if ((int)cw.size() % spec.length() != 0)
    throw std::invalid_argument("input length is not a multiple of n");
  auto re = code::random_error(spec.aut(), (int)cw.size(), nu, effective_seed(seed));
  std::vector<gf::Element> y(cw.size());
  for (std::size_t i = 0; i < cw.size(); ++i) y[i] = cw[i] + re.e[i];
  write_json(out_path, serdes::vector_to_json(y));
  if (!error_out.empty()) write_json(error_out, serdes::vector_to_json(re.e));
  std::cout << "added rank-" << nu << " error\n";
  return 0;
}

int cmd_decode(const std::string& spec_path, const std::string& pattern_path,
               const std::string& in_path, const std::string& path, int blocks,
               const std::string& out_path, const std::string& request_path) {
  std::string mode = path;
  json input;
  std::string spec_file = spec_path, pattern_file = pattern_path;
  if (!request_path.empty()) {
    json req = load_json(request_path);
    mode = req.value("path", "span");
    input = req.at("input");
    if (req.contains("blocks")) blocks = req.at("blocks").get<int>();
    spec_file = req.at("spec").get<std::string>();
    pattern_file = req.at("pattern").get<std::string>();
  } else {
    if (spec_file.empty() || pattern_file.empty() || in_path.empty())
      throw std::invalid_argument("decode needs spec, --pattern and --in (or --request)");
    input = load_json(in_path);
  }
  code::CodeSpec spec = serdes::codespec_from_json(load_json(spec_file));
  bounds::Pattern p = serdes::pattern_from_json(load_json(pattern_file));

  decoder::DecodeParams params(spec, p);
  auto y = serdes::vector_from_json(spec.field(), input);
  decoder::DecodeOutcome out = [&] {
    if (mode == "span") return decoder::decode_span(params, y);
    if (mode == "locator") return decoder::decode_locator(params, y);
    if (mode == "interleaved") return decoder::decode_interleaved(params, y, blocks);
    throw std::invalid_argument("path must be span, locator or interleaved");
  }();
  json j = serdes::outcome_to_json(out);
  if (!out_path.empty()) write_json(out_path, j);
  std::cout << j.dump(2) << "\n";
  return out.success() ? 0 : 3;
}

int cmd_inspect(const std::string& spec_path, const std::string& in_path) {
  code::CodeSpec spec = serdes::codespec_from_json(load_json(spec_path));
  auto v = serdes::vector_from_json(spec.field(), load_json(in_path));
  std::cout << "length=" << v.size() << "\n";
  if ((int)v.size() == spec.length()) {
    std::cout << "rank_weight=" << code::rank_weight(spec.aut(), v)
              << " hamming_weight=" << code::hamming_weight(v) << "\n";
    std::cout << "is_codeword=" << (code::is_codeword(spec, v) ? "true" : "false")
              << "\n";
    json syn = json::object();
    for (int d : spec.t_set())
      syn[std::to_string(d)] = gf::format_element(code::syndrome(spec, v, d));
    std::cout << "syndromes=" << syn.dump() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-metric code toolkit"};
  app.require_subcommand(1);

  std::string spec_path, pattern_path, msg_path, in_path, out_path, error_out,
      request_path, path_mode = "span";
  int nu = 0, blocks = 1, max_r = -1;
  std::uint64_t seed = 0;

  auto* mk = app.add_subcommand("make-code", "construct and summarize a code");
  mk->add_option("spec", spec_path)->required();

  auto* bd = app.add_subcommand("bounds", "certify designed distances");
  bd->add_option("spec", spec_path)->required();
  bd->add_option("--pattern", pattern_path);
  bd->add_option("--max-r", max_r);

  auto* en = app.add_subcommand("encode", "encode a message");
  en->add_option("spec", spec_path)->required();
  en->add_option("--msg", msg_path)->required();
  en->add_option("--out", out_path)->required();

  auto* co = app.add_subcommand("corrupt", "add a seeded rank error");
  co->add_option("spec", spec_path)->required();
  co->add_option("--in", in_path)->required();
  co->add_option("--rank", nu)->required();
  co->add_option("--seed", seed);
  co->add_option("--out", out_path)->required();
  co->add_option("--error-out", error_out);

  auto* de = app.add_subcommand("decode", "decode a received word");
  de->add_option("spec", spec_path);
  de->add_option("--pattern", pattern_path);
  de->add_option("--in", in_path);
  de->add_option("--path", path_mode)
      ->check(CLI::IsMember({"span", "locator", "interleaved"}));
  de->add_option("--blocks", blocks);
  de->add_option("--out", out_path);
  de->add_option("--request", request_path);

  auto* ins = app.add_subcommand("inspect", "weights and syndromes of a vector");
  ins->add_option("spec", spec_path)->required();
  ins->add_option("--in", in_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (mk->parsed()) return cmd_make_code(spec_path);
    if (bd->parsed()) return cmd_bounds(spec_path, pattern_path, max_r);
    if (en->parsed()) return cmd_encode(spec_path, msg_path, out_path);
    if (co->parsed())
      return cmd_corrupt(spec_path, in_path, nu, seed, out_path, error_out);
    if (de->parsed())
      return cmd_decode(spec_path, pattern_path, in_path, path_mode, blocks, out_path,
                        request_path);
    if (ins->parsed()) return cmd_inspect(spec_path, in_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
