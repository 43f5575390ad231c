#include "selfshuffle/io.hpp"

#include <cstdio>

#include "selfshuffle/constructive.hpp"
#include "selfshuffle/sturmian.hpp"

namespace selfshuffle {

namespace {

std::pair<std::string_view, std::string_view> split_once(std::string_view s, std::string_view what) {
  auto p = s.find(':');
  if (p == std::string_view::npos) throw ParseError("word spec: " + std::string(what) + " needs ':'");
  return {s.substr(0, p), s.substr(p + 1)};
}

std::size_t parse_count(std::string_view s, std::string_view what) {
  if (s.empty()) throw ParseError("word spec: empty " + std::string(what));
  std::size_t v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw ParseError("word spec: bad " + std::string(what) + " '" + std::string(s) + "'");
    v = v * 10 + static_cast<std::size_t>(ch - '0');
    if (v > (std::size_t{1} << 40)) throw ParseError("word spec: " + std::string(what) + " too large");
  }
  return v;
}

FiniteWord parse_binary(std::string_view s) {
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw ParseError("word spec: expected binary letters, got '" + std::string(s) + "'");
  }
  return FiniteWord::parse(s);
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

}  // namespace

InfiniteWord parse_word_spec(std::string_view spec) {
  if (spec.empty()) throw ParseError("word spec: empty");
  if (starts_with(spec, "fixed:")) {
    auto [a, morph] = split_once(spec.substr(6), "fixed");
    Morphism mu = Morphism::parse(morph);
    auto letter = mu.domain()->find(a);
    if (!letter) throw ParseError("word spec: letter '" + std::string(a) + "' not in the morphism's domain");
    return fixed_point(mu, *letter);
  }
  if (starts_with(spec, "sturmian:")) {
    auto [a, r] = split_once(spec.substr(9), "sturmian");
    return mechanical(QuadExt::parse(a), QuadExt::parse(r));
  }
  if (starts_with(spec, "char:")) return characteristic_from_directive(DirectiveSequence::parse(spec.substr(5)));
  if (starts_with(spec, "pal01:")) return pal_word(DirectiveSequence::parse(spec.substr(6)), PalVariant::c01);
  if (starts_with(spec, "pal10:")) return pal_word(DirectiveSequence::parse(spec.substr(6)), PalVariant::c10);
  if (starts_with(spec, "prefix:")) {
    auto [u, rest] = split_once(spec.substr(7), "prefix");
    return prepend(parse_binary(u), parse_word_spec(rest));
  }
  if (starts_with(spec, "drop:")) {
    auto [k, rest] = split_once(spec.substr(5), "drop");
    return drop(parse_word_spec(rest), parse_count(k, "drop count"));
  }
  if (starts_with(spec, "swap:")) {
    auto w = parse_word_spec(spec.substr(5));
    if (w.alphabet()->size() != 2) throw DomainError("swap needs a binary word");
    return swap_letters(w);
  }
  if (auto open = spec.find('('); open != std::string_view::npos) {
    if (spec.back() != ')' || open + 2 >= spec.size()) throw ParseError("word spec: expected u(v) with v nonempty");
    return InfiniteWord::eventually_periodic(parse_binary(spec.substr(0, open)),
                                             parse_binary(spec.substr(open + 1, spec.size() - open - 2)));
  }
  for (const auto& n : named_word_list()) {
    if (spec == n) return named_word(spec);
  }
  throw ParseError("unknown word spec '" + std::string(spec) + "'\n" + word_spec_help());
}

std::string word_spec_help() {
  std::string names;
  for (const auto& n : named_word_list()) names += (names.empty() ? "" : ", ") + n;
  return "word specs: " + names +
         "; u(v) for u v^omega; fixed:A:MORPH; sturmian:ALPHA:RHO; char:DIR; pal01:DIR; pal10:DIR; "
         "prefix:u:SPEC; drop:K:SPEC; swap:SPEC";
}

std::string decimal12(const QuadExt& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x.to_double());
  return buf;
}

nlohmann::json quad_json(const QuadExt& x) {
  return {{"a", x.a()}, {"b", x.b()}, {"c", x.c()}, {"d", x.d()},
          {"text", x.to_string()}, {"decimal", decimal12(x)}, {"approx", true}};
}

std::string steering_string(std::span<const Letter> steering) {
  std::string s;
  s.reserve(steering.size());
  for (Letter c : steering) {
    if (c >= 9) throw DomainError("steering strings support at most 9 copies");
    s.push_back(static_cast<char>('1' + c));
  }
  return s;
}

WitnessFile make_witness_file(const ShuffleWitness& w, std::size_t depth, std::string word_spec,
                              std::vector<std::string> source_specs) {
  if (!source_specs.empty() && source_specs.size() != w.k) throw DomainError("one source spec per copy is needed");
  auto rep = verify_witness(w, depth);
  if (!rep.ok) throw DomainError("witness does not verify to depth " + std::to_string(depth) + ": " + rep.reason);
  WitnessFile f;
  f.k = w.k;
  f.depth = depth;
  f.word = std::move(word_spec);
  f.sources = std::move(source_specs);
  f.steering = steering_string(w.steering.letters(depth));
  f.consumed = rep.consumed;
  f.label = w.label;
  return f;
}

nlohmann::json to_json(const WitnessFile& f) {
  nlohmann::json j{{"schema", 1},         {"k", f.k},           {"depth", f.depth}, {"word", f.word},
                   {"steering", f.steering}, {"consumed", f.consumed}, {"label", f.label}};
  if (!f.sources.empty()) j["sources"] = f.sources;
  return j;
}

WitnessFile witness_file_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ParseError("witness: expected a JSON object");
    if (j.at("schema").get<int>() != 1) throw ParseError("witness: unsupported schema");
    WitnessFile f;
    f.k = j.at("k").get<std::size_t>();
    f.depth = j.at("depth").get<std::size_t>();
    f.word = j.at("word").get<std::string>();
    f.steering = j.at("steering").get<std::string>();
    f.consumed = j.at("consumed").get<std::vector<std::size_t>>();
    if (j.contains("label")) f.label = j.at("label").get<std::string>();
    if (j.contains("sources")) f.sources = j.at("sources").get<std::vector<std::string>>();
    if (f.k < 2 || f.k > 9) throw ParseError("witness: k must be in 2..9");
    if (f.steering.size() != f.depth) throw ParseError("witness: steering length differs from depth");
    if (f.consumed.size() != f.k) throw ParseError("witness: consumed needs k entries");
    if (!f.sources.empty() && f.sources.size() != f.k) throw ParseError("witness: sources needs k entries");
    for (char ch : f.steering) {
      if (ch < '1' || ch >= static_cast<char>('1' + f.k)) throw ParseError("witness: bad steering letter");
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("witness: ") + e.what());
  }
}

WitnessCheck verify_witness_file(const WitnessFile& f) {
  InfiniteWord x = parse_word_spec(f.word);
  std::vector<InfiniteWord> sources;
  for (std::size_t j = 0; j < f.k; ++j) sources.push_back(f.sources.empty() ? x : parse_word_spec(f.sources[j]));
  std::vector<Letter> s;
  s.reserve(f.steering.size());
  for (char ch : f.steering) s.push_back(static_cast<Letter>(ch - '1'));
  WitnessCheck c;
  c.report = verify_shuffle(x, sources, finite_steering(std::move(s), f.k), f.depth);
  c.consumed_match = c.report.consumed == f.consumed;
  return c;
}

}  // namespace selfshuffle
