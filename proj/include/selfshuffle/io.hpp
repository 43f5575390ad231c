#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "selfshuffle/quad.hpp"
#include "selfshuffle/shuffle.hpp"

namespace selfshuffle {

// Word specs:
//   NAME                  a named word (named_word_list())
//   u(v)                  u v^omega, e.g. 0(1) or (01)
//   fixed:A:MORPH         fixed point of MORPH starting with letter A, e.g. fixed:0:0:01,1:0
//   sturmian:ALPHA:RHO    z(alpha, rho)
//   char:DIR              characteristic word of a directive sequence, e.g. char:0,0,[1,0]
//   pal01:DIR, pal10:DIR  01C and 10C for that directive sequence
//   prefix:u:SPEC         u followed by SPEC
//   drop:K:SPEC           SPEC without its first K letters
//   swap:SPEC             0 <-> 1 exchanged
InfiniteWord parse_word_spec(std::string_view spec);
std::string word_spec_help();

// {"a","b","c","d"} exact, "text", and a 12-place "decimal" marked "approx": true
nlohmann::json quad_json(const QuadExt& x);
std::string decimal12(const QuadExt& x);

std::string steering_string(std::span<const Letter> steering);  // "1212..."

struct WitnessFile {
  std::size_t k = 2;
  std::size_t depth = 0;
  std::string word;                  // word spec
  std::vector<std::string> sources;  // empty: k copies of the word
  std::string steering;              // digits 1..k, length depth
  std::vector<std::size_t> consumed;
  std::string label;
};

// Verifies w to `depth` first; throws DomainError if it does not verify.
WitnessFile make_witness_file(const ShuffleWitness& w, std::size_t depth, std::string word_spec,
                              std::vector<std::string> source_specs = {});
nlohmann::json to_json(const WitnessFile& f);
WitnessFile witness_file_from_json(const nlohmann::json& j);  // ParseError on schema problems

struct WitnessCheck {
  VerifyReport report;
  bool consumed_match = false;
};
WitnessCheck verify_witness_file(const WitnessFile& f);

}  // namespace selfshuffle
