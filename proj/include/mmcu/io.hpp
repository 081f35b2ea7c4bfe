// io.hpp — line-oriented instance files, witness files, serialization.
//
// Formats ('c' lines are comments, ids in files are 1-based):
//   p mmcu <n> <m> <k> <l>      then m 'e <u> <v>' lines (edge id = order of
//                               appearance) and 't <v> <label>' lines
//                               (label reuse = same class)
//   p mixedcut <n> <m> <k> <l>  then 'e' lines, 'source <v>', 'sink <v>'
//   p bpvc <nx> <ny> <m> <p> <q>  then 'e <x> <y>' with x in 1..nx and
//                                 y in nx+1..nx+ny
// Witness: 's YES' or 's NO', then optional 'v <id>...' / 'f <id>...' lines.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "mmcu/model.hpp"
#include "mmcu/reductions.hpp"

namespace mmcu {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

using ParsedInstance = std::variant<MmcuInstance, MixedCutInstance, BpvcInstance>;

ParsedInstance parse_instance(const std::string& text);

std::string serialize(const MmcuInstance& inst);
std::string serialize(const MixedCutInstance& mc);
std::string serialize(const BpvcInstance& b);

std::string serialize_witness(const std::optional<MixedSolution>& sol);
std::optional<MixedSolution> parse_witness(const std::string& text);

}  // namespace mmcu
