#pragma once

// Text formats: canonical basis files, presentations (text or JSON) and
// completion checkpoints. Parse failures raise ParseError with 1-based line
// and column.

#include <optional>
#include <string>
#include <string_view>

#include "gsb/completion.hpp"
#include "gsb/coxeter.hpp"

namespace gsb {

// "alphabet: <names in precedence order>", then one element per line sorted
// ascending by leading word.
std::string write_basis(const Basis& basis);
Basis read_basis(std::string_view text);

struct Presentation {
  Alphabet alphabet;
  std::vector<Poly> relations;
  std::optional<CoxeterMatrix> matrix;  // set for the JSON form
};

// Text form: "generators: a b c" then lines "u = v". JSON form:
// {"n": 3, "matrix": [[1,3,2],[3,1,3],[2,3,1]], "marking": ["a","b","c"]}
// with 0 or null for an infinite entry. '#' starts a comment in the text form.
Presentation parse_presentation(std::string_view text);
std::string write_presentation(const Alphabet& alphabet, const std::vector<Poly>& relations);

// "# checkpoint round=N new_from=K pending=P", the alphabet line, the rules
// in order, then the deferred rules.
std::string write_checkpoint(const CompletionState& state, const Alphabet& alphabet);
std::pair<Alphabet, CompletionState> read_checkpoint(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace gsb
