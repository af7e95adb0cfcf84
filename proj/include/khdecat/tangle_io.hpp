#pragma once

// Line-oriented tangle files:
//
//   tangle <ident>
//   side inside|outside
//   endpoints <2n>
//   cross <+|-> <a> <b> <c> <d>
//   loop <count>
//   boundary <point> <edge>
//
// '#' starts a comment and blank lines are ignored. The first three
// directives are mandatory and come first, in that order.

#include "khdecat/decat.hpp"
#include "khdecat/diagram.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace khdecat {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& detail, const std::string& source = {})
      : std::runtime_error((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ": " + detail),
        line_(line),
        detail_(detail) {}
  int line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  std::string detail_;
};

// Syntax only; call require_valid() for the diagram invariants.
TangleDiagram parse_tangle(std::string_view text);
// Parses and validates; errors name the file. Throws std::runtime_error if
// the file is unreadable.
TangleDiagram load_tangle(const std::filesystem::path& path);

std::string serialize_tangle(const TangleDiagram& t);

// "<key> : <polynomial>" per nonzero generator, sorted by key text.
std::string render_vector(const DecatVector& v);

// {"terms": [[e2, c], ...]} with descending doubled exponent e2. Coefficients
// that do not fit in 64 bits are written as decimal strings.
nlohmann::json poly_to_json(const HalfLaurent& p);
// {"n": int, "generators": [{"key": str, "terms": [...]}, ...]}
nlohmann::json vector_to_json(const DecatVector& v);

}  // namespace khdecat
