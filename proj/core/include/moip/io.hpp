#pragma once

// Line-oriented instance file format:
//
//   # comment
//   moip 1
//   objectives <k>
//   variables <n>
//   var <lo> <hi>            (n lines, integer bounds)
//   C
//   <n values>               (k rows)
//   constraints <m>
//   <a1> ... <an> <= <rhs> [dualized]
//
// Values are decimals or rationals "p/q". parse(serialize(inst)) == inst.

#include <iosfwd>
#include <string>

#include "moip/instance.hpp"

namespace moip {

class ParseError : public PreconditionError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : PreconditionError("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

MoipInstance parse_instance(std::istream& is);
MoipInstance parse_instance_text(const std::string& text);
MoipInstance load_instance_file(const std::string& path);

std::string serialize_instance(const MoipInstance& inst);

// "p/q" rational or decimal literal.
Scalar parse_scalar_token(const std::string& token, std::size_t line);

}  // namespace moip
