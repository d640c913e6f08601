#include "moip/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace moip {

namespace {

struct LineReader {
  std::istream& is;
  std::size_t line_no = 0;

  // Next nonempty line with comments stripped, split into tokens.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(is, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      tokens.clear();
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::vector<std::string> expect_line(const char* what) {
    std::vector<std::string> tokens;
    if (!next(tokens)) {
      throw ParseError(line_no + 1, std::string("expected ") + what +
                                        ", found end of input");
    }
    return tokens;
  }
};

long long parse_integer(const std::string& tok, std::size_t line,
                        const char* what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  }
  if (pos != tok.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  }
  return v;
}

}  // namespace

Scalar parse_scalar_token(const std::string& token, std::size_t line) {
  const auto slash = token.find('/');
  if (slash != std::string::npos) {
    const std::string num = token.substr(0, slash);
    const std::string den = token.substr(slash + 1);
    if (num.empty() || den.empty()) {
      throw ParseError(line, "malformed rational '" + token + "'");
    }
    const Scalar p = parse_scalar_token(num, line);
    const Scalar q = parse_scalar_token(den, line);
    if (q == 0) throw ParseError(line, "zero denominator in '" + token + "'");
    return p / q;
  }
  const char* begin = token.c_str();
  char* end = nullptr;
  const Scalar v = std::strtod(begin, &end);
  if (end != begin + token.size()) {
    throw ParseError(line, "expected a number, got '" + token + "'");
  }
  return v;
}

MoipInstance parse_instance(std::istream& is) {
  LineReader reader{is};
  MoipInstance inst;

  auto header = reader.expect_line("'moip 1' header");
  if (header.size() != 2 || header[0] != "moip" || header[1] != "1") {
    throw ParseError(reader.line_no, "expected 'moip 1' header");
  }

  auto obj = reader.expect_line("'objectives <k>'");
  if (obj.size() != 2 || obj[0] != "objectives") {
    throw ParseError(reader.line_no, "expected 'objectives <k>'");
  }
  const long long k = parse_integer(obj[1], reader.line_no, "objective count");
  auto vars = reader.expect_line("'variables <n>'");
  if (vars.size() != 2 || vars[0] != "variables") {
    throw ParseError(reader.line_no, "expected 'variables <n>'");
  }
  const long long n = parse_integer(vars[1], reader.line_no, "variable count");
  if (k < 1 || n < 1) {
    throw ParseError(reader.line_no, "need k >= 1 objectives and n >= 1 variables");
  }

  for (long long j = 0; j < n; ++j) {
    auto tok = reader.expect_line("'var <lo> <hi>'");
    if (tok.size() != 3 || tok[0] != "var") {
      throw ParseError(reader.line_no, "expected 'var <lo> <hi>'");
    }
    IntBox box;
    box.lo = parse_integer(tok[1], reader.line_no, "integer lower bound");
    box.hi = parse_integer(tok[2], reader.line_no, "integer upper bound");
    if (box.lo > box.hi) throw ParseError(reader.line_no, "empty variable box");
    inst.boxes.push_back(box);
  }

  auto cmark = reader.expect_line("'C'");
  if (cmark.size() != 1 || cmark[0] != "C") {
    throw ParseError(reader.line_no, "expected objective matrix marker 'C'");
  }
  for (long long i = 0; i < k; ++i) {
    auto tok = reader.expect_line("objective matrix row");
    if (tok.size() != static_cast<std::size_t>(n)) {
      throw ParseError(reader.line_no, "objective row needs exactly " +
                                           std::to_string(n) + " values");
    }
    std::vector<Scalar> row;
    for (const auto& t : tok) row.push_back(parse_scalar_token(t, reader.line_no));
    inst.C.push_back(std::move(row));
  }

  auto cons = reader.expect_line("'constraints <m>'");
  if (cons.size() != 2 || cons[0] != "constraints") {
    throw ParseError(reader.line_no, "expected 'constraints <m>'");
  }
  const long long m = parse_integer(cons[1], reader.line_no, "constraint count");
  if (m < 0) throw ParseError(reader.line_no, "negative constraint count");
  for (long long r = 0; r < m; ++r) {
    auto tok = reader.expect_line("constraint row");
    const std::size_t expect_min = static_cast<std::size_t>(n) + 2;
    if (tok.size() < expect_min || tok.size() > expect_min + 1) {
      throw ParseError(reader.line_no,
                       "constraint row needs '<n coefficients> <= <rhs> [dualized]'");
    }
    const std::string& rel = tok[static_cast<std::size_t>(n)];
    if (rel != "<=") {
      throw ParseError(reader.line_no,
                       "unsupported relation token '" + rel + "', expected '<='");
    }
    std::vector<Scalar> row;
    for (long long j = 0; j < n; ++j) {
      row.push_back(parse_scalar_token(tok[static_cast<std::size_t>(j)],
                                       reader.line_no));
    }
    inst.A.push_back(std::move(row));
    inst.b.push_back(parse_scalar_token(tok[static_cast<std::size_t>(n) + 1],
                                        reader.line_no));
    if (tok.size() == expect_min + 1) {
      if (tok.back() != "dualized") {
        throw ParseError(reader.line_no,
                         "unexpected trailer '" + tok.back() + "', expected 'dualized'");
      }
      inst.dualized_rows.push_back(static_cast<std::size_t>(r));
    }
  }

  std::vector<std::string> leftover;
  if (reader.next(leftover)) {
    throw ParseError(reader.line_no, "unexpected trailing content '" + leftover[0] + "'");
  }
  inst.validate();
  return inst;
}

MoipInstance parse_instance_text(const std::string& text) {
  std::istringstream is(text);
  return parse_instance(is);
}

MoipInstance load_instance_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw PreconditionError("cannot open instance file: " + path);
  return parse_instance(is);
}

std::string serialize_instance(const MoipInstance& inst) {
  inst.validate();
  std::ostringstream os;
  os << "moip 1\n";
  os << "objectives " << inst.num_objectives() << "\n";
  os << "variables " << inst.num_vars() << "\n";
  for (const auto& box : inst.boxes) {
    os << "var " << box.lo << " " << box.hi << "\n";
  }
  os << "C\n";
  for (const auto& row : inst.C) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      os << (j ? " " : "") << format_scalar(row[j]);
    }
    os << "\n";
  }
  os << "constraints " << inst.num_rows() << "\n";
  for (std::size_t r = 0; r < inst.num_rows(); ++r) {
    for (std::size_t j = 0; j < inst.num_vars(); ++j) {
      os << format_scalar(inst.A[r][j]) << " ";
    }
    os << "<= " << format_scalar(inst.b[r]);
    if (inst.is_dualized(r)) os << " dualized";
    os << "\n";
  }
  return os.str();
}

}  // namespace moip
