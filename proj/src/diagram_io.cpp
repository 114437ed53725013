#include "vconway/diagram_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace vconway {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

constexpr std::string_view kKeyword = "component:";

struct TokenSite {
  std::size_t line;
  std::size_t column;
};

Passage parse_token(std::string_view tok, const TokenSite& at, std::map<int, Crossing>& crossings,
                    std::map<int, TokenSite>& first_seen) {
  const char head = tok.front();
  Role role;
  bool classical = true;
  switch (head) {
    case 'O': role = Role::over; break;
    case 'U': role = Role::under; break;
    case 'A': role = Role::double_a; classical = false; break;
    case 'B': role = Role::double_b; classical = false; break;
    default: throw ParseError(at.line, at.column, "unknown passage token '" + std::string(tok) + "'");
  }
  std::size_t i = 1;
  while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
  if (i == 1) throw ParseError(at.line, at.column + 1, "expected crossing id in '" + std::string(tok) + "'");
  const std::string digits(tok.substr(1, i - 1));
  if (digits.size() > 9) throw ParseError(at.line, at.column + 1, "crossing id too large");
  const int id = std::stoi(digits);
  if (id <= 0) throw ParseError(at.line, at.column + 1, "crossing ids must be positive");

  int sign = 0;
  if (classical) {
    if (i == tok.size() || (tok[i] != '+' && tok[i] != '-'))
      throw ParseError(at.line, at.column + i, "expected sign '+' or '-' in '" + std::string(tok) + "'");
    sign = tok[i] == '+' ? 1 : -1;
    ++i;
  }
  if (i != tok.size())
    throw ParseError(at.line, at.column + i, "unexpected trailing characters in '" + std::string(tok) + "'");

  const Crossing c{classical ? CrossingKind::classical : CrossingKind::double_point, sign};
  auto [it, inserted] = crossings.emplace(id, c);
  if (!inserted && !(it->second == c)) {
    const TokenSite& prev = first_seen.at(id);
    const std::string where = " (first seen at line " + std::to_string(prev.line) + ", column " +
                              std::to_string(prev.column) + ")";
    if (it->second.kind != c.kind)
      throw ParseError(at.line, at.column, "crossing " + std::to_string(id) + " used as both classical and double point" + where);
    throw ParseError(at.line, at.column, "sign of crossing " + std::to_string(id) + " disagrees" + where);
  }
  first_seen.emplace(id, at);
  return Passage{id, role};
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
  std::vector<Component> comps;
  std::map<int, Crossing> crossings;
  std::map<int, TokenSite> first_seen;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t col = 0;
    while (col < line.size() && std::isspace(static_cast<unsigned char>(line[col]))) ++col;
    if (col < line.size() && line[col] != '#') {
      if (line.substr(col, kKeyword.size()) != kKeyword)
        throw ParseError(line_no, col + 1, "expected 'component:'");
      col += kKeyword.size();
      Component comp;
      while (true) {
        while (col < line.size() && std::isspace(static_cast<unsigned char>(line[col]))) ++col;
        if (col >= line.size()) break;
        std::size_t tok_end = col;
        while (tok_end < line.size() && !std::isspace(static_cast<unsigned char>(line[tok_end]))) ++tok_end;
        comp.push_back(parse_token(line.substr(col, tok_end - col), {line_no, col + 1}, crossings, first_seen));
        col = tok_end;
      }
      comps.push_back(std::move(comp));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return {std::move(comps), std::move(crossings)};
}

Diagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

std::string format_passage(const Diagram& d, const Passage& p) {
  std::string out;
  switch (p.role) {
    case Role::over: out = "O"; break;
    case Role::under: out = "U"; break;
    case Role::double_a: out = "A"; break;
    case Role::double_b: out = "B"; break;
  }
  out += std::to_string(p.crossing);
  if (p.role == Role::over || p.role == Role::under) {
    auto it = d.crossings().find(p.crossing);
    out += (it != d.crossings().end() && it->second.sign < 0) ? '-' : '+';
  }
  return out;
}

std::string format_diagram(const Diagram& d) {
  std::string out;
  for (const Component& comp : d.components()) {
    out += "component:";
    for (const Passage& p : comp) out += ' ' + format_passage(d, p);
    out += '\n';
  }
  return out;
}

}  // namespace vconway
