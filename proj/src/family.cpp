#include "burnside/family.hpp"

#include <fstream>
#include <sstream>

#include "burnside/errors.hpp"

namespace burnside {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

// Re-anchors a literal-relative parse error at the token's position in the file.
template <class F>
auto parse_token(const Token& token, std::size_t line, F&& parse) {
  try {
    return parse(token.text);
  } catch (const ParseError& e) {
    const std::size_t column = token.column + (e.column() > 0 ? e.column() - 1 : 0);
    throw ParseError(e.message(), token.text, line, column);
  } catch (const DivisionByZero&) {
    throw ParseError("zero denominator", token.text, line, token.column);
  }
}

struct PendingMatrix {
  std::size_t line;
  std::vector<std::vector<Token>> rows;
  std::vector<std::size_t> row_lines;
};

}  // namespace

FamilyFile parse_family(std::string_view text) {
  FamilyFile out;
  std::optional<std::size_t> field_line;
  std::optional<std::size_t> subfield_line;
  Token field_token{"", 0};
  Token subfield_token{"", 0};
  std::vector<PendingMatrix> pending;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;

    const std::string& head = tokens[0].text;
    if (head == "field" || head == "subfield") {
      if (tokens.size() != 2) throw ParseError("expected exactly one field spec", head, line_no, tokens[0].column);
      auto& seen = head == "field" ? field_line : subfield_line;
      if (seen) throw ParseError("duplicate " + head + " line", head, line_no, tokens[0].column);
      seen = line_no;
      (head == "field" ? field_token : subfield_token) = tokens[1];
    } else if (head == "quaternion") {
      if (tokens.size() != 1) throw ParseError("unexpected token after quaternion", tokens[1].text, line_no, tokens[1].column);
      out.quaternion = true;
    } else if (head == "matrix") {
      if (tokens.size() != 1) throw ParseError("unexpected token after matrix", tokens[1].text, line_no, tokens[1].column);
      pending.push_back({line_no, {}, {}});
    } else {
      if (pending.empty()) throw ParseError("entries before any matrix keyword", head, line_no, tokens[0].column);
      pending.back().rows.push_back(tokens);
      pending.back().row_lines.push_back(line_no);
    }
  }

  if (out.quaternion) {
    if (field_line && field_token.text != "Q") {
      throw ParseError("quaternion files are over Q", field_token.text, *field_line, field_token.column);
    }
    if (subfield_line) {
      throw ParseError("quaternion files take no subfield", subfield_token.text, *subfield_line,
                       subfield_token.column);
    }
    out.field_spec = "Q";
  } else {
    if (!field_line) throw ParseError("missing field line", "", 1, 0);
    out.field_spec = field_token.text;
    out.field = parse_token(field_token, *field_line, [](const std::string& s) { return Field::parse(s); });
  }
  if (subfield_line) {
    out.subfield_spec = subfield_token.text;
    out.subfield = parse_token(subfield_token, *subfield_line, [](const std::string& s) { return Field::parse(s); });
    if (!is_supported_tower(*out.subfield, out.field)) {
      throw UnsupportedTower(at_line(*subfield_line) + subfield_token.text + " is not a supported subfield of " +
                             out.field.to_string());
    }
  }
  if (pending.empty()) throw ParseError("no matrices", "", line_no, 0);

  for (const auto& m : pending) {
    const std::size_t n = m.rows.size();
    if (n == 0) throw ShapeMismatch(at_line(m.line) + "matrix has no rows");
    if (out.n == 0) out.n = n;
    if (n != out.n) {
      throw ShapeMismatch(at_line(m.line) + "matrix has " + std::to_string(n) + " rows, expected " +
                          std::to_string(out.n));
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (m.rows[r].size() != n) {
        throw ShapeMismatch(at_line(m.row_lines[r]) + "row has " + std::to_string(m.rows[r].size()) +
                            " entries, expected " + std::to_string(n));
      }
    }
    if (out.quaternion) {
      QuaternionMatrix x = quaternion_zero(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          x(r, c) = parse_token(m.rows[r][c], m.row_lines[r], [](const std::string& s) { return Quaternion::parse(s); });
      out.matrices.push_back(real_representation(x));
      out.quaternion_matrices.push_back(std::move(x));
    } else {
      Matrix x(n, n, out.field.zero());
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          x(r, c) = parse_token(m.rows[r][c], m.row_lines[r],
                                [&](const std::string& s) { return out.field.parse_element(s); });
      out.matrices.push_back(std::move(x));
    }
  }
  return out;
}

FamilyFile parse_family_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file", path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_family(buffer.str());
}

}  // namespace burnside
