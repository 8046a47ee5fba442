#include "formats.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace hg {

char sign_char(Sign s) {
  switch (s) {
    case Sign::Zero: return '0';
    case Sign::Plus: return '+';
    case Sign::Minus: return '-';
    case Sign::Star: return '*';
  }
  return '?';
}

Sign sign_from_char(char c) {
  switch (c) {
    case '0': return Sign::Zero;
    case '+': return Sign::Plus;
    case '-': return Sign::Minus;
    case '*': return Sign::Star;
  }
  throw ParseError(std::string("sign matrix: invalid entry character '") + c +
                   "'");
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t nl = text.find('\n', start);
    if (nl == std::string::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

}  // namespace

SignMatrix parse_sign_matrix(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("sign matrix: empty input");
  std::vector<std::vector<Sign>> rows;
  for (size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string& line = lines[ln];
    if (line.empty()) {
      throw ParseError("sign matrix: empty line " + std::to_string(ln + 1));
    }
    // Strict layout: entries at even offsets, single spaces between them.
    if (line.size() % 2 != 1) {
      throw ParseError("sign matrix: bad layout on line " +
                       std::to_string(ln + 1));
    }
    std::vector<Sign> row;
    for (size_t k = 0; k < line.size(); ++k) {
      if (k % 2 == 0) {
        row.push_back(sign_from_char(line[k]));
      } else if (line[k] != ' ') {
        throw ParseError("sign matrix: expected single spaces on line " +
                         std::to_string(ln + 1));
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("sign matrix: rows must have equal length");
    }
    rows.push_back(std::move(row));
  }
  SignMatrix m(static_cast<int>(rows.size()),
               static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::string format_sign_matrix(const SignMatrix& m) {
  std::string out;
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      if (j) out += ' ';
      out += sign_char(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

namespace {

Letter parse_letter_token(const std::string& tok, int num_generators) {
  if (tok.size() < 2 || tok[0] != 'g') {
    throw ParseError("presentation: bad token '" + tok + "'");
  }
  size_t digits_end = 1;
  while (digits_end < tok.size() && tok[digits_end] >= '0' &&
         tok[digits_end] <= '9') {
    ++digits_end;
  }
  if (digits_end == 1) {
    throw ParseError("presentation: bad token '" + tok + "'");
  }
  int exponent = 1;
  if (digits_end != tok.size()) {
    if (tok.substr(digits_end) != "^-1") {
      throw ParseError("presentation: bad token '" + tok + "'");
    }
    exponent = -1;
  }
  int index = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data() + 1, tok.data() + digits_end, index);
  if (ec != std::errc{} || index < 1 || index > num_generators) {
    throw ParseError("presentation: generator index out of range in '" + tok +
                     "'");
  }
  return Letter{index - 1, exponent};
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("presentation: empty input");
  std::istringstream header(lines[0]);
  std::string keyword;
  long long m = -1;
  header >> keyword >> m;
  std::string rest;
  if (header.fail() || keyword != "gens" || m < 0 || (header >> rest)) {
    throw ParseError("presentation: first line must be 'gens m'");
  }
  Presentation p;
  p.num_generators = static_cast<int>(m);
  for (size_t ln = 1; ln < lines.size(); ++ln) {
    Word w;
    std::istringstream is(lines[ln]);
    std::string tok;
    while (is >> tok) w.push_back(parse_letter_token(tok, p.num_generators));
    p.relators.push_back(std::move(w));
  }
  return p;
}

std::string format_presentation(const Presentation& p) {
  validate_presentation(p);
  std::string out = "gens " + std::to_string(p.num_generators) + "\n";
  for (const Word& w : p.relators) {
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) out += ' ';
      out += 'g';
      out += std::to_string(w[i].generator + 1);
      if (w[i].exponent < 0) out += "^-1";
    }
    out += '\n';
  }
  return out;
}

HeegaardDiagram parse_diagram_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("diagram: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("genus") || !doc.contains("beta")) {
    throw ParseError("diagram: need a JSON object with 'genus' and 'beta'");
  }
  if (!doc["genus"].is_number_integer()) {
    throw ParseError("diagram: 'genus' must be an integer");
  }
  const long long genus = doc["genus"].get<long long>();
  if (genus < 1 || genus > (1 << 20)) {
    throw ParseError("diagram: genus out of range");
  }
  if (!doc["beta"].is_array() ||
      static_cast<long long>(doc["beta"].size()) != genus) {
    throw ParseError("diagram: 'beta' must list exactly genus words");
  }
  HeegaardDiagram h;
  h.genus = static_cast<int>(genus);
  for (const auto& word : doc["beta"]) {
    if (!word.is_array()) throw ParseError("diagram: beta word must be a list");
    std::vector<IntersectionPoint> w;
    for (const auto& pt : word) {
      if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number_integer() ||
          !pt[1].is_number_integer()) {
        throw ParseError("diagram: point must be an [alpha_index, sign] pair");
      }
      const long long alpha = pt[0].get<long long>();
      const long long sign = pt[1].get<long long>();
      if (alpha < 1 || alpha > genus) {
        throw ParseError("diagram: alpha index out of range");
      }
      if (sign != 1 && sign != -1) {
        throw ParseError("diagram: point sign must be 1 or -1");
      }
      w.push_back(IntersectionPoint{static_cast<int>(alpha - 1),
                                    static_cast<int>(sign)});
    }
    h.beta_words.push_back(std::move(w));
  }
  validate_diagram(h);
  return h;
}

std::string format_diagram_json(const HeegaardDiagram& h) {
  validate_diagram(h);
  // One beta word per line keeps generated files readable.
  std::string out = "{\n  \"genus\": " + std::to_string(h.genus) +
                    ",\n  \"beta\": [\n";
  for (int j = 0; j < h.genus; ++j) {
    out += "    [";
    const auto& word = h.beta_words[j];
    for (size_t k = 0; k < word.size(); ++k) {
      if (k) out += ", ";
      out += "[" + std::to_string(word[k].alpha + 1) + ", " +
             std::to_string(word[k].sign) + "]";
    }
    out += j + 1 < h.genus ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

}  // namespace hg
