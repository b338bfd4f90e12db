#include "ringmat/text_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "ringmat/error.hpp"

namespace ringmat {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class ElementParser {
 public:
  explicit ElementParser(std::string_view text) : text_(text) {}

  Element parse_all(const Ring& ring) {
    skip_space();
    Element x = parse(ring);
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return x;
  }

  bool reduced() const { return reduced_; }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw parse_error(message, 1, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  mpz_class parse_integer(bool allow_sign) {
    const std::size_t start = pos_;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (pos_ == digits) {
      pos_ = digits;
      fail("expected a decimal integer");
    }
    std::string literal(text_.substr(start, pos_ - start));
    if (literal.front() == '+') literal.erase(0, 1);
    return mpz_class(literal, 10);
  }

  Element parse(const Ring& ring) {
    switch (ring.kind()) {
      case RingKind::integers: return Element(parse_integer(true));
      case RingKind::rationals: {
        mpz_class num = parse_integer(true);
        mpz_class den = 1;
        if (pos_ < text_.size() && text_[pos_] == '/') {
          ++pos_;
          const std::size_t at = pos_;
          den = parse_integer(false);
          if (den == 0) {
            pos_ = at;
            fail("zero denominator");
          }
        }
        mpq_class q(num, den);
        q.canonicalize();
        return Element(std::move(q));
      }
      case RingKind::zmod: {
        const mpz_class value = parse_integer(true);
        if (value < 0 || value >= ring.modulus()) reduced_ = true;
        return ring.from_integer(value);
      }
      case RingKind::polynomials: {
        const Ring& base = ring.base();
        if (pos_ >= text_.size() || text_[pos_] != '[') fail("expected '[' to open a polynomial");
        ++pos_;
        Element::Coefficients coefficients;
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ']') {
          ++pos_;
          return Element(std::move(coefficients));
        }
        while (true) {
          skip_space();
          coefficients.push_back(parse(base));
          skip_space();
          if (pos_ >= text_.size()) fail("unterminated polynomial");
          if (text_[pos_] == ']') {
            ++pos_;
            break;
          }
          if (text_[pos_] != ',') fail("expected ',' or ']' in polynomial");
          ++pos_;
        }
        while (!coefficients.empty() && base.eq(coefficients.back(), base.zero())) coefficients.pop_back();
        return Element(std::move(coefficients));
      }
    }
    fail("unsupported ring");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool reduced_ = false;
};

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

// Splits on whitespace outside brackets.
std::vector<Token> split_entries(std::string_view line, std::size_t line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    int depth = 0;
    while (i < line.size() && (depth > 0 || !is_space(line[i]))) {
      if (line[i] == '[') ++depth;
      if (line[i] == ']' && --depth < 0) throw parse_error("unbalanced ']'", line_no, i + 1);
      ++i;
    }
    if (depth > 0) throw parse_error("unbalanced '['", line_no, start + 1);
    tokens.push_back(Token{line.substr(start, i - start), start + 1});
  }
  return tokens;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(const Token& token, std::size_t line_no) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
  if (ec != std::errc() || end != token.text.data() + token.text.size())
    throw parse_error("expected a non-negative count, got '" + std::string(token.text) + "'", line_no, token.column);
  return value;
}

}  // namespace

std::string format_element(const Ring& ring, const Element& x) {
  switch (ring.kind()) {
    case RingKind::integers:
    case RingKind::zmod: return x.integer().get_str();
    case RingKind::rationals: return x.rational().get_str();
    case RingKind::polynomials: {
      std::string text = "[";
      const auto& coefficients = x.coefficients();
      for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (i > 0) text += ',';
        text += format_element(ring.base(), coefficients[i]);
      }
      return text + "]";
    }
  }
  return {};
}

Element parse_element(const Ring& ring, std::string_view text, bool* reduced) {
  ElementParser parser(text);
  Element x = parser.parse_all(ring);
  if (reduced) *reduced = parser.reduced();
  return x;
}

MatrixFile read_matrix(std::istream& in) {
  std::optional<Ring> ring;
  std::optional<std::pair<std::size_t, std::size_t>> dims;
  std::vector<Vector> rows;
  std::vector<std::string> notes;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view content = strip(line);
    if (content.empty() || content.front() == '#') continue;

    if (!ring) {
      if (content.substr(0, 4) != "ring" || (content.size() > 4 && !is_space(content[4])))
        throw parse_error("expected 'ring <descriptor>'", line_no, 1);
      try {
        ring = Ring::parse(content.substr(4));
      } catch (const parse_error& e) {
        throw parse_error(e.what(), line_no, 6);
      } catch (const precondition_error& e) {
        throw parse_error(e.what(), line_no, 6);
      }
      continue;
    }

    if (!dims) {
      const auto tokens = split_entries(line, line_no);
      if (tokens.size() != 3 || tokens[0].text != "dims") throw parse_error("expected 'dims <m> <n>'", line_no, 1);
      dims = std::pair{parse_count(tokens[1], line_no), parse_count(tokens[2], line_no)};
      continue;
    }

    const auto [m, n] = *dims;
    if (rows.size() == m)
      throw parse_error("more rows than the declared " + std::to_string(m), line_no, 1);
    const auto tokens = split_entries(line, line_no);
    if (tokens.size() != n)
      throw parse_error("row has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(n), line_no,
                        1);
    Vector r;
    r.reserve(n);
    for (const auto& token : tokens) {
      bool reduced = false;
      try {
        r.push_back(parse_element(*ring, token.text, &reduced));
      } catch (const parse_error& e) {
        throw parse_error(e.what(), line_no, token.column + e.column() - 1);
      }
      if (reduced)
        notes.push_back("line " + std::to_string(line_no) + ", column " + std::to_string(token.column) + ": '" +
                        std::string(token.text) + "' reduced to " + format_element(*ring, r.back()));
    }
    rows.push_back(std::move(r));
  }

  if (!ring) throw parse_error("missing 'ring' line", line_no + 1, 1);
  if (!dims) throw parse_error("missing 'dims' line", line_no + 1, 1);
  if (rows.size() != dims->first)
    throw parse_error("expected " + std::to_string(dims->first) + " rows, found " + std::to_string(rows.size()),
                      line_no + 1, 1);
  return MatrixFile{*ring, Matrix(std::move(rows), dims->second), std::move(notes)};
}

MatrixFile read_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_matrix(in);
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path.string() + "'");
  return read_matrix(in);
}

std::string write_matrix(const Ring& ring, const Matrix& a) {
  std::string text = "ring " + ring.descriptor() + "\n";
  text += "dims " + std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (const auto& r : a.row_list()) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j > 0) text += ' ';
      text += format_element(ring, r[j]);
    }
    text += '\n';
  }
  return text;
}

}  // namespace ringmat
