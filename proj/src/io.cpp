#include "sepvar/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace sepvar {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool is_blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

std::vector<std::pair<std::string, std::size_t>> split_words(const std::string& s) {
  std::vector<std::pair<std::string, std::size_t>> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) break;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    words.emplace_back(s.substr(start, i - start), start + 1);
  }
  return words;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class ExprParser {
 public:
  ExprParser(const std::string& text, const RingPtr& ring, std::size_t line, std::size_t offset)
      : text_(text), ring_(ring), line_(line), offset_(offset) {
    for (std::size_t i = 0; i < ring_->size(); ++i) index_[ring_->name(i)] = i;
  }

  Polynomial parse() {
    std::vector<Monomial> ms;
    skip_ws();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Monomial m = parse_term();
      if (negative) m.coeff = -m.coeff;
      ms.push_back(std::move(m));
      skip_ws();
      if (at_end()) break;
    }
    return Polynomial::from_monomials(ring_, std::move(ms));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, offset_ + pos_ + 1, msg);
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  mpz_class parse_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(text_.substr(start, pos_ - start));
  }

  Monomial parse_term() {
    skip_ws();
    const std::size_t n = ring_->size();
    Scalar coeff = Scalar::one(ring_->field());
    std::vector<Term::Exponent> exps(n, 0);
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpq_class value(parse_integer());
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t col = pos_;
        mpz_class den = parse_integer();
        if (den == 0) {
          pos_ = col;
          fail("zero denominator");
        }
        value = mpq_class(value.get_num(), den);
      }
      try {
        coeff = Scalar(ring_->field(), value);
      } catch (const std::domain_error& e) {
        fail(e.what());
      }
      skip_ws();
      if (peek() == '*') {
        ++pos_;
      } else {
        need_factor = false;
      }
    }
    if (need_factor) {
      while (true) {
        skip_ws();
        parse_factor(exps);
        skip_ws();
        if (peek() != '*') break;
        ++pos_;
      }
    }
    return {Term(std::move(exps)), coeff};
  }

  void parse_factor(std::vector<Term::Exponent>& exps) {
    if (!is_ident_start(peek())) fail("expected a variable");
    std::size_t start = pos_;
    while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    auto it = index_.find(name);
    if (it == index_.end()) {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    unsigned long e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      mpz_class v = parse_integer();
      if (!v.fits_ulong_p() || v > 1000000) fail("exponent too large");
      e = v.get_ui();
    }
    exps[it->second] += static_cast<Term::Exponent>(e);
  }

  const std::string& text_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

std::vector<std::string> expand_var_token(const std::string& tok, std::size_t line,
                                          std::size_t col) {
  auto lb = tok.find('[');
  if (lb == std::string::npos) {
    if (tok.empty() || !is_ident_start(tok[0])) throw ParseError(line, col, "bad variable name");
    for (char c : tok)
      if (!is_ident_char(c)) throw ParseError(line, col, "bad variable name '" + tok + "'");
    return {tok};
  }
  // name[a..b]
  auto dots = tok.find("..", lb);
  if (dots == std::string::npos || tok.back() != ']' || lb == 0)
    throw ParseError(line, col, "expected name[a..b]");
  std::string base = tok.substr(0, lb);
  std::string a = tok.substr(lb + 1, dots - lb - 1);
  std::string b = tok.substr(dots + 2, tok.size() - dots - 3);
  std::size_t lo, hi;
  try {
    lo = std::stoul(a);
    hi = std::stoul(b);
  } catch (const std::exception&) {
    throw ParseError(line, col, "bad range in '" + tok + "'");
  }
  if (lo > hi) throw ParseError(line, col, "empty range in '" + tok + "'");
  std::vector<std::string> names;
  for (std::size_t i = lo; i <= hi; ++i) names.push_back(base + std::to_string(i));
  return names;
}

}  // namespace

Polynomial parse_polynomial(const std::string& expr, const RingPtr& ring, std::size_t line) {
  return ExprParser(expr, ring, line, 0).parse();
}

PolySystem parse_system(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  enum class Stage { Field, Vars, Polys } stage = Stage::Field;
  Field field = Field::Q;
  bool boolean = false;
  RingPtr ring;
  std::vector<Polynomial> polys;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string line = strip_comment(raw);
    if (is_blank(line)) continue;
    auto words = split_words(line);
    const auto& [keyword, kwcol] = words[0];
    switch (stage) {
      case Stage::Field: {
        if (keyword != "field") throw ParseError(lineno, kwcol, "expected 'field'");
        if (words.size() < 2) throw ParseError(lineno, kwcol, "missing field name");
        if (words[1].first == "Q") {
          field = Field::Q;
        } else if (words[1].first == "F2") {
          field = Field::F2;
        } else {
          throw ParseError(lineno, words[1].second, "unknown field '" + words[1].first + "'");
        }
        for (std::size_t i = 2; i < words.size(); ++i) {
          if (words[i].first != "boolean")
            throw ParseError(lineno, words[i].second, "unexpected '" + words[i].first + "'");
          boolean = true;
        }
        if (boolean && field != Field::F2)
          throw ParseError(lineno, kwcol, "boolean mode requires field F2");
        stage = Stage::Vars;
        break;
      }
      case Stage::Vars: {
        if (keyword != "vars") throw ParseError(lineno, kwcol, "expected 'vars'");
        std::vector<std::string> names;
        for (std::size_t i = 1; i < words.size(); ++i) {
          auto expanded = expand_var_token(words[i].first, lineno, words[i].second);
          names.insert(names.end(), expanded.begin(), expanded.end());
        }
        if (names.empty()) throw ParseError(lineno, kwcol, "no variables declared");
        try {
          ring = Ring::make(names.size(), field, names, boolean);
        } catch (const std::invalid_argument& e) {
          throw ParseError(lineno, kwcol, e.what());
        }
        stage = Stage::Polys;
        break;
      }
      case Stage::Polys: {
        if (keyword != "poly") throw ParseError(lineno, kwcol, "expected 'poly'");
        std::size_t start = kwcol - 1 + keyword.size();
        Polynomial p = ExprParser(line.substr(start), ring, lineno, start).parse();
        if (!p.is_zero()) polys.push_back(std::move(p));
        break;
      }
    }
  }
  if (stage != Stage::Polys) throw ParseError(lineno + 1, 1, "missing field or vars header");
  return PolySystem(ring, std::move(polys));
}

std::string format_system(const PolySystem& sys) {
  const Ring& ring = *sys.ring();
  std::string s = "field " + to_string(ring.field());
  if (ring.boolean()) s += " boolean";
  s += "\nvars";
  for (const auto& n : ring.names()) s += " " + n;
  s += "\n";
  for (const auto& g : sys.generators()) s += "poly " + g.to_string() + "\n";
  return s;
}

IntMatrix parse_integer_matrix(const std::string& text) {
  IntMatrix rows;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (is_blank(line)) continue;
    std::vector<mpz_class> row;
    for (const auto& [w, col] : split_words(line)) {
      try {
        row.emplace_back(w[0] == '+' ? w.substr(1) : w);
      } catch (const std::invalid_argument&) {
        throw ParseError(lineno, col, "expected an integer, got '" + w + "'");
      }
    }
    if (!rows.empty() && row.size() != rows[0].size())
      throw ParseError(lineno, 1, "row length differs from the first row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(lineno + 1, 1, "matrix has no rows");
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sepvar
