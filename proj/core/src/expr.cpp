#include "oreqb/expr.hpp"

#include <cctype>

#include "oreqb/error.hpp"

namespace oreqb {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Elem parse_full(const FiniteRing& R) {
    skip_ws();
    if (at_end()) fail("empty element literal");
    const Elem e = expr(R);
    skip_ws();
    if (!at_end()) fail("unexpected trailing input '" + std::string(text_.substr(pos_)) + "'");
    return e;
  }

  std::vector<Elem> parse_list(const FiniteRing& R) {
    std::vector<Elem> out;
    skip_ws();
    expect('[');
    skip_ws();
    if (peek() == ']') {
      ++pos_;
    } else {
      while (true) {
        out.push_back(expr(R));
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect(']');
        break;
      }
    }
    skip_ws();
    if (!at_end()) fail("unexpected trailing input after coefficient list");
    return out;
  }

 private:
  Elem expr(const FiniteRing& R) {
    if (const auto* sub = std::get_if<SubringShape>(&R.shape())) {
      const std::size_t start = pos_;
      const Elem a = expr(*sub->ambient);
      if (auto low = sub->lower(a)) return *low;
      pos_ = start;
      fail("element " + sub->ambient->name(a) + " is not in the subring");
    }
    Elem acc = term(R);
    while (true) {
      skip_ws();
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc = R.add(acc, term(R));
      } else if (c == '-') {
        ++pos_;
        acc = R.sub(acc, term(R));
      } else {
        return acc;
      }
    }
  }

  Elem term(const FiniteRing& R) {
    Elem acc = unary(R);
    while (true) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc = R.mul(acc, unary(R));
    }
  }

  Elem unary(const FiniteRing& R) {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return R.neg(unary(R));
    }
    return power(R);
  }

  Elem power(const FiniteRing& R) {
    const Elem base = atom(R);
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    const std::uint64_t k = integer();
    Elem acc = R.one();
    for (std::uint64_t i = 0; i < k; ++i) acc = R.mul(acc, base);
    return acc;
  }

  Elem atom(const FiniteRing& R) {
    skip_ws();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return R.from_int(static_cast<std::int64_t>(integer()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                           peek() == '\'')) {
        name += text_[pos_++];
      }
      if (auto e = resolve_identifier(R, name)) return *e;
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    if (c == '(') return paren_or_tuple(R);
    if (c == '[') return matrix(R);
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  static std::optional<Elem> resolve_identifier(const FiniteRing& R, const std::string& name) {
    if (auto e = R.find(name)) return e;
    if (const auto* q = std::get_if<QuotientShape>(&R.shape())) {
      const FiniteRing& B = *q->base;
      std::vector<Elem> c(q->degree(), B.zero());
      if (name == q->var) {
        if (q->degree() >= 2) {
          c[1] = B.one();
        } else {
          c[0] = B.neg(q->modulus[0]);
        }
        return q->encode(c);
      }
      if (auto inner = resolve_identifier(B, name)) {
        c[0] = *inner;
        return q->encode(c);
      }
    }
    return std::nullopt;
  }

  Elem paren_or_tuple(const FiniteRing& R) {
    const std::size_t open = pos_;
    ++pos_;
    if (const auto* prod = std::get_if<ProductShape>(&R.shape())) {
      try {
        const Elem l = expr(*prod->left);
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          const Elem r = expr(*prod->right);
          skip_ws();
          expect(')');
          return prod->encode(l, r);
        }
      } catch (const ParseError&) {
      }
      pos_ = open + 1;
    }
    const Elem e = expr(R);
    skip_ws();
    expect(')');
    return e;
  }

  Elem matrix(const FiniteRing& R) {
    const auto* shape = std::get_if<MatrixShape>(&R.shape());
    if (shape == nullptr) fail("matrix literal is not valid in this ring");
    const FiniteRing& B = *shape->base;
    const std::size_t open = pos_;
    ++pos_;
    skip_ws();
    std::vector<std::vector<Elem>> rows;
    if (peek() == '[') {
      while (true) {
        skip_ws();
        expect('[');
        rows.push_back(row(B, ']'));
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect(']');
        break;
      }
    } else {
      while (true) {
        rows.push_back(row(B, '\0'));
        skip_ws();
        if (peek() == ';') {
          ++pos_;
          continue;
        }
        expect(']');
        break;
      }
    }
    const std::uint32_t k = shape->size;
    auto fail_at_open = [&](const std::string& msg) {
      pos_ = open;
      fail(msg);
    };
    if (rows.size() != k) fail_at_open("matrix literal needs " + std::to_string(k) + " rows");
    std::vector<Elem> entries;
    for (const auto& r : rows) {
      if (r.size() != k) fail_at_open("matrix row needs " + std::to_string(k) + " entries");
      entries.insert(entries.end(), r.begin(), r.end());
    }
    if (shape->upper_triangular && !B.is_zero(entries[2]))
      fail_at_open("lower-left entry of an upper-triangular matrix must be 0");
    return shape->encode(entries);
  }

  // Comma-separated entries. In nested form the closing ']' is consumed;
  // in row form parsing stops before ';' or ']'.
  std::vector<Elem> row(const FiniteRing& B, char close) {
    std::vector<Elem> out;
    while (true) {
      out.push_back(expr(B));
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (close != '\0') expect(close);
      return out;
    }
  }

  std::uint64_t integer() {
    std::uint64_t v = 0;
    bool any = false;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (v > (1ull << 62)) fail("integer literal too large");
      any = true;
    }
    if (!any) fail("expected integer");
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      if (at_end()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "', found '" + peek() + "'");
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Elem parse_element(const FiniteRing& ring, std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
    trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.remove_suffix(1);
  if (auto e = ring.find(trimmed)) return *e;
  return Parser(text).parse_full(ring);
}

std::vector<Elem> parse_coefficient_list(const FiniteRing& ring, std::string_view text) {
  return Parser(text).parse_list(ring);
}

std::string format_coefficient_list(const FiniteRing& ring, const std::vector<Elem>& coeffs) {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ",";
    out += ring.name(coeffs[i]);
  }
  return out + "]";
}

}  // namespace oreqb
