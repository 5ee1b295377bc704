#include "qd/parse.hpp"

#include <cctype>
#include <map>

namespace qd {

namespace {

// Linear combination in which a term may lack a path (a pure scalar).
using Value = std::map<std::optional<Path>, ParamPoly>;

struct Token {
  enum Kind { number, ident, op, end } kind;
  std::string text;
};

bool is_op(char c) { return c == '+' || c == '-' || c == '*' || c == '^' || c == '(' || c == ')' || c == '/'; }

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (is_op(s[i])) {
      out.push_back({Token::op, std::string(1, s[i])});
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::number, std::string(s.substr(i, j - i))});
      i = j;
    } else {
      std::size_t j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && !is_op(s[j])) ++j;
      out.push_back({Token::ident, std::string(s.substr(i, j - i))});
      i = j;
    }
  }
  out.push_back({Token::end, ""});
  return out;
}

class Parser {
 public:
  Parser(const Quiver* q, RingPtr ring, std::string_view text)
      : q_(q), ring_(std::move(ring)), text_(text), toks_(tokenize(text)) {}

  Value parse() {
    Value v = expr();
    if (peek().kind != Token::end) fail("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept_op(char c) {
    if (peek().kind == Token::op && peek().text[0] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error("cannot parse '" + std::string(text_) + "': " + why);
  }

  Value scalar(const ParamPoly& p) { return Value{{std::nullopt, p}}; }

  static void add_into(Value& into, const Value& v, bool negate) {
    for (const auto& [k, c] : v) {
      auto it = into.find(k);
      ParamPoly add = negate ? -c : c;
      if (it == into.end()) {
        if (!add.is_zero()) into.emplace(k, add);
      } else {
        it->second += add;
        if (it->second.is_zero()) into.erase(it);
      }
    }
  }

  Value multiply(const Value& a, const Value& b) {
    Value out;
    for (const auto& [pa, ca] : a) {
      for (const auto& [pb, cb] : b) {
        std::optional<Path> p;
        if (pa && pb) {
          auto c = compose(*q_, *pa, *pb);
          if (!c) fail("paths " + pa->to_string(*q_) + " and " + pb->to_string(*q_) + " do not compose");
          p = *c;
        } else {
          p = pa ? pa : pb;
        }
        add_into(out, Value{{p, ca * cb}}, false);
      }
    }
    return out;
  }

  Value expr() {
    Value out;
    bool neg = false;
    if (accept_op('-')) neg = true;
    else accept_op('+');
    add_into(out, term(), neg);
    while (true) {
      if (accept_op('+')) add_into(out, term(), false);
      else if (accept_op('-')) add_into(out, term(), true);
      else break;
    }
    return out;
  }

  bool starts_factor() const {
    const Token& t = peek();
    return t.kind == Token::number || t.kind == Token::ident || (t.kind == Token::op && t.text == "(");
  }

  Value term() {
    Value v = factor();
    while (true) {
      if (accept_op('*')) {
        v = multiply(v, factor());
      } else if (starts_factor()) {
        v = multiply(v, factor());
      } else {
        break;
      }
    }
    return v;
  }

  Value factor() {
    Value base = atom();
    if (accept_op('^')) {
      if (peek().kind != Token::number) fail("expected exponent");
      int e = std::stoi(toks_[pos_++].text);
      Value r = scalar(ParamPoly::constant(ring_, 1));
      if (e == 0) {
        // p^0 of a cycle is the idempotent at its vertex.
        std::optional<int> v;
        for (const auto& [path, c] : base) {
          if (!path) continue;
          if (path->source() != path->target() || (v && *v != path->source())) fail("zero power of a non-cycle");
          v = path->source();
        }
        if (v) return Value{{Path::trivial(*v), ParamPoly::constant(ring_, 1)}};
        return r;
      }
      Value acc = base;
      for (int i = 1; i < e; ++i) acc = multiply(acc, base);
      return acc;
    }
    return base;
  }

  Value atom() {
    const Token t = peek();
    if (t.kind == Token::number) {
      ++pos_;
      Rational c(t.text);
      if (accept_op('/')) {
        if (peek().kind != Token::number) fail("expected denominator");
        c /= Rational(toks_[pos_++].text);
      }
      return scalar(ParamPoly::constant(ring_, c));
    }
    if (t.kind == Token::ident) {
      ++pos_;
      if (ring_->index_of(t.text)) return scalar(ParamPoly::variable(ring_, t.text));
      if (q_) {
        if (auto a = q_->find_arrow(t.text)) return Value{{Path::arrow(*q_, *a), ParamPoly::constant(ring_, 1)}};
        if (t.text.size() > 2 && t.text[0] == 'e' && (t.text[1] == '_' || t.text[1] == ':'))
          if (auto v = q_->find_vertex(t.text.substr(2)))
            return Value{{Path::trivial(*v), ParamPoly::constant(ring_, 1)}};
      }
      fail("unknown symbol '" + t.text + "'");
    }
    if (accept_op('(')) {
      Value v = expr();
      if (!accept_op(')')) fail("missing ')'");
      return v;
    }
    fail(t.kind == Token::end ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  const Quiver* q_;
  RingPtr ring_;
  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse_element(const Quiver& q, const RingPtr& ring, std::string_view text,
                             std::optional<int> default_vertex) {
  Value v = Parser(&q, ring, text).parse();
  AlgebraElement out(ring);
  for (const auto& [p, c] : v) {
    if (p) {
      out.add_term(*p, c);
    } else if (default_vertex) {
      out.add_term(Path::trivial(*default_vertex), c);
    } else if (q.vertices().size() == 1) {
      out.add_term(Path::trivial(0), c);
    } else {
      throw Error("cannot parse '" + std::string(text) + "': scalar term needs a vertex (write e_V)");
    }
  }
  return out;
}

ParamPoly parse_poly(const RingPtr& ring, std::string_view text) {
  Value v = Parser(nullptr, ring, text).parse();
  ParamPoly out(ring);
  for (const auto& [p, c] : v) out += c;
  return out;
}

}  // namespace qd
