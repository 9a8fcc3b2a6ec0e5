#include "envrad/session.hpp"

#include <cctype>
#include <set>

#include "envrad/errors.hpp"
#include "envrad/module_algebra.hpp"

namespace envrad {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message, at.line, at.column, at.kind == Tok::End ? "end of input" : at.text);
  }
  [[noreturn]] void fail(const std::string& message) const { fail(message, tok_); }

  bool is(std::string_view punct) const { return tok_.kind == Tok::Punct && tok_.text == punct; }
  bool is_word(std::string_view word) const { return tok_.kind == Tok::Ident && tok_.text == word; }

  void expect(std::string_view punct) {
    if (!is(punct)) fail("expected '" + std::string(punct) + "'");
    advance();
  }
  void expect_word(std::string_view word) {
    if (!is_word(word)) fail("expected '" + std::string(word) + "'");
    advance();
  }
  Token expect_ident() {
    if (tok_.kind != Tok::Ident) fail("expected a name");
    return take();
  }
  Token expect_int() {
    if (tok_.kind != Tok::Int) fail("expected an integer");
    return take();
  }

 private:
  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#' || (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/')) {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++pos_;
  }

  void advance() {
    skip_space();
    tok_.line = line_;
    tok_.column = col_;
    if (pos_ >= src_.size()) {
      tok_.kind = Tok::End;
      tok_.text.clear();
      return;
    }
    const std::size_t start = pos_;
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        bump();
      }
      tok_.kind = Tok::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) bump();
      tok_.kind = Tok::Int;
    } else if (std::string_view("[](),;=:+-*^/").find(c) != std::string_view::npos) {
      bump();
      tok_.kind = Tok::Punct;
    } else {
      bump();
      while (pos_ < src_.size() && (static_cast<unsigned char>(src_[pos_]) & 0xC0) == 0x80) bump();
      tok_.kind = Tok::Punct;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      throw ParseError("unexpected character", tok_.line, tok_.column, tok_.text);
    }
    tok_.text = std::string(src_.substr(start, pos_ - start));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  Token tok_{Tok::End, "", 1, 1};
};

// Scalar or vector intermediate value of an expression.
struct Value {
  Polynomial scalar;
  std::optional<ModuleVector> vec;
};

class ExprParser {
 public:
  ExprParser(Lexer& lex, const RingPtr& ring, const ModulePtr& module)
      : lex_(lex), ring_(ring), module_(module) {}

  Polynomial polynomial() {
    const Token start = lex_.peek();
    Value v = expr();
    if (v.vec) lex_.fail("expected a polynomial, found a vector", start);
    return v.scalar;
  }

  ModuleVector vector() {
    const Token start = lex_.peek();
    return as_vector(expr(), start);
  }

 private:
  ModuleVector as_vector(Value v, const Token& at) {
    if (v.vec) return *v.vec;
    if (v.scalar.is_zero()) return ModuleVector(module_);
    if (module_->rank() == 1) return v.scalar * ModuleVector::basis(module_, 0);
    lex_.fail("expected a vector, found a polynomial", at);
  }

  Value add(Value a, Value b, bool subtract, const Token& at) {
    if (b.vec.has_value() != a.vec.has_value()) {
      a = Value{Polynomial(ring_), as_vector(a, at)};
      b = Value{Polynomial(ring_), as_vector(b, at)};
    }
    if (a.vec) return Value{Polynomial(ring_), subtract ? *a.vec - *b.vec : *a.vec + *b.vec};
    return Value{subtract ? a.scalar - b.scalar : a.scalar + b.scalar, std::nullopt};
  }

  Value mul(Value a, Value b, const Token& at) {
    if (a.vec && b.vec) lex_.fail("cannot multiply two vectors", at);
    if (a.vec) return Value{Polynomial(ring_), b.scalar * *a.vec};
    if (b.vec) return Value{Polynomial(ring_), a.scalar * *b.vec};
    return Value{a.scalar * b.scalar, std::nullopt};
  }

  Value expr() {
    bool negate = false;
    if (lex_.is("+") || lex_.is("-")) negate = lex_.take().text == "-";
    Value acc = term();
    if (negate) acc = mul(Value{Polynomial::constant(ring_, -1), std::nullopt}, acc, lex_.peek());
    while (lex_.is("+") || lex_.is("-")) {
      const Token op = lex_.take();
      Value rhs = term();
      acc = add(std::move(acc), std::move(rhs), op.text == "-", op);
    }
    return acc;
  }

  bool starts_factor() const {
    const auto& t = lex_.peek();
    return t.kind == Tok::Ident || t.kind == Tok::Int || lex_.is("(") || lex_.is("[");
  }

  Value term() {
    Value acc = factor();
    for (;;) {
      const Token at = lex_.peek();
      if (lex_.is("*")) {
        lex_.take();
      } else if (!starts_factor()) {
        break;
      }
      Value rhs = factor();
      acc = mul(std::move(acc), std::move(rhs), at);
    }
    return acc;
  }

  Value factor() {
    Value base = primary();
    if (lex_.is("^")) {
      const Token op = lex_.take();
      const Token e = lex_.expect_int();
      if (base.vec) lex_.fail("cannot raise a vector to a power", op);
      if (e.text.size() > 6) lex_.fail("exponent too large", e);
      base.scalar = base.scalar.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
    return base;
  }

  Value primary() {
    const Token t = lex_.peek();
    if (t.kind == Tok::Int) {
      lex_.take();
      Rational c(mpz_class(t.text));
      if (lex_.is("/")) {
        lex_.take();
        const Token d = lex_.expect_int();
        mpz_class den(d.text);
        if (den == 0) lex_.fail("division by zero", d);
        c = Rational(mpz_class(t.text), den);
        c.canonicalize();
      }
      return Value{Polynomial::constant(ring_, c), std::nullopt};
    }
    if (t.kind == Tok::Ident) {
      lex_.take();
      return identifier(t);
    }
    if (lex_.is("(")) {
      lex_.take();
      Value v = expr();
      lex_.expect(")");
      return v;
    }
    if (lex_.is("[")) {
      lex_.take();
      std::vector<Polynomial> comps;
      if (!lex_.is("]")) {
        comps.push_back(polynomial());
        while (lex_.is(",")) {
          lex_.take();
          comps.push_back(polynomial());
        }
      }
      const Token close = lex_.peek();
      lex_.expect("]");
      if (comps.size() != module_->rank()) {
        lex_.fail("tuple has " + std::to_string(comps.size()) + " entries, expected " +
                      std::to_string(module_->rank()),
                  close);
      }
      return Value{Polynomial(ring_), ModuleVector(module_, std::move(comps))};
    }
    lex_.fail(t.kind == Tok::End ? "unexpected end of input" : "syntax error");
  }

  // An identifier is a product of variable names and at most one basis
  // name, e.g. "xy" or "x2e3" is rejected unless the pieces are declared.
  Value identifier(const Token& t) {
    std::vector<Value> pieces;
    std::string_view rest = t.text;
    while (!rest.empty()) {
      std::size_t best = 0;
      for (std::size_t i = 0; i < ring_->num_vars(); ++i) {
        const auto& name = ring_->variable_name(i);
        if (name.size() > best && rest.starts_with(name)) best = name.size();
      }
      if (best > 0) {
        auto idx = ring_->index_of(rest.substr(0, best));
        pieces.push_back(Value{Polynomial::variable(ring_, *idx), std::nullopt});
        rest.remove_prefix(best);
        continue;
      }
      std::size_t digits = 0;
      if (rest.size() > 1 && rest[0] == 'e') {
        while (1 + digits < rest.size() && std::isdigit(static_cast<unsigned char>(rest[1 + digits]))) {
          ++digits;
        }
      }
      if (digits == 0) lex_.fail("unknown identifier", t);
      const auto index = digits > 6 ? 0 : std::stoul(std::string(rest.substr(1, digits)));
      if (index < 1 || index > module_->rank()) lex_.fail("basis index out of range", t);
      pieces.push_back(Value{Polynomial(ring_), ModuleVector::basis(module_, index - 1)});
      rest.remove_prefix(1 + digits);
    }
    Value acc = pieces.front();
    for (std::size_t i = 1; i < pieces.size(); ++i) acc = mul(std::move(acc), pieces[i], t);
    return acc;
  }

  Lexer& lex_;
  const RingPtr& ring_;
  const ModulePtr& module_;
};

const std::set<std::string, std::less<>> kKeywords = {"ring", "free", "prime", "primary",
                                                       "decomp", "fixture", "ideal", "with", "uses"};

std::vector<ModuleVector> vector_list(Lexer& lex, ExprParser& ep, bool allow_empty) {
  std::vector<ModuleVector> out;
  lex.expect("[");
  if (lex.is("]") && allow_empty) {
    lex.take();
    return out;
  }
  out.push_back(ep.vector());
  while (lex.is(",")) {
    lex.take();
    out.push_back(ep.vector());
  }
  lex.expect("]");
  return out;
}

template <class T>
std::string join(const std::vector<T>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    if constexpr (std::is_same_v<T, std::string>) {
      out += items[i];
    } else {
      out += to_string(items[i]);
    }
  }
  return out;
}

}  // namespace

const Submodule* Session::find_module(std::string_view name) const {
  if (auto it = modules_.find(name); it != modules_.end()) return &it->second;
  if (auto it = primaries_.find(name); it != primaries_.end()) return &it->second.primary;
  return nullptr;
}

const Ideal* Session::find_prime(std::string_view name) const {
  auto it = primes_.find(name);
  return it == primes_.end() ? nullptr : &it->second;
}

const Decomposition* Session::find_decomposition(std::string_view name) const {
  auto it = decomps_.find(name);
  return it == decomps_.end() ? nullptr : &it->second;
}

const Submodule& Session::module_named(std::string_view name) const {
  if (auto* m = find_module(name)) return *m;
  throw PreconditionError("no module named '" + std::string(name) + "'");
}

const Ideal& Session::prime_named(std::string_view name) const {
  if (auto* p = find_prime(name)) return *p;
  throw PreconditionError("no prime named '" + std::string(name) + "'");
}

const Decomposition& Session::decomposition_named(std::string_view name) const {
  if (auto* d = find_decomposition(name)) return *d;
  throw PreconditionError("no decomposition named '" + std::string(name) + "'");
}

std::vector<Decomposition> Session::fixtures() const {
  std::vector<Decomposition> out;
  for (const auto& name : fixture_order_) out.push_back(decomps_.at(name));
  return out;
}

Polynomial Session::parse_polynomial(std::string_view text) const {
  Lexer lex(text);
  ExprParser ep(lex, ring_, module_);
  Polynomial p = ep.polynomial();
  if (lex.peek().kind != Tok::End) lex.fail("unexpected trailing input");
  return p;
}

ModuleVector Session::parse_vector(std::string_view text) const {
  Lexer lex(text);
  ExprParser ep(lex, ring_, module_);
  ModuleVector v = ep.vector();
  if (lex.peek().kind != Tok::End) lex.fail("unexpected trailing input");
  return v;
}

Session parse_session(std::string_view text) {
  Session s;
  Lexer lex(text);

  lex.expect_word("ring");
  const Token field = lex.expect_ident();
  if (field.text != "Q") lex.fail("only the rationals Q are supported", field);
  lex.expect("[");
  std::vector<std::string> names;
  std::vector<Token> name_tokens;
  do {
    if (!names.empty()) lex.take();
    name_tokens.push_back(lex.expect_ident());
    names.push_back(name_tokens.back().text);
  } while (lex.is(","));
  lex.expect("]");
  lex.expect(";");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (kKeywords.contains(names[i])) lex.fail("reserved word used as a variable", name_tokens[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (names[j] == names[i]) lex.fail("duplicate variable", name_tokens[i]);
    }
  }
  s.ring_ = make_ring(names);

  lex.expect_word("free");
  const Token rank_tok = lex.expect_int();
  if (rank_tok.text.size() > 4 || std::stoul(rank_tok.text) == 0) {
    lex.fail("rank must be between 1 and 9999", rank_tok);
  }
  lex.expect(";");
  s.module_ = make_free_module(s.ring_, std::stoul(rank_tok.text));

  ExprParser ep(lex, s.ring_, s.module_);
  std::set<std::string, std::less<>> names_used;
  auto claim = [&](const Token& t) {
    if (kKeywords.contains(t.text)) lex.fail("reserved word used as a name", t);
    if (!names_used.insert(t.text).second) lex.fail("duplicate name", t);
  };

  while (lex.peek().kind != Tok::End) {
    if (lex.is_word("prime")) {
      lex.take();
      const Token name = lex.expect_ident();
      claim(name);
      lex.expect("=");
      lex.expect_word("ideal");
      lex.expect("(");
      std::vector<Polynomial> gens{ep.polynomial()};
      while (lex.is(",")) {
        lex.take();
        gens.push_back(ep.polynomial());
      }
      lex.expect(")");
      lex.expect(";");
      s.primes_.emplace(name.text, Ideal(s.ring_, gens));
      s.statements_.push_back(PrimeDef{name.text, std::move(gens)});
    } else if (lex.is_word("primary")) {
      lex.take();
      const Token name = lex.expect_ident();
      claim(name);
      lex.expect("=");
      auto gens = vector_list(lex, ep, true);
      lex.expect_word("with");
      const Token prime = lex.expect_ident();
      const Ideal* p = s.find_prime(prime.text);
      if (p == nullptr) lex.fail("undefined prime", prime);
      lex.expect(";");
      s.primaries_.emplace(name.text,
                           PrimaryComponent{Submodule(s.module_, gens), *p, name.text, prime.text});
      s.statements_.push_back(PrimaryDef{name.text, std::move(gens), prime.text});
    } else if (lex.is_word("decomp")) {
      lex.take();
      const Token name = lex.expect_ident();
      if (s.decomps_.contains(name.text)) lex.fail("duplicate decomposition", name);
      lex.expect(":");
      std::vector<std::string> parts;
      std::vector<PrimaryComponent> comps;
      do {
        if (!parts.empty()) lex.take();
        const Token c = lex.expect_ident();
        auto it = s.primaries_.find(c.text);
        if (it == s.primaries_.end()) lex.fail("undefined primary component", c);
        parts.push_back(c.text);
        comps.push_back(it->second);
      } while (lex.is(","));
      lex.expect(";");
      std::vector<Submodule> qs;
      for (const auto& c : comps) qs.push_back(c.primary);
      auto target_it = s.modules_.find(name.text);
      Submodule target = target_it != s.modules_.end() ? target_it->second
                                                       : intersect_all(s.module_, qs);
      s.decomps_.emplace(name.text, Decomposition(std::move(target), std::move(comps)));
      s.statements_.push_back(DecompDef{name.text, std::move(parts)});
    } else if (lex.is_word("fixture")) {
      lex.take();
      const Token mod = lex.expect_ident();
      auto mit = s.modules_.find(mod.text);
      if (mit == s.modules_.end()) lex.fail("undefined module", mod);
      lex.expect_word("uses");
      const Token dec = lex.expect_ident();
      auto dit = s.decomps_.find(dec.text);
      if (dit == s.decomps_.end()) lex.fail("undefined decomposition", dec);
      lex.expect(";");
      if (!(dit->second.target() == mit->second)) {
        lex.fail("decomposition does not decompose this module", dec);
      }
      s.fixture_order_.push_back(dec.text);
      s.statements_.push_back(FixtureDef{mod.text, dec.text});
    } else if (lex.peek().kind == Tok::Ident) {
      const Token name = lex.take();
      claim(name);
      lex.expect("=");
      auto gens = vector_list(lex, ep, false);
      lex.expect(";");
      s.modules_.emplace(name.text, Submodule(s.module_, gens));
      s.statements_.push_back(ModuleDef{name.text, std::move(gens)});
    } else {
      lex.fail("expected a statement");
    }
  }
  return s;
}

std::string print_session(const Session& s) {
  std::string out = "ring Q[" + join(s.ring()->variable_names()) + "];\n";
  out += "free " + std::to_string(s.module()->rank()) + ";\n";
  for (const auto& st : s.statements()) {
    std::visit(
        [&](const auto& def) {
          using T = std::decay_t<decltype(def)>;
          if constexpr (std::is_same_v<T, ModuleDef>) {
            out += def.name + " = [" + join(def.generators) + "];\n";
          } else if constexpr (std::is_same_v<T, PrimeDef>) {
            out += "prime " + def.name + " = ideal(" + join(def.generators) + ");\n";
          } else if constexpr (std::is_same_v<T, PrimaryDef>) {
            out += "primary " + def.name + " = [" + join(def.generators) + "] with " + def.prime +
                   ";\n";
          } else if constexpr (std::is_same_v<T, DecompDef>) {
            out += "decomp " + def.name + " : " + join(def.components) + ";\n";
          } else {
            out += "fixture " + def.module + " uses " + def.decomp + ";\n";
          }
        },
        st);
  }
  return out;
}

}  // namespace envrad
