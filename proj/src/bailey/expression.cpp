#include <bzeta/bailey/expression.hpp>

#include <bzeta/qcore/combinatorics.hpp>

#include <cctype>
#include <limits>

namespace bzeta::bailey {

namespace {

struct Token {
  enum class Kind { number, identifier, symbol, end };
  Kind kind = Kind::end;
  std::string text;
  std::size_t column = 0;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t column = i + 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tokens.push_back({Token::Kind::number, std::string(text.substr(i, j - i)), column});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      tokens.push_back({Token::Kind::identifier, std::string(text.substr(i, j - i)), column});
      i = j;
    } else if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
      tokens.push_back({Token::Kind::symbol, std::string(1, c), column});
      ++i;
    } else {
      throw ExpressionError(std::string("unexpected character '") + c + "'", column);
    }
  }
  tokens.push_back({Token::Kind::end, "", text.size() + 1});
  return tokens;
}

const std::map<std::string, std::size_t, std::less<>>& call_arities() {
  static const std::map<std::string, std::size_t, std::less<>> arities{
      {"sum", 4}, {"prod", 4}, {"poch", 3}, {"qint", 1}, {"delta", 1}, {"binom", 2}};
  return arities;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (peek().kind != Token::Kind::end) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool accept(const char* symbol) {
    if (peek().kind == Token::Kind::symbol && peek().text == symbol) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const char* symbol) {
    if (!accept(symbol)) fail(std::string("expected '") + symbol + "'");
  }
  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    throw ExpressionError(t.kind == Token::Kind::end ? message + " at end of expression" : message,
                          t.column);
  }

  static ExprPtr node(Expr::Kind kind, std::size_t column, std::vector<ExprPtr> args,
                      std::string name = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->column = column;
    e->args = std::move(args);
    e->name = std::move(name);
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (true) {
      const std::size_t column = peek().column;
      if (accept("+")) {
        lhs = node(Expr::Kind::add, column, {lhs, term()});
      } else if (accept("-")) {
        lhs = node(Expr::Kind::subtract, column, {lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (true) {
      const std::size_t column = peek().column;
      if (accept("*")) {
        lhs = node(Expr::Kind::multiply, column, {lhs, unary()});
      } else if (accept("/")) {
        lhs = node(Expr::Kind::divide, column, {lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    const std::size_t column = peek().column;
    if (accept("-")) return node(Expr::Kind::negate, column, {unary()});
    return power();
  }

  ExprPtr exponent() {
    const std::size_t column = peek().column;
    if (accept("-")) return node(Expr::Kind::negate, column, {exponent()});
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    const std::size_t column = peek().column;
    if (accept("^")) return node(Expr::Kind::power, column, {base, exponent()});
    return base;
  }

  ExprPtr atom() {
    const Token t = peek();
    if (t.kind == Token::Kind::number) {
      ++pos_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::number;
      e->number = qcore::BigInt(t.text, 10);
      e->column = t.column;
      return e;
    }
    if (t.kind == Token::Kind::identifier) {
      ++pos_;
      if (!accept("(")) return node(Expr::Kind::variable, t.column, {}, t.text);
      const auto arity = call_arities().find(t.text);
      if (arity == call_arities().end()) {
        throw ExpressionError("unknown function '" + t.text + "'", t.column);
      }
      std::vector<ExprPtr> args;
      if (!accept(")")) {
        do {
          args.push_back(expr());
        } while (accept(","));
        expect(")");
      }
      if (args.size() != arity->second) {
        throw ExpressionError(t.text + " expects " + std::to_string(arity->second) +
                                  " arguments, got " + std::to_string(args.size()),
                              t.column);
      }
      if ((t.text == "sum" || t.text == "prod") && args[0]->kind != Expr::Kind::variable) {
        throw ExpressionError(t.text + " needs a variable name as first argument",
                              args[0]->column);
      }
      return node(Expr::Kind::call, t.column, std::move(args), t.text);
    }
    if (accept("(")) {
      ExprPtr inner = expr();
      expect(")");
      return inner;
    }
    fail(t.kind == Token::Kind::end ? "expected operand" : "unexpected '" + t.text + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::add:
    case Expr::Kind::subtract: return 1;
    case Expr::Kind::multiply:
    case Expr::Kind::divide: return 2;
    case Expr::Kind::negate: return 3;
    case Expr::Kind::power: return 4;
    default: return 5;
  }
}

std::string wrap(const Expr& e, int required) {
  return precedence(e) < required ? "(" + to_string(e) + ")" : to_string(e);
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number: return e.number.get_str();
    case Expr::Kind::variable: return e.name;
    case Expr::Kind::negate: return "-" + wrap(*e.args[0], 3);
    case Expr::Kind::add: return wrap(*e.args[0], 1) + " + " + wrap(*e.args[1], 2);
    case Expr::Kind::subtract: return wrap(*e.args[0], 1) + " - " + wrap(*e.args[1], 2);
    case Expr::Kind::multiply: return wrap(*e.args[0], 2) + "*" + wrap(*e.args[1], 3);
    case Expr::Kind::divide: return wrap(*e.args[0], 2) + "/" + wrap(*e.args[1], 3);
    case Expr::Kind::power: {
      const Expr& ex = *e.args[1];
      const bool bare = ex.kind == Expr::Kind::power || precedence(ex) == 5;
      return wrap(*e.args[0], 5) + "^" + (bare ? to_string(ex) : "(" + to_string(ex) + ")");
    }
    case Expr::Kind::call: {
      std::string out = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i != 0) out += ", ";
        out += to_string(*e.args[i]);
      }
      return out + ")";
    }
  }
  return {};
}

bool equivalent(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.name != b.name || a.number != b.number ||
      a.args.size() != b.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!equivalent(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

Monomial evaluate_monomial(const Expr& e, const std::optional<Rational>& s) {
  switch (e.kind) {
    case Expr::Kind::number: return Monomial::scalar(Rational(e.number));
    case Expr::Kind::variable:
      if (e.name == "q") return Monomial::q_power(1);
      if (e.name == "s" && s) return Monomial::scalar(*s);
      throw ExpressionError("'" + e.name + "' is not allowed in a monomial parameter", e.column);
    case Expr::Kind::negate: {
      Monomial m = evaluate_monomial(*e.args[0], s);
      return {-m.coefficient, m.exponent};
    }
    case Expr::Kind::multiply:
      return evaluate_monomial(*e.args[0], s) * evaluate_monomial(*e.args[1], s);
    case Expr::Kind::divide: {
      const Monomial den = evaluate_monomial(*e.args[1], s);
      if (den.is_zero()) throw ExpressionError("division by zero", e.column);
      return evaluate_monomial(*e.args[0], s) / den;
    }
    case Expr::Kind::power: {
      const Monomial base = evaluate_monomial(*e.args[0], s);
      const Monomial ex = evaluate_monomial(*e.args[1], s);
      if (ex.exponent != 0 || !qcore::is_integer(ex.coefficient) ||
          !ex.coefficient.get_num().fits_slong_p()) {
        throw ExpressionError("exponent must be an integer constant", e.args[1]->column);
      }
      const long k = ex.coefficient.get_num().get_si();
      if (k < 0 && base.is_zero()) throw ExpressionError("zero to a negative power", e.column);
      return base.pow(k);
    }
    default:
      throw ExpressionError("parameter must be a monomial c*q^k", e.column);
  }
}

namespace {

template <typename Algebra>
class Evaluator {
 public:
  using E = typename Algebra::Element;

  struct Val {
    std::optional<Rational> scalar;
    std::optional<E> element;
  };

  explicit Evaluator(const Algebra& alg) : alg_(alg) {}

  E element_of(const Val& v) const { return v.scalar ? alg_.scalar(*v.scalar) : *v.element; }

  Val eval(const Expr& e, Environment& env) const {
    switch (e.kind) {
      case Expr::Kind::number: return scalar(Rational(e.number));
      case Expr::Kind::variable: return variable(e, env);
      case Expr::Kind::negate: {
        Val v = eval(*e.args[0], env);
        if (v.scalar) return scalar(-*v.scalar);
        return element(-*v.element);
      }
      case Expr::Kind::add:
      case Expr::Kind::subtract:
      case Expr::Kind::multiply: {
        Val a = eval(*e.args[0], env);
        Val b = eval(*e.args[1], env);
        if (a.scalar && b.scalar) {
          if (e.kind == Expr::Kind::add) return scalar(*a.scalar + *b.scalar);
          if (e.kind == Expr::Kind::subtract) return scalar(*a.scalar - *b.scalar);
          return scalar(*a.scalar * *b.scalar);
        }
        E x = element_of(a);
        const E y = element_of(b);
        if (e.kind == Expr::Kind::add) x += y;
        if (e.kind == Expr::Kind::subtract) x -= y;
        if (e.kind == Expr::Kind::multiply) x *= y;
        return element(std::move(x));
      }
      case Expr::Kind::divide: {
        Val a = eval(*e.args[0], env);
        Val b = eval(*e.args[1], env);
        if (b.scalar) {
          if (*b.scalar == 0) throw ExpressionError("division by zero", e.column);
          if (a.scalar) return scalar(*a.scalar / *b.scalar);
          E x = *a.element;
          x *= Rational(1 / *b.scalar);
          return element(std::move(x));
        }
        E inv = guarded(e, [&] { return alg_.inverse(*b.element); });
        E x = element_of(a);
        x *= inv;
        return element(std::move(x));
      }
      case Expr::Kind::power: {
        Val base = eval(*e.args[0], env);
        const std::int64_t k = integer(*e.args[1], env);
        if (base.scalar) {
          return guarded(e, [&] { return scalar(qcore::pow(*base.scalar, k)); });
        }
        return guarded(e, [&] { return element(alg_.pow(*base.element, k)); });
      }
      case Expr::Kind::call: return call(e, env);
    }
    throw ExpressionError("unsupported expression", e.column);
  }

  std::int64_t integer(const Expr& e, Environment& env) const {
    Val v = eval(e, env);
    if (!v.scalar || !qcore::is_integer(*v.scalar) || !v.scalar->get_num().fits_slong_p()) {
      throw ExpressionError("expected an integer", e.column);
    }
    return v.scalar->get_num().get_si();
  }

 private:
  static Val scalar(Rational r) { return {std::move(r), std::nullopt}; }
  static Val element(E e) { return {std::nullopt, std::move(e)}; }

  template <typename F>
  static auto guarded(const Expr& e, F f) -> decltype(f()) {
    try {
      return f();
    } catch (const std::domain_error& err) {
      throw ExpressionError(err.what(), e.column);
    }
  }

  Val variable(const Expr& e, const Environment& env) const {
    if (e.name == "q") return element(alg_.q());
    if (e.name == "s") {
      if (!env.s) throw ExpressionError("'s' used but no value for s was given", e.column);
      return scalar(*env.s);
    }
    if (auto it = env.indices.find(e.name); it != env.indices.end()) {
      return scalar(Rational(static_cast<long>(it->second)));
    }
    throw ExpressionError("unbound variable '" + e.name + "'", e.column);
  }

  Val call(const Expr& e, Environment& env) const {
    const auto& args = e.args;
    if (e.name == "sum" || e.name == "prod") {
      const std::string& var = args[0]->name;
      const std::int64_t lo = integer(*args[1], env);
      const std::int64_t hi = integer(*args[2], env);
      const bool is_sum = e.name == "sum";
      Val acc = scalar(Rational(is_sum ? 0 : 1));
      const auto found = env.indices.find(var);
      const bool shadowed = found != env.indices.end();
      const std::int64_t saved = shadowed ? found->second : 0;
      for (std::int64_t i = lo; i <= hi; ++i) {
        env.indices[var] = i;
        Val term = eval(*args[3], env);
        if (acc.scalar && term.scalar) {
          acc = scalar(is_sum ? Rational(*acc.scalar + *term.scalar)
                              : Rational(*acc.scalar * *term.scalar));
        } else {
          E x = element_of(acc);
          if (is_sum) {
            x += element_of(term);
          } else {
            x *= element_of(term);
          }
          acc = element(std::move(x));
        }
      }
      if (shadowed) {
        env.indices[var] = saved;
      } else {
        env.indices.erase(var);
      }
      return acc;
    }
    if (e.name == "poch") {
      Val x = eval(*args[0], env);
      Val base = eval(*args[1], env);
      const std::int64_t count = integer(*args[2], env);
      if (count < 0) throw ExpressionError("poch count must be nonnegative", args[2]->column);
      if (x.scalar && base.scalar) {
        Rational product(1);
        Rational xb = *x.scalar;
        for (std::int64_t j = 0; j < count; ++j) {
          product *= 1 - xb;
          xb *= *base.scalar;
        }
        return scalar(product);
      }
      E product = alg_.scalar(1);
      E xb = element_of(x);
      const E b = element_of(base);
      for (std::int64_t j = 0; j < count; ++j) {
        product *= alg_.scalar(1) - xb;
        xb *= b;
      }
      return element(std::move(product));
    }
    if (e.name == "qint") {
      const std::int64_t r = integer(*args[0], env);
      if (r < 1) throw ExpressionError("qint requires r >= 1", args[0]->column);
      return element(alg_.q_integer(static_cast<std::size_t>(r)));
    }
    if (e.name == "delta") {
      return scalar(Rational(integer(*args[0], env) == 0 ? 1 : 0));
    }
    if (e.name == "binom") {
      const std::int64_t m = integer(*args[0], env);
      const std::int64_t k = integer(*args[1], env);
      if (m < 0) throw ExpressionError("binom requires a nonnegative top argument", e.column);
      return scalar(Rational(qcore::big_binomial(static_cast<std::size_t>(m), k)));
    }
    throw ExpressionError("unknown function '" + e.name + "'", e.column);
  }

  const Algebra& alg_;
};

}  // namespace

template <typename Algebra>
typename Algebra::Element evaluate(const Expr& e, const Algebra& alg, const Environment& env) {
  Evaluator<Algebra> evaluator(alg);
  Environment scratch = env;
  return evaluator.element_of(evaluator.eval(e, scratch));
}

template SeriesAlgebra::Element evaluate<SeriesAlgebra>(const Expr&, const SeriesAlgebra&,
                                                        const Environment&);
template RationalAlgebra::Element evaluate<RationalAlgebra>(const Expr&, const RationalAlgebra&,
                                                            const Environment&);

}  // namespace bzeta::bailey
