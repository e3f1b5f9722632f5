#include "dpgit/document.hpp"

#include <cctype>
#include <memory>
#include <sstream>
#include <variant>

#include "dpgit/errors.hpp"
#include "dpgit/gitstab.hpp"

namespace dpgit {

namespace {

// ---------------------------------------------------------------- lexer

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1, col = 1;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && (s[j] == '.' || s[j] == 'e' || s[j] == 'E'))
        throw ParseError("non-rational literal", line, col);
      t.kind = Tok::Number;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
    } else if (c == '.') {
      throw ParseError("non-rational literal", line, col);
    } else if (std::string_view(";,()[]=+-*/^").find(c) != std::string_view::npos) {
      t.kind = Tok::Punct;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  // End of input is reported at the last token so "poly x +" points at the '+'.
  if (!out.empty()) {
    end.line = out.back().line;
    end.col = out.back().col;
  }
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------- AST

struct Expr {
  enum class Kind { Num, Var, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind = Kind::Num;
  Integer num;
  std::string name;
  long exponent = 0;
  int line = 1, col = 1;
  std::unique_ptr<Expr> a, b;
};
using ExprPtr = std::unique_ptr<Expr>;

struct RingStmt {
  std::vector<long> weights;
  bool gaussian = false;
  std::vector<std::string> vars;
  std::vector<std::pair<int, int>> var_pos;
  int line, col;
};
struct PolyStmt {
  std::string name;
  ExprPtr expr;
  int line, col;
};
struct MatrixStmt {
  std::string name;
  std::vector<std::vector<ExprPtr>> rows;
  int line, col;
};
struct LambdaStmt {
  std::vector<long> w;
  int line, col;
};
struct PointStmt {
  std::vector<ExprPtr> coords;
  int line, col;
};
struct TaskStmt {
  std::string name;
  int line, col;
};
using Stmt = std::variant<RingStmt, PolyStmt, MatrixStmt, LambdaStmt, PointStmt, TaskStmt>;

// ---------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  std::vector<Stmt> document() {
    std::vector<Stmt> out;
    while (peek().kind != Tok::End) {
      if (is_punct(";")) {
        next();
        continue;
      }
      out.push_back(statement());
      // Keywords are reserved, so a following keyword also ends the statement.
      if (peek().kind != Tok::End && !at_keyword()) expect(";");
    }
    return out;
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  const Token& next() {
    const Token& t = t_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  bool is_punct(const char* p) const { return peek().kind == Tok::Punct && peek().text == p; }
  bool is_word(const char* w) const { return peek().kind == Tok::Ident && peek().text == w; }
  bool at_keyword() const {
    for (const char* k : {"ring", "poly", "matrix", "lambda", "point", "task"})
      if (is_word(k)) return true;
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string what = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", found " + what, t.line, t.col);
  }
  void expect(const char* p) {
    if (!is_punct(p)) fail(std::string("expected '") + p + "'");
    next();
  }
  void expect_word(const char* w) {
    if (!is_word(w)) fail(std::string("expected '") + w + "'");
    next();
  }
  std::string ident() {
    if (peek().kind != Tok::Ident) fail("expected a name");
    return next().text;
  }
  long integer() {
    bool neg = false;
    if (is_punct("-")) {
      next();
      neg = true;
    }
    if (peek().kind != Tok::Number) fail("expected an integer");
    const Token& t = next();
    if (t.text.size() > 12) throw ParseError("integer too large", t.line, t.col);
    long v = std::stol(t.text);
    return neg ? -v : v;
  }

  Stmt statement() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail("expected a statement keyword");
    const int line = t.line, col = t.col;
    if (t.text == "ring") return ring(line, col);
    if (t.text == "poly") {
      next();
      PolyStmt s{"", nullptr, line, col};
      // LL(1) with one token of lookahead past the name: "poly q = ..." vs "poly q + ...".
      if (peek().kind == Tok::Ident && t_[pos_ + 1].kind == Tok::Punct && t_[pos_ + 1].text == "=") {
        s.name = next().text;
        next();
      }
      s.expr = expr();
      return s;
    }
    if (t.text == "matrix") {
      next();
      MatrixStmt m{ident(), {}, line, col};
      expect("=");
      expect("[");
      do {
        expect("[");
        std::vector<ExprPtr> row;
        row.push_back(expr());
        while (is_punct(",")) {
          next();
          row.push_back(expr());
        }
        expect("]");
        m.rows.push_back(std::move(row));
      } while (is_punct(",") && (next(), true));
      expect("]");
      return m;
    }
    if (t.text == "lambda") {
      next();
      LambdaStmt l{{integer()}, line, col};
      while (is_punct(",")) {
        next();
        l.w.push_back(integer());
      }
      return l;
    }
    if (t.text == "point") {
      next();
      PointStmt p{{}, line, col};
      p.coords.push_back(expr());
      while (is_punct(",")) {
        next();
        p.coords.push_back(expr());
      }
      return p;
    }
    if (t.text == "task") {
      next();
      std::string name = ident();
      while (is_punct("-")) {
        next();
        name += "-" + ident();
      }
      return TaskStmt{name, line, col};
    }
    fail("expected one of ring, poly, matrix, lambda, point, task");
  }

  Stmt ring(int line, int col) {
    next();
    RingStmt r{{}, false, {}, {}, line, col};
    if (peek().kind != Tok::Ident || peek().text.empty() || peek().text[0] != 'P') fail("expected P(...) or Pn");
    const Token& p = next();
    if (p.text == "P") {
      expect("(");
      r.weights.push_back(integer());
      while (is_punct(",")) {
        next();
        r.weights.push_back(integer());
      }
      expect(")");
    } else {
      const std::string digits = p.text.substr(1);
      if (digits.empty() || digits.size() > 2 || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected P(...) or Pn", p.line, p.col);
      r.weights.assign(std::stol(digits) + 1, 1);
    }
    if (is_word("over")) {
      next();
      const Token& q = peek();
      expect_word("Q");
      if (is_punct("(")) {
        next();
        if (!is_word("i")) fail("only Q(i) is supported");
        next();
        expect(")");
        r.gaussian = true;
      }
      (void)q;
    }
    expect_word("vars");
    do {
      r.var_pos.emplace_back(peek().line, peek().col);
      r.vars.push_back(ident());
    } while (is_punct(",") && (next(), true));
    return r;
  }

  // expr := term {(+|-) term}
  ExprPtr expr() {
    ExprPtr lhs = term();
    while (is_punct("+") || is_punct("-")) {
      const Token& op = next();
      auto e = std::make_unique<Expr>();
      e->kind = op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub;
      e->line = op.line;
      e->col = op.col;
      e->a = std::move(lhs);
      e->b = term();
      lhs = std::move(e);
    }
    return lhs;
  }
  // term := unary {(*|/) unary}
  ExprPtr term() {
    ExprPtr lhs = unary();
    while (is_punct("*") || is_punct("/")) {
      const Token& op = next();
      auto e = std::make_unique<Expr>();
      e->kind = op.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div;
      e->line = op.line;
      e->col = op.col;
      e->a = std::move(lhs);
      e->b = unary();
      lhs = std::move(e);
    }
    return lhs;
  }
  // unary := (+|-) unary | power
  ExprPtr unary() {
    if (is_punct("-") || is_punct("+")) {
      const Token& op = next();
      ExprPtr inner = unary();
      if (op.text == "+") return inner;
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::Neg;
      e->line = op.line;
      e->col = op.col;
      e->a = std::move(inner);
      return e;
    }
    return power();
  }
  // power := atom [^ integer]
  ExprPtr power() {
    ExprPtr base = atom();
    if (is_punct("^")) {
      const Token& op = next();
      if (peek().kind != Tok::Number) fail("expected a nonnegative integer exponent");
      const Token& n = next();
      if (n.text.size() > 4) throw ParseError("exponent too large", n.line, n.col);
      auto e = std::make_unique<Expr>();
      e->kind = Expr::Kind::Pow;
      e->line = op.line;
      e->col = op.col;
      e->exponent = std::stol(n.text);
      e->a = std::move(base);
      return e;
    }
    return base;
  }
  ExprPtr atom() {
    const Token& t = peek();
    auto e = std::make_unique<Expr>();
    e->line = t.line;
    e->col = t.col;
    if (t.kind == Tok::Number) {
      e->kind = Expr::Kind::Num;
      e->num = Integer(t.text);
      next();
      return e;
    }
    if (t.kind == Tok::Ident) {
      e->kind = Expr::Kind::Var;
      e->name = t.text;
      next();
      return e;
    }
    if (is_punct("(")) {
      next();
      ExprPtr inner = expr();
      expect(")");
      return inner;
    }
    fail("expected a number, a variable or '('");
  }

  std::vector<Token> t_;
  size_t pos_ = 0;
};

// ---------------------------------------------------------------- evaluation

class Evaluator {
 public:
  Evaluator(VarsPtr vars, bool gaussian) : vars_(std::move(vars)), gaussian_(gaussian) {}

  MultiPoly eval(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::Num:
        return MultiPoly(vars_, FieldElement(Rational(e.num)));
      case Expr::Kind::Var: {
        for (int i = 0; i < static_cast<int>(vars_->size()); ++i)
          if ((*vars_)[i] == e.name) return MultiPoly::var(vars_, i);
        if (gaussian_ && e.name == "i") return MultiPoly(vars_, FieldElement::generator(gaussian_field()));
        throw ParseError("undeclared variable '" + e.name + "'", e.line, e.col);
      }
      case Expr::Kind::Neg:
        return -eval(*e.a);
      case Expr::Kind::Add:
        return eval(*e.a) + eval(*e.b);
      case Expr::Kind::Sub:
        return eval(*e.a) - eval(*e.b);
      case Expr::Kind::Mul:
        return eval(*e.a) * eval(*e.b);
      case Expr::Kind::Div: {
        MultiPoly d = eval(*e.b);
        if (!d.is_constant() || d.is_zero()) throw ParseError("division by a non-constant or zero", e.line, e.col);
        return eval(*e.a).scaled(d.constant_term().inverse());
      }
      case Expr::Kind::Pow:
        return eval(*e.a).pow(static_cast<int>(e.exponent));
    }
    throw std::logic_error("unreachable");
  }

  Rational rational(const Expr& e) const {
    MultiPoly p = eval(e);
    if (!p.is_constant()) throw ParseError("expected a constant", e.line, e.col);
    FieldElement c = p.constant_term();
    if (!c.is_rational()) throw ParseError("expected a rational constant", e.line, e.col);
    return c.rational();
  }

 private:
  VarsPtr vars_;
  bool gaussian_;
};

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

}  // namespace

std::string Ambient::to_string() const {
  std::vector<std::string> w;
  for (long x : weights) w.push_back(std::to_string(x));
  return "P(" + join(w, ",") + ")";
}

bool Ambient::operator==(const Ambient& o) const {
  return weights == o.weights && gaussian == o.gaussian && same_vars(vars, o.vars);
}

const MultiPoly* InputDocument::find_poly(const std::string& name) const {
  for (const auto& p : polys)
    if (p.name == name) return &p.poly;
  return nullptr;
}

const NamedMatrix* InputDocument::find_matrix(const std::string& name) const {
  for (const auto& m : matrices)
    if (m.name == name) return &m;
  return nullptr;
}

bool InputDocument::operator==(const InputDocument& o) const {
  if (!(ambient == o.ambient) || polys.size() != o.polys.size() || matrices.size() != o.matrices.size())
    return false;
  for (size_t i = 0; i < polys.size(); ++i)
    if (polys[i].name != o.polys[i].name || polys[i].poly != o.polys[i].poly) return false;
  for (size_t i = 0; i < matrices.size(); ++i)
    if (matrices[i].name != o.matrices[i].name || matrices[i].entries != o.matrices[i].entries) return false;
  return lambda == o.lambda && point == o.point && task == o.task;
}

InputDocument parse_document(std::string_view text) {
  Parser parser(lex(text));
  std::vector<Stmt> stmts = parser.document();

  InputDocument doc;
  std::optional<Evaluator> ev;
  bool have_ring = false;
  for (auto& st : stmts) {
    if (auto* r = std::get_if<RingStmt>(&st)) {
      if (have_ring) throw ParseError("second ring declaration", r->line, r->col);
      if (r->weights.size() != r->vars.size())
        throw ParseError("ring has " + std::to_string(r->weights.size()) + " weights but " +
                             std::to_string(r->vars.size()) + " variables",
                         r->line, r->col);
      if (r->vars.size() > static_cast<size_t>(kMaxVars))
        throw ParseError("at most " + std::to_string(kMaxVars) + " variables", r->line, r->col);
      for (long w : r->weights)
        if (w <= 0) throw ParseError("weights must be positive", r->line, r->col);
      for (size_t i = 0; i < r->vars.size(); ++i) {
        const auto [l, c] = r->var_pos[i];
        static const std::vector<std::string> reserved{"ring", "poly", "matrix", "lambda", "point", "task", "vars", "over"};
        if (std::find(reserved.begin(), reserved.end(), r->vars[i]) != reserved.end())
          throw ParseError("'" + r->vars[i] + "' is a keyword", l, c);
        if (r->gaussian && r->vars[i] == "i") throw ParseError("'i' is the imaginary unit over Q(i)", l, c);
        for (size_t j = 0; j < i; ++j)
          if (r->vars[j] == r->vars[i]) throw ParseError("variable '" + r->vars[i] + "' declared twice", l, c);
      }
      doc.ambient.weights = r->weights;
      doc.ambient.gaussian = r->gaussian;
      doc.ambient.vars = make_vars(r->vars);
      ev.emplace(doc.ambient.vars, r->gaussian);
      have_ring = true;
      continue;
    }
    auto need_ring = [&](int line, int col) {
      if (!have_ring) throw ParseError("no ring declared before this statement", line, col);
    };
    if (auto* p = std::get_if<PolyStmt>(&st)) {
      need_ring(p->line, p->col);
      if (!p->name.empty() && doc.find_poly(p->name))
        throw ParseError("poly '" + p->name + "' defined twice", p->line, p->col);
      MultiPoly poly = ev->eval(*p->expr);
      std::vector<int> w(doc.ambient.weights.begin(), doc.ambient.weights.end());
      poly.set_weights(w);
      doc.polys.push_back({p->name, std::move(poly)});
    } else if (auto* m = std::get_if<MatrixStmt>(&st)) {
      need_ring(m->line, m->col);
      NamedMatrix nm{m->name, {}};
      for (auto& row : m->rows) {
        QVec r;
        for (auto& e : row) r.push_back(ev->rational(*e));
        if (!nm.entries.empty() && r.size() != nm.entries.front().size())
          throw ParseError("matrix rows have different lengths", m->line, m->col);
        nm.entries.push_back(std::move(r));
      }
      if (doc.find_matrix(nm.name)) throw ParseError("matrix '" + nm.name + "' defined twice", m->line, m->col);
      doc.matrices.push_back(std::move(nm));
    } else if (auto* l = std::get_if<LambdaStmt>(&st)) {
      if (doc.lambda) throw ParseError("second lambda statement", l->line, l->col);
      doc.lambda = l->w;
    } else if (auto* pt = std::get_if<PointStmt>(&st)) {
      if (doc.point) throw ParseError("second point statement", pt->line, pt->col);
      Evaluator scalar(have_ring ? doc.ambient.vars : make_vars({}), have_ring && doc.ambient.gaussian);
      std::vector<FieldElement> coords;
      for (auto& e : pt->coords) {
        MultiPoly v = scalar.eval(*e);
        if (!v.is_constant()) throw ParseError("point coordinates must be constants", e->line, e->col);
        coords.push_back(v.is_zero() ? FieldElement(0) : v.constant_term());
      }
      doc.point = std::move(coords);
    } else if (auto* t = std::get_if<TaskStmt>(&st)) {
      if (doc.task) throw ParseError("second task statement", t->line, t->col);
      doc.task = t->name;
    }
  }
  return doc;
}

std::string print_document(const InputDocument& doc) {
  std::ostringstream os;
  if (doc.ambient.vars) {
    os << "ring " << doc.ambient.to_string();
    if (doc.ambient.gaussian) os << " over Q(i)";
    os << " vars " << join(*doc.ambient.vars, ",") << ";\n";
  }
  for (const auto& p : doc.polys) {
    os << "poly ";
    if (!p.name.empty()) os << p.name << " = ";
    os << p.poly.to_string() << ";\n";
  }
  for (const auto& m : doc.matrices) {
    os << "matrix " << m.name << " = [";
    for (size_t i = 0; i < m.entries.size(); ++i) {
      os << (i ? ", [" : "[");
      for (size_t j = 0; j < m.entries[i].size(); ++j) os << (j ? ", " : "") << m.entries[i][j].get_str();
      os << "]";
    }
    os << "];\n";
  }
  if (doc.lambda) {
    os << "lambda ";
    for (size_t i = 0; i < doc.lambda->size(); ++i) os << (i ? ", " : "") << (*doc.lambda)[i];
    os << ";\n";
  }
  if (doc.point) {
    os << "point ";
    for (size_t i = 0; i < doc.point->size(); ++i) os << (i ? ", " : "") << (*doc.point)[i].to_string(true);
    os << ";\n";
  }
  if (doc.task) os << "task " << *doc.task << ";\n";
  return os.str();
}

}  // namespace dpgit
