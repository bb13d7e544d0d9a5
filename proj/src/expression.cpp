#include <charconv>
#include <cmath>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "relloc/minkowski.hpp"
#include "relloc/obsexpr.hpp"

namespace relloc {

struct Expression::Node {
  Kind kind = Kind::Constant;
  double value = 0.0;
  Symbol sym = Symbol::X1;
  int exponent = 0;
  std::vector<Expression> ops;
  std::uint16_t deps = 0;
};

namespace {

constexpr std::array<std::string_view, kSymbolCount> kSymbolNames{"x1", "x2", "x3", "p1", "p2", "p3",
                                                                  "s1", "s2", "s3", "m",  "S",  "c"};

std::shared_ptr<const Expression::Node> make_constant_node(double v) {
  auto n = std::make_shared<Expression::Node>();
  n->kind = Expression::Kind::Constant;
  n->value = v;
  return n;
}

const std::shared_ptr<const Expression::Node>& zero_node() {
  static const auto z = make_constant_node(0.0);
  return z;
}

const std::shared_ptr<const Expression::Node>& one_node() {
  static const auto o = make_constant_node(1.0);
  return o;
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

}  // namespace

std::string_view symbol_name(Symbol s) { return kSymbolNames[static_cast<std::size_t>(s)]; }

std::optional<Symbol> symbol_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kSymbolNames.size(); ++i)
    if (kSymbolNames[i] == name) return static_cast<Symbol>(i);
  return std::nullopt;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message), position_(position) {}

// ---------------------------------------------------------------------------
// Construction

Expression::Expression() : node_(zero_node()) {}

Expression::Expression(double value) {
  if (value == 0.0)
    node_ = zero_node();
  else if (value == 1.0)
    node_ = one_node();
  else
    node_ = make_constant_node(value);
}

Expression::Expression(Symbol s) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->sym = s;
  n->deps = static_cast<std::uint16_t>(1u << static_cast<int>(s));
  node_ = std::move(n);
}

Expression::Kind Expression::kind() const { return node_->kind; }
double Expression::constant_value() const { return node_->value; }
Symbol Expression::symbol() const { return node_->sym; }
int Expression::exponent() const { return node_->exponent; }
const std::vector<Expression>& Expression::operands() const { return node_->ops; }
std::uint16_t Expression::dependencies() const { return node_->deps; }

std::size_t Expression::node_count() const {
  std::unordered_set<const Node*> seen;
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    for (const auto& op : n->ops) stack.push_back(op.id());
  }
  return seen.size();
}

Expression Expression::sum(std::vector<Expression> terms) {
  std::vector<Expression> flat;
  flat.reserve(terms.size());
  double constant = 0.0;
  for (auto& t : terms) {
    if (t.kind() == Kind::Sum) {
      for (const auto& inner : t.operands()) {
        if (inner.is_constant())
          constant += inner.constant_value();
        else
          flat.push_back(inner);
      }
    } else if (t.is_constant()) {
      constant += t.constant_value();
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (constant != 0.0) flat.emplace_back(constant);
  if (flat.empty()) return Expression(0.0);
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  for (const auto& t : flat) n->deps |= t.dependencies();
  n->ops = std::move(flat);
  return Expression(std::shared_ptr<const Node>(std::move(n)));
}

Expression Expression::product(std::vector<Expression> factors) {
  std::vector<Expression> flat;
  flat.reserve(factors.size() + 1);
  double constant = 1.0;
  for (auto& f : factors) {
    if (f.kind() == Kind::Product) {
      for (const auto& inner : f.operands()) {
        if (inner.is_constant())
          constant *= inner.constant_value();
        else
          flat.push_back(inner);
      }
    } else if (f.is_constant()) {
      constant *= f.constant_value();
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (constant == 0.0) return Expression(0.0);
  if (flat.empty()) return Expression(constant);
  if (constant == 1.0 && flat.size() == 1) return flat.front();
  if (constant != 1.0) flat.insert(flat.begin(), Expression(constant));
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  for (const auto& t : flat) n->deps |= t.dependencies();
  n->ops = std::move(flat);
  return Expression(std::shared_ptr<const Node>(std::move(n)));
}

Expression make_quotient(const Expression& a, const Expression& b) {
  if (b.is_constant(1.0)) return a;
  if (a.is_constant(0.0)) return Expression(0.0);
  if (a.is_constant() && b.is_constant() && b.constant_value() != 0.0)
    return Expression(a.constant_value() / b.constant_value());
  auto n = std::make_shared<Expression::Node>();
  n->kind = Expression::Kind::Quotient;
  n->deps = static_cast<std::uint16_t>(a.dependencies() | b.dependencies());
  n->ops = {a, b};
  return Expression(std::shared_ptr<const Expression::Node>(std::move(n)));
}

Expression operator+(const Expression& a, const Expression& b) { return Expression::sum({a, b}); }
Expression operator-(const Expression& a, const Expression& b) { return Expression::sum({a, -b}); }
Expression operator*(const Expression& a, const Expression& b) { return Expression::product({a, b}); }
Expression operator/(const Expression& a, const Expression& b) { return make_quotient(a, b); }
Expression operator-(const Expression& a) { return Expression::product({Expression(-1.0), a}); }

Expression pow(const Expression& base, int exponent) {
  if (exponent == 0) return Expression(1.0);
  if (exponent == 1) return base;
  if (base.is_constant()) {
    const double b = base.constant_value();
    if (b != 0.0 || exponent > 0) return Expression(std::pow(b, exponent));
  }
  if (base.kind() == Expression::Kind::Power) return pow(base.operands().front(), base.exponent() * exponent);
  auto n = std::make_shared<Expression::Node>();
  n->kind = Expression::Kind::Power;
  n->exponent = exponent;
  n->deps = base.dependencies();
  n->ops = {base};
  return Expression(std::shared_ptr<const Expression::Node>(std::move(n)));
}

Expression sqrt(const Expression& arg) {
  if (arg.is_constant() && arg.constant_value() >= 0.0) return Expression(std::sqrt(arg.constant_value()));
  auto n = std::make_shared<Expression::Node>();
  n->kind = Expression::Kind::Sqrt;
  n->deps = arg.dependencies();
  n->ops = {arg};
  return Expression(std::shared_ptr<const Expression::Node>(std::move(n)));
}

// ---------------------------------------------------------------------------
// Printing

namespace {

enum Precedence { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

int precedence(const Expression& e) {
  switch (e.kind()) {
    case Expression::Kind::Constant:
      return e.constant_value() < 0.0 ? kUnary : kAtom;
    case Expression::Kind::Variable:
    case Expression::Kind::Sqrt:
      return kAtom;
    case Expression::Kind::Sum:
      return kSum;
    case Expression::Kind::Product:
      return e.operands().front().is_constant(-1.0) ? kUnary : kProduct;
    case Expression::Kind::Quotient:
      return kProduct;
    case Expression::Kind::Power:
      return kPower;
  }
  return kAtom;
}

std::string wrap(const Expression& e, bool parens) {
  return parens ? "(" + e.to_string() + ")" : e.to_string();
}

/// True if the term prints with a leading minus that can be split off.
bool is_negative_term(const Expression& e) {
  if (e.is_constant()) return e.constant_value() < 0.0;
  if (e.kind() == Expression::Kind::Product) {
    const auto& f = e.operands().front();
    return f.is_constant() && f.constant_value() < 0.0;
  }
  return false;
}

}  // namespace

std::string Expression::to_string() const {
  switch (kind()) {
    case Kind::Constant:
      return format_number(constant_value());
    case Kind::Variable:
      return std::string(symbol_name(symbol()));
    case Kind::Sum: {
      std::string out;
      bool first = true;
      for (const auto& t : operands()) {
        if (first) {
          out = t.to_string();
          first = false;
        } else if (is_negative_term(t)) {
          out += " - " + wrap(-t, precedence(-t) <= kSum);
        } else {
          out += " + " + t.to_string();
        }
      }
      return out;
    }
    case Kind::Product: {
      const auto& ops = operands();
      std::size_t start = 0;
      std::string out;
      if (ops.front().is_constant(-1.0)) {
        out = "-";
        start = 1;
      }
      for (std::size_t i = start; i < ops.size(); ++i) {
        if (i > start) out += "*";
        const bool leading_const = (i == 0 && ops[i].is_constant());
        out += wrap(ops[i], !leading_const && precedence(ops[i]) <= kProduct);
      }
      return out;
    }
    case Kind::Quotient: {
      const auto& a = operands()[0];
      const auto& b = operands()[1];
      return wrap(a, precedence(a) < kProduct) + "/" + wrap(b, precedence(b) <= kProduct);
    }
    case Kind::Power: {
      const auto& b = operands()[0];
      const std::string e = exponent() < 0 ? "(" + std::to_string(exponent()) + ")" : std::to_string(exponent());
      return wrap(b, precedence(b) < kAtom) + "^" + e;
    }
    case Kind::Sqrt:
      return "sqrt(" + operands()[0].to_string() + ")";
  }
  return {};
}

// ---------------------------------------------------------------------------
// Differentiation

namespace {

class Differentiator {
 public:
  explicit Differentiator(Symbol s) : sym_(s) {}

  Expression operator()(const Expression& f) {
    if (!f.depends_on(sym_)) return Expression(0.0);
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    Expression d = compute(f);
    memo_.emplace(f.id(), d);
    return d;
  }

 private:
  Expression compute(const Expression& f) {
    using K = Expression::Kind;
    switch (f.kind()) {
      case K::Constant:
        return Expression(0.0);
      case K::Variable:
        return Expression(f.symbol() == sym_ ? 1.0 : 0.0);
      case K::Sum: {
        std::vector<Expression> terms;
        for (const auto& t : f.operands())
          if (t.depends_on(sym_)) terms.push_back((*this)(t));
        return Expression::sum(std::move(terms));
      }
      case K::Product: {
        const auto& ops = f.operands();
        std::vector<Expression> terms;
        for (std::size_t i = 0; i < ops.size(); ++i) {
          if (!ops[i].depends_on(sym_)) continue;
          std::vector<Expression> factors;
          factors.reserve(ops.size());
          for (std::size_t j = 0; j < ops.size(); ++j) factors.push_back(j == i ? (*this)(ops[j]) : ops[j]);
          terms.push_back(Expression::product(std::move(factors)));
        }
        return Expression::sum(std::move(terms));
      }
      case K::Quotient: {
        const auto& a = f.operands()[0];
        const auto& b = f.operands()[1];
        // (a/b)' = a'/b - a b' / b^2
        Expression out(0.0);
        if (a.depends_on(sym_)) out = (*this)(a) / b;
        if (b.depends_on(sym_)) out = out - (a * (*this)(b)) / pow(b, 2);
        return out;
      }
      case K::Power: {
        const auto& b = f.operands()[0];
        const int n = f.exponent();
        return Expression::product({Expression(static_cast<double>(n)), pow(b, n - 1), (*this)(b)});
      }
      case K::Sqrt: {
        // (sqrt a)' = a' / (2 sqrt a), reusing this node.
        return (*this)(f.operands()[0]) / (Expression(2.0) * f);
      }
    }
    return Expression(0.0);
  }

  Symbol sym_;
  std::unordered_map<const Expression::Node*, Expression> memo_;
};

}  // namespace

Expression differentiate(const Expression& f, Symbol s) { return Differentiator(s)(f); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

double checked_sqrt(double a) {
  if (a < 0.0 || std::isnan(a)) {
    std::ostringstream os;
    os << "sqrt of negative value " << a;
    throw DomainError(os.str());
  }
  return std::sqrt(a);
}

double checked_divide(double a, double b) {
  if (b == 0.0) throw DomainError("division by zero");
  return a / b;
}

double checked_pow(double b, int n) {
  if (n < 0 && b == 0.0) throw DomainError("negative power of zero");
  return std::pow(b, n);
}

}  // namespace

double evaluate(const Expression& f, const Valuation& v) {
  using K = Expression::Kind;
  switch (f.kind()) {
    case K::Constant:
      return f.constant_value();
    case K::Variable:
      return v[f.symbol()];
    case K::Sum: {
      double s = 0.0;
      for (const auto& t : f.operands()) s += evaluate(t, v);
      return s;
    }
    case K::Product: {
      double p = 1.0;
      for (const auto& t : f.operands()) p *= evaluate(t, v);
      return p;
    }
    case K::Quotient:
      return checked_divide(evaluate(f.operands()[0], v), evaluate(f.operands()[1], v));
    case K::Power:
      return checked_pow(evaluate(f.operands()[0], v), f.exponent());
    case K::Sqrt:
      return checked_sqrt(evaluate(f.operands()[0], v));
  }
  return 0.0;
}

CompiledExpression::CompiledExpression(const Expression& f) {
  std::unordered_map<const Expression::Node*, std::uint32_t> index;
  // Iterative post-order traversal.
  std::vector<std::pair<Expression, bool>> stack{{f, false}};
  while (!stack.empty()) {
    auto [e, expanded] = stack.back();
    stack.pop_back();
    if (index.count(e.id())) continue;
    if (!expanded) {
      stack.emplace_back(e, true);
      for (const auto& op : e.operands())
        if (!index.count(op.id())) stack.emplace_back(op, false);
      continue;
    }
    Op op{e.kind(), 0.0, 0, static_cast<std::uint32_t>(args_.size()),
          static_cast<std::uint32_t>(e.operands().size())};
    if (e.kind() == Expression::Kind::Constant) op.value = e.constant_value();
    if (e.kind() == Expression::Kind::Variable) op.aux = static_cast<int>(e.symbol());
    if (e.kind() == Expression::Kind::Power) op.aux = e.exponent();
    for (const auto& child : e.operands()) args_.push_back(index.at(child.id()));
    index.emplace(e.id(), static_cast<std::uint32_t>(ops_.size()));
    ops_.push_back(op);
  }
}

double CompiledExpression::operator()(const Valuation& v) const {
  using K = Expression::Kind;
  std::vector<double> r(ops_.size());
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const Op& op = ops_[i];
    const std::uint32_t* a = args_.data() + op.first;
    switch (op.kind) {
      case K::Constant:
        r[i] = op.value;
        break;
      case K::Variable:
        r[i] = v.values[static_cast<std::size_t>(op.aux)];
        break;
      case K::Sum: {
        double s = 0.0;
        for (std::uint32_t k = 0; k < op.count; ++k) s += r[a[k]];
        r[i] = s;
        break;
      }
      case K::Product: {
        double p = 1.0;
        for (std::uint32_t k = 0; k < op.count; ++k) p *= r[a[k]];
        r[i] = p;
        break;
      }
      case K::Quotient:
        r[i] = checked_divide(r[a[0]], r[a[1]]);
        break;
      case K::Power:
        r[i] = checked_pow(r[a[0]], op.aux);
        break;
      case K::Sqrt:
        r[i] = checked_sqrt(r[a[0]]);
        break;
    }
  }
  return r.back();
}

// ---------------------------------------------------------------------------
// Poisson bracket

Expression poisson_bracket(const Expression& f, const Expression& g) {
  std::vector<Expression> terms;
  std::array<Expression, 3> dfx, dfp, dfs, dgx, dgp, dgs;
  for (int a = 0; a < 3; ++a) {
    dfx[a] = differentiate(f, position_symbol(a));
    dfp[a] = differentiate(f, momentum_symbol(a));
    dfs[a] = differentiate(f, spin_symbol(a));
    dgx[a] = differentiate(g, position_symbol(a));
    dgp[a] = differentiate(g, momentum_symbol(a));
    dgs[a] = differentiate(g, spin_symbol(a));
  }
  for (int a = 0; a < 3; ++a) {
    terms.push_back(dfx[a] * dgp[a]);
    terms.push_back(-(dfp[a] * dgx[a]));
  }
  // s . (grad_s f x grad_s g) = eps_{cab} s_c d_a f d_b g
  for (int c = 0; c < 3; ++c)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const double eps = levi_civita3(c, a, b);
        if (eps == 0.0 || dfs[a].is_constant(0.0) || dgs[b].is_constant(0.0)) continue;
        terms.push_back(Expression::product({Expression(eps), Expression(spin_symbol(c)), dfs[a], dgs[b]}));
      }
  return Expression::sum(std::move(terms));
}

}  // namespace relloc
