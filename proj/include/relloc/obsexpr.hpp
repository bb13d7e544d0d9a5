#ifndef RELLOC_OBSEXPR_HPP
#define RELLOC_OBSEXPR_HPP

// Observable expressions: a small differentiable expression language over the
// phase-space coordinates (x, p, s) and the parameters (m, S, c), with exact
// symbolic differentiation and the Poisson bracket.
//
// Expressions are immutable DAGs. Construction goes through simplifying
// constructors (constant folding, 0/1 identities, flattening of sums and
// products); no canonical form is attempted.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relloc {

enum class Symbol : std::uint8_t { X1, X2, X3, P1, P2, P3, S1, S2, S3, Mass, Spin, Light };

inline constexpr std::size_t kSymbolCount = 12;

std::string_view symbol_name(Symbol s);
std::optional<Symbol> symbol_from_name(std::string_view name);

/// x_a, p_a and s_a are coordinates; m, S and c are parameters.
constexpr bool is_coordinate(Symbol s) { return static_cast<int>(s) < 9; }

constexpr Symbol position_symbol(int a) { return static_cast<Symbol>(a); }
constexpr Symbol momentum_symbol(int a) { return static_cast<Symbol>(3 + a); }
constexpr Symbol spin_symbol(int a) { return static_cast<Symbol>(6 + a); }

/// Numeric values for every symbol.
struct Valuation {
  std::array<double, kSymbolCount> values{};

  double operator[](Symbol s) const { return values[static_cast<std::size_t>(s)]; }
  double& operator[](Symbol s) { return values[static_cast<std::size_t>(s)]; }
};

/// Raised when evaluation leaves the domain (sqrt of a negative number,
/// division by zero).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  /// Byte offset into the source text.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class Expression {
 public:
  enum class Kind : std::uint8_t { Constant, Variable, Sum, Product, Quotient, Power, Sqrt };

  struct Node;

  /// The constant zero.
  Expression();
  /// A constant.
  Expression(double value);  // NOLINT(google-explicit-constructor)
  /// A symbol.
  Expression(Symbol s);  // NOLINT(google-explicit-constructor)

  Kind kind() const;
  double constant_value() const;  // Constant only
  Symbol symbol() const;          // Variable only
  int exponent() const;           // Power only
  const std::vector<Expression>& operands() const;

  bool is_constant() const { return kind() == Kind::Constant; }
  bool is_constant(double v) const { return is_constant() && constant_value() == v; }

  /// Bit i set iff the expression depends on symbol i.
  std::uint16_t dependencies() const;
  bool depends_on(Symbol s) const { return (dependencies() >> static_cast<int>(s)) & 1u; }

  /// Number of distinct nodes in the DAG.
  std::size_t node_count() const;

  /// Identity of the underlying node (for memoisation).
  const Node* id() const { return node_.get(); }

  std::string to_string() const;

  friend Expression operator+(const Expression& a, const Expression& b);
  friend Expression operator-(const Expression& a, const Expression& b);
  friend Expression operator*(const Expression& a, const Expression& b);
  friend Expression operator/(const Expression& a, const Expression& b);
  friend Expression operator-(const Expression& a);

  static Expression sum(std::vector<Expression> terms);
  static Expression product(std::vector<Expression> factors);

 private:
  explicit Expression(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  friend Expression pow(const Expression& base, int exponent);
  friend Expression sqrt(const Expression& arg);
  friend Expression make_quotient(const Expression& a, const Expression& b);

  std::shared_ptr<const Node> node_;
};

Expression pow(const Expression& base, int exponent);
Expression sqrt(const Expression& arg);

/// Named expressions the parser substitutes for identifiers (e.g. "P0").
using AliasMap = std::map<std::string, Expression, std::less<>>;

/// Parses infix text. Grammar (whitespace-insensitive):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' unary)?          (right-associative)
///   primary := number | name | 'sqrt' '(' expr ')' | '(' expr ')'
/// The exponent must reduce to an integer constant. Names are the symbols
/// x1 x2 x3 p1 p2 p3 s1 s2 s3 m S c, plus any aliases.
Expression parse(std::string_view text, const AliasMap& aliases = {});

/// Exact derivative with respect to one symbol.
Expression differentiate(const Expression& f, Symbol s);

/// Recursive evaluation; throws DomainError.
double evaluate(const Expression& f, const Valuation& v);

/// {f, g} = sum_a (df/dx_a dg/dp_a - df/dp_a dg/dx_a) + s . (grad_s f x grad_s g),
/// so that {x_a, p_b} = delta_ab and {s_a, s_b} = epsilon_abc s_c.
Expression poisson_bracket(const Expression& f, const Expression& g);

/// Flattened DAG for repeated evaluation of a large expression. Evaluation is
/// const and allocates its own scratch space, so one instance may be shared
/// across threads.
class CompiledExpression {
 public:
  explicit CompiledExpression(const Expression& f);
  double operator()(const Valuation& v) const;
  std::size_t size() const { return ops_.size(); }

 private:
  struct Op {
    Expression::Kind kind;
    double value;  // constant
    int aux;       // symbol index or exponent
    std::uint32_t first;
    std::uint32_t count;
  };
  std::vector<Op> ops_;
  std::vector<std::uint32_t> args_;
};

}  // namespace relloc

#endif  // RELLOC_OBSEXPR_HPP
