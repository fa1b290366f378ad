#ifndef FOLD2D_EXPR_HPP
#define FOLD2D_EXPR_HPP

#include "fold2d/number.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fold2d {

// Node kinds. The enum order doubles as the primary sort key of the
// canonical form, so parameters sort before variables and products render
// as "2*c*x" rather than "2*x*c".
enum class Kind : std::uint8_t {
    Constant,
    Parameter,
    Variable,
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Sin,
    Cos,
    Exp,
    Ln,
    Sqrt,
};

bool kind_is_function(Kind k);
std::size_t kind_arity(Kind k);
std::string_view kind_name(Kind k); // function/operator name for messages

// Immutable expression tree. Copies are cheap (shared nodes); a value is
// never mutated after construction, so expressions can be shared freely
// across threads.
class Expr {
  public:
    // Default-constructed expression is the constant 0.
    Expr();

    static Expr constant(Number n);
    static Expr integer(long long n) { return constant(Number::integer(n)); }
    static Expr rational(long long num, long long den);
    static Expr number(double d); // rejects non-finite values
    static Expr variable(std::string name);
    static Expr parameter(std::string name);
    static Expr make(Kind k, std::vector<Expr> children);

    Kind kind() const;
    const Number& value() const;       // Constant only
    const std::string& symbol() const; // Variable/Parameter only
    std::size_t arity() const;
    const Expr& child(std::size_t i) const;

    bool is_constant() const { return kind() == Kind::Constant; }
    bool is_symbol() const { return kind() == Kind::Parameter || kind() == Kind::Variable; }
    bool is_zero() const;
    bool is_one() const;

    void collect_symbols(std::set<std::string>& variables, std::set<std::string>& parameters) const;
    std::set<std::string> free_variables() const;
    std::set<std::string> free_parameters() const;
    std::set<std::string> free_symbols() const; // variables and parameters together
    bool contains_symbol(std::string_view name) const;

    // Simultaneous capture-free replacement of variables/parameters by name.
    Expr substitute(const std::map<std::string, Expr>& replacements) const;

    // Structural equality and a total order (kind, payload, children).
    friend bool operator==(const Expr& a, const Expr& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Expr& a, const Expr& b) { return compare(a, b) != 0; }
    static int compare(const Expr& a, const Expr& b);

    // Re-parseable text form; parse_expr(str()) reconstructs the same tree.
    std::string str() const;

  private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Operator sugar for building trees. No simplification happens here; these
// construct plain nodes.
Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);
Expr pow(Expr base, Expr exponent);
Expr sin(Expr a);
Expr cos(Expr a);
Expr exp(Expr a);
Expr ln(Expr a);
Expr sqrt(Expr a);

struct ExprLess {
    bool operator()(const Expr& a, const Expr& b) const { return Expr::compare(a, b) < 0; }
};

// Declared symbols for one parsing/validation context.
struct SymbolSet {
    std::set<std::string> variables;
    std::set<std::string> parameters;

    // (t, x, y): right-hand sides of a planar system.
    static SymbolSet system(std::set<std::string> params = {});
    // (t, u, w): folded forms and semi-inversions.
    static SymbolSet folded(std::set<std::string> params = {});
    // (t, u, v): inputs of the inverse construction.
    static SymbolSet inverse(std::set<std::string> params = {});

    bool is_variable(std::string_view name) const { return variables.count(std::string(name)) > 0; }
    bool is_parameter(std::string_view name) const { return parameters.count(std::string(name)) > 0; }
};

// Throws InvalidArgument if e uses a variable outside `allowed`. Parameters
// are not restricted; they are bound later.
void require_variables(const Expr& e, const std::set<std::string>& allowed,
                       std::string_view context);

} // namespace fold2d

#endif
