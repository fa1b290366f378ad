#include "fold2d/expr.hpp"

#include "fold2d/errors.hpp"

#include <cmath>

namespace fold2d {

struct Expr::Node {
    Kind kind;
    Number value;       // Constant
    std::string symbol; // Variable / Parameter
    std::vector<Expr> children;
};

bool kind_is_function(Kind k) {
    return k >= Kind::Sin && k <= Kind::Sqrt;
}

std::size_t kind_arity(Kind k) {
    switch (k) {
    case Kind::Constant:
    case Kind::Parameter:
    case Kind::Variable:
        return 0;
    case Kind::Neg:
    case Kind::Sin:
    case Kind::Cos:
    case Kind::Exp:
    case Kind::Ln:
    case Kind::Sqrt:
        return 1;
    default:
        return 2;
    }
}

std::string_view kind_name(Kind k) {
    switch (k) {
    case Kind::Constant: return "constant";
    case Kind::Parameter: return "parameter";
    case Kind::Variable: return "variable";
    case Kind::Neg: return "-";
    case Kind::Add: return "+";
    case Kind::Sub: return "-";
    case Kind::Mul: return "*";
    case Kind::Div: return "/";
    case Kind::Pow: return "^";
    case Kind::Sin: return "sin";
    case Kind::Cos: return "cos";
    case Kind::Exp: return "exp";
    case Kind::Ln: return "ln";
    case Kind::Sqrt: return "sqrt";
    }
    return "?";
}

Expr::Expr() : Expr(constant(Number::integer(0))) {}

Expr Expr::constant(Number n) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Constant;
    node->value = std::move(n);
    return Expr(std::move(node));
}

Expr Expr::rational(long long num, long long den) {
    if (den == 0)
        throw InvalidArgument("rational constant with zero denominator");
    return constant(Number(Rational(num, den)));
}

Expr Expr::number(double d) {
    if (!std::isfinite(d))
        throw InvalidArgument("non-finite numeric constant");
    return constant(Number(d));
}

Expr Expr::variable(std::string name) {
    if (name.empty())
        throw InvalidArgument("empty variable name");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Variable;
    node->symbol = std::move(name);
    return Expr(std::move(node));
}

Expr Expr::parameter(std::string name) {
    if (name.empty())
        throw InvalidArgument("empty parameter name");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Parameter;
    node->symbol = std::move(name);
    return Expr(std::move(node));
}

Expr Expr::make(Kind k, std::vector<Expr> children) {
    if (kind_arity(k) != children.size() || kind_arity(k) == 0)
        throw InvalidArgument("wrong number of operands for " + std::string(kind_name(k)));
    auto node = std::make_shared<Node>();
    node->kind = k;
    node->children = std::move(children);
    return Expr(std::move(node));
}

Kind Expr::kind() const { return node_->kind; }

const Number& Expr::value() const {
    if (kind() != Kind::Constant)
        throw InvalidArgument("value() on a non-constant node");
    return node_->value;
}

const std::string& Expr::symbol() const {
    if (!is_symbol())
        throw InvalidArgument("symbol() on a non-symbol node");
    return node_->symbol;
}

std::size_t Expr::arity() const { return node_->children.size(); }

const Expr& Expr::child(std::size_t i) const { return node_->children.at(i); }

bool Expr::is_zero() const { return is_constant() && value().is_zero(); }
bool Expr::is_one() const { return is_constant() && value().is_one(); }

void Expr::collect_symbols(std::set<std::string>& variables, std::set<std::string>& parameters) const {
    switch (kind()) {
    case Kind::Variable:
        variables.insert(node_->symbol);
        return;
    case Kind::Parameter:
        parameters.insert(node_->symbol);
        return;
    default:
        for (const Expr& c : node_->children)
            c.collect_symbols(variables, parameters);
    }
}

std::set<std::string> Expr::free_variables() const {
    std::set<std::string> v, p;
    collect_symbols(v, p);
    return v;
}

std::set<std::string> Expr::free_parameters() const {
    std::set<std::string> v, p;
    collect_symbols(v, p);
    return p;
}

std::set<std::string> Expr::free_symbols() const {
    std::set<std::string> v, p;
    collect_symbols(v, p);
    v.insert(p.begin(), p.end());
    return v;
}

bool Expr::contains_symbol(std::string_view name) const {
    if (is_symbol())
        return node_->symbol == name;
    for (const Expr& c : node_->children)
        if (c.contains_symbol(name))
            return true;
    return false;
}

Expr Expr::substitute(const std::map<std::string, Expr>& replacements) const {
    if (is_symbol()) {
        auto it = replacements.find(node_->symbol);
        return it == replacements.end() ? *this : it->second;
    }
    if (node_->children.empty())
        return *this;
    std::vector<Expr> kids;
    kids.reserve(arity());
    bool changed = false;
    for (const Expr& c : node_->children) {
        kids.push_back(c.substitute(replacements));
        changed = changed || kids.back().node_ != c.node_;
    }
    if (!changed)
        return *this;
    return make(kind(), std::move(kids));
}

int Expr::compare(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_)
        return 0;
    if (a.kind() != b.kind())
        return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
    case Kind::Constant:
        return Number::compare(a.value(), b.value());
    case Kind::Variable:
    case Kind::Parameter:
        return a.node_->symbol.compare(b.node_->symbol);
    default: {
        // Same kind implies same arity.
        for (std::size_t i = 0; i < a.arity(); ++i) {
            int c = compare(a.child(i), b.child(i));
            if (c != 0)
                return c;
        }
        return 0;
    }
    }
}

namespace {

void print(const Expr& e, std::string& out);

// True when the printed form of e can stand on its own as a parse `primary`
// (no operator that could rebind to the surrounding context).
bool prints_as_primary(const Expr& e) {
    switch (e.kind()) {
    case Kind::Variable:
    case Kind::Parameter:
    case Kind::Sin:
    case Kind::Cos:
    case Kind::Exp:
    case Kind::Ln:
    case Kind::Sqrt:
        return true;
    case Kind::Constant: {
        std::string s = e.value().str();
        return s.find('-') == std::string::npos && s.find('/') == std::string::npos;
    }
    default:
        return false;
    }
}

void print_wrapped(const Expr& e, std::string& out, bool parens) {
    if (parens) {
        out += '(';
        print(e, out);
        out += ')';
    } else {
        print(e, out);
    }
}

void print(const Expr& e, std::string& out) {
    switch (e.kind()) {
    case Kind::Constant:
        out += e.value().str();
        return;
    case Kind::Variable:
    case Kind::Parameter:
        out += e.symbol();
        return;
    case Kind::Sin:
    case Kind::Cos:
    case Kind::Exp:
    case Kind::Ln:
    case Kind::Sqrt:
        out += kind_name(e.kind());
        out += '(';
        print(e.child(0), out);
        out += ')';
        return;
    case Kind::Neg: {
        // Parenthesize constants so "-(2)" stays distinct from the literal -2.
        const Expr& c = e.child(0);
        bool parens = !(prints_as_primary(c) && !c.is_constant()) && c.kind() != Kind::Pow;
        out += '-';
        print_wrapped(c, out, parens);
        return;
    }
    case Kind::Add:
    case Kind::Sub: {
        print(e.child(0), out);
        out += e.kind() == Kind::Add ? " + " : " - ";
        Kind rk = e.child(1).kind();
        print_wrapped(e.child(1), out, rk == Kind::Add || rk == Kind::Sub);
        return;
    }
    case Kind::Mul:
    case Kind::Div: {
        Kind lk = e.child(0).kind();
        print_wrapped(e.child(0), out, lk == Kind::Add || lk == Kind::Sub);
        out += kind_name(e.kind());
        Kind rk = e.child(1).kind();
        print_wrapped(e.child(1), out,
                      rk == Kind::Add || rk == Kind::Sub || rk == Kind::Mul || rk == Kind::Div);
        return;
    }
    case Kind::Pow: {
        print_wrapped(e.child(0), out, !prints_as_primary(e.child(0)));
        out += '^';
        Kind rk = e.child(1).kind();
        bool parens = rk == Kind::Add || rk == Kind::Sub || rk == Kind::Mul || rk == Kind::Div ||
                      (rk == Kind::Constant && e.child(1).value().str().find('/') != std::string::npos);
        print_wrapped(e.child(1), out, parens);
        return;
    }
    }
}

} // namespace

std::string Expr::str() const {
    std::string out;
    print(*this, out);
    return out;
}

Expr operator+(Expr a, Expr b) { return Expr::make(Kind::Add, {std::move(a), std::move(b)}); }
Expr operator-(Expr a, Expr b) { return Expr::make(Kind::Sub, {std::move(a), std::move(b)}); }
Expr operator*(Expr a, Expr b) { return Expr::make(Kind::Mul, {std::move(a), std::move(b)}); }
Expr operator/(Expr a, Expr b) { return Expr::make(Kind::Div, {std::move(a), std::move(b)}); }
Expr operator-(Expr a) { return Expr::make(Kind::Neg, {std::move(a)}); }
Expr pow(Expr base, Expr exponent) { return Expr::make(Kind::Pow, {std::move(base), std::move(exponent)}); }
Expr sin(Expr a) { return Expr::make(Kind::Sin, {std::move(a)}); }
Expr cos(Expr a) { return Expr::make(Kind::Cos, {std::move(a)}); }
Expr exp(Expr a) { return Expr::make(Kind::Exp, {std::move(a)}); }
Expr ln(Expr a) { return Expr::make(Kind::Ln, {std::move(a)}); }
Expr sqrt(Expr a) { return Expr::make(Kind::Sqrt, {std::move(a)}); }

SymbolSet SymbolSet::system(std::set<std::string> params) {
    return SymbolSet{{"t", "x", "y"}, std::move(params)};
}

SymbolSet SymbolSet::folded(std::set<std::string> params) {
    return SymbolSet{{"t", "u", "w"}, std::move(params)};
}

SymbolSet SymbolSet::inverse(std::set<std::string> params) {
    return SymbolSet{{"t", "u", "v"}, std::move(params)};
}

void require_variables(const Expr& e, const std::set<std::string>& allowed, std::string_view context) {
    for (const std::string& v : e.free_variables())
        if (!allowed.count(v))
            throw InvalidArgument("undeclared variable '" + v + "' in " + std::string(context));
}

} // namespace fold2d
