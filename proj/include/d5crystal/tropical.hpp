#pragma once

// Subtraction-free rational expressions and their ultra-discretization
//
//     x * y -> x + y,   x / y -> x - y,   x + y -> max(x, y),   const -> 0.
//
// Grammar:
//   expr   := term ('+' term)*
//   term   := factor (('*' | '/') factor)*
//   factor := base ('^' int)?
//   base   := ident | posint | '(' expr ')'

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace d5 {

// ---------------------------------------------------------------- Expr

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { var, constant, sum, product, quotient, power };

    Kind kind;
    std::string name;         // var
    std::int64_t value = 0;   // constant (> 0) or exponent of power
    ExprPtr lhs, rhs;         // binary nodes; power uses lhs only

    static ExprPtr var(std::string n) {
        return std::make_shared<Expr>(Expr{Kind::var, std::move(n), 0, nullptr, nullptr});
    }
    static ExprPtr constant(std::int64_t v) {
        if (v <= 0) throw std::invalid_argument("constants must be positive");
        return std::make_shared<Expr>(Expr{Kind::constant, {}, v, nullptr, nullptr});
    }
    static ExprPtr binary(Kind k, ExprPtr a, ExprPtr b) {
        return std::make_shared<Expr>(Expr{k, {}, 0, std::move(a), std::move(b)});
    }
    static ExprPtr power(ExprPtr base, std::int64_t n) {
        return std::make_shared<Expr>(Expr{Kind::power, {}, n, std::move(base), nullptr});
    }
};

inline bool structurally_equal(Expr const& a, Expr const& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::var: return a.name == b.name;
        case Expr::Kind::constant: return a.value == b.value;
        case Expr::Kind::power: return a.value == b.value && structurally_equal(*a.lhs, *b.lhs);
        default: return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
    }
}

class ParseError : public std::runtime_error {
public:
    ParseError(std::string const& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

namespace detail {
class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    ExprPtr parse() {
        auto e = expr();
        skip();
        if (i_ != s_.size()) {
            if (s_[i_] == '-') fail("subtraction is not allowed");
            fail(std::string("unexpected '") + s_[i_] + "'");
        }
        return e;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(std::string const& msg) const { throw ParseError(msg, i_); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    ExprPtr expr() {
        auto e = term();
        while (eat('+')) e = Expr::binary(Expr::Kind::sum, e, term());
        return e;
    }
    ExprPtr term() {
        auto e = factor();
        for (;;) {
            if (eat('*'))
                e = Expr::binary(Expr::Kind::product, e, factor());
            else if (eat('/'))
                e = Expr::binary(Expr::Kind::quotient, e, factor());
            else
                return e;
        }
    }
    ExprPtr factor() {
        auto b = base();
        if (!eat('^')) return b;
        skip();
        bool neg = false;
        if (i_ < s_.size() && s_[i_] == '-') {
            neg = true;
            ++i_;
        }
        auto n = integer("exponent");
        return Expr::power(b, neg ? -n : n);
    }
    ExprPtr base() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            auto e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            auto v = integer("constant");
            if (v == 0) throw ParseError("constant must be positive", start);
            return Expr::constant(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                ++i_;
            return Expr::var(std::string(s_.substr(start, i_ - start)));
        }
        if (c == '-') fail("subtraction is not allowed");
        fail(std::string("unexpected '") + c + "'");
    }
    std::int64_t integer(char const* what) {
        skip();
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
            fail(std::string("expected ") + what);
        std::int64_t v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            int d = s_[i_] - '0';
            if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) fail(std::string(what) + " too large");
            v = v * 10 + d;
            ++i_;
        }
        return v;
    }
};

inline int precedence(Expr const& e) {
    switch (e.kind) {
        case Expr::Kind::sum: return 1;
        case Expr::Kind::product:
        case Expr::Kind::quotient: return 2;
        case Expr::Kind::power: return 3;
        default: return 4;
    }
}
}  // namespace detail

inline ExprPtr parse(std::string_view text) { return detail::Parser(text).parse(); }

/// Minimal-parenthesis form; parse(to_string(e)) is structurally equal to e.
inline std::string to_string(Expr const& e) {
    auto wrap = [](Expr const& sub, bool paren) {
        return paren ? "(" + to_string(sub) + ")" : to_string(sub);
    };
    int p = detail::precedence(e);
    switch (e.kind) {
        case Expr::Kind::var: return e.name;
        case Expr::Kind::constant: return std::to_string(e.value);
        case Expr::Kind::power: return wrap(*e.lhs, detail::precedence(*e.lhs) < 4) + "^" + std::to_string(e.value);
        default: {
            char const* op = e.kind == Expr::Kind::sum ? " + " : e.kind == Expr::Kind::product ? "*" : "/";
            return wrap(*e.lhs, detail::precedence(*e.lhs) < p) + op +
                   wrap(*e.rhs, detail::precedence(*e.rhs) <= p);
        }
    }
}

inline void collect_vars(Expr const& e, std::set<std::string>& out) {
    if (e.kind == Expr::Kind::var) out.insert(e.name);
    if (e.lhs) collect_vars(*e.lhs, out);
    if (e.rhs) collect_vars(*e.rhs, out);
}

using RationalEnv = std::map<std::string, Rational, std::less<>>;

inline Rational eval_rational(Expr const& e, RationalEnv const& env) {
    switch (e.kind) {
        case Expr::Kind::var: {
            auto it = env.find(e.name);
            if (it == env.end()) throw std::out_of_range("unbound variable " + e.name);
            if (sgn(it->second) <= 0) throw std::domain_error("variable " + e.name + " must be positive");
            return it->second;
        }
        case Expr::Kind::constant: return Rational(static_cast<long>(e.value));
        case Expr::Kind::sum: return eval_rational(*e.lhs, env) + eval_rational(*e.rhs, env);
        case Expr::Kind::product: return eval_rational(*e.lhs, env) * eval_rational(*e.rhs, env);
        case Expr::Kind::quotient: return eval_rational(*e.lhs, env) / eval_rational(*e.rhs, env);
        case Expr::Kind::power: return rpow(eval_rational(*e.lhs, env), static_cast<int>(e.value));
    }
    throw std::logic_error("bad expression node");
}

// ---------------------------------------------------------------- TropExpr

struct TropExpr;
using TropPtr = std::shared_ptr<const TropExpr>;

struct TropExpr {
    enum class Kind { var, constant, max, plus, minus, scale };

    Kind kind;
    std::string name;
    std::int64_t value = 0;       // constant, or the scalar of scale
    std::vector<TropPtr> args;    // max: >= 2 args; plus/minus: 2; scale: 1

    static TropPtr var(std::string n) { return std::make_shared<TropExpr>(TropExpr{Kind::var, std::move(n), 0, {}}); }
    static TropPtr constant(std::int64_t v) { return std::make_shared<TropExpr>(TropExpr{Kind::constant, {}, v, {}}); }
    static TropPtr plus(TropPtr a, TropPtr b) {
        return std::make_shared<TropExpr>(TropExpr{Kind::plus, {}, 0, {std::move(a), std::move(b)}});
    }
    static TropPtr minus(TropPtr a, TropPtr b) {
        return std::make_shared<TropExpr>(TropExpr{Kind::minus, {}, 0, {std::move(a), std::move(b)}});
    }
    static TropPtr scale(std::int64_t n, TropPtr a) {
        return std::make_shared<TropExpr>(TropExpr{Kind::scale, {}, n, {std::move(a)}});
    }
    /// n-ary max; nested maxima are flattened.
    static TropPtr max(std::vector<TropPtr> xs) {
        std::vector<TropPtr> flat;
        for (auto& x : xs) {
            if (x->kind == Kind::max)
                flat.insert(flat.end(), x->args.begin(), x->args.end());
            else
                flat.push_back(std::move(x));
        }
        if (flat.size() == 1) return flat.front();
        return std::make_shared<TropExpr>(TropExpr{Kind::max, {}, 0, std::move(flat)});
    }
};

inline TropPtr tropicalize(Expr const& e) {
    switch (e.kind) {
        case Expr::Kind::var: return TropExpr::var(e.name);
        case Expr::Kind::constant: return TropExpr::constant(0);
        case Expr::Kind::sum: return TropExpr::max({tropicalize(*e.lhs), tropicalize(*e.rhs)});
        case Expr::Kind::product: return TropExpr::plus(tropicalize(*e.lhs), tropicalize(*e.rhs));
        case Expr::Kind::quotient: return TropExpr::minus(tropicalize(*e.lhs), tropicalize(*e.rhs));
        case Expr::Kind::power: return TropExpr::scale(e.value, tropicalize(*e.lhs));
    }
    throw std::logic_error("bad expression node");
}

namespace detail {
inline int trop_precedence(TropExpr const& t) {
    switch (t.kind) {
        case TropExpr::Kind::plus:
        case TropExpr::Kind::minus: return 1;
        case TropExpr::Kind::scale: return 2;
        case TropExpr::Kind::constant: return t.value < 0 ? 1 : 3;
        default: return 3;
    }
}
}  // namespace detail

/// Canonical printed form: "x + y", "x - y", "max(x, y)", "2*x".
inline std::string to_string(TropExpr const& t) {
    auto wrap = [](TropExpr const& sub, bool paren) {
        return paren ? "(" + to_string(sub) + ")" : to_string(sub);
    };
    switch (t.kind) {
        case TropExpr::Kind::var: return t.name;
        case TropExpr::Kind::constant: return std::to_string(t.value);
        case TropExpr::Kind::max: {
            std::string s = "max(";
            for (std::size_t i = 0; i < t.args.size(); ++i) s += (i ? ", " : "") + to_string(*t.args[i]);
            return s + ")";
        }
        case TropExpr::Kind::plus:
            return wrap(*t.args[0], false) + " + " + wrap(*t.args[1], detail::trop_precedence(*t.args[1]) <= 1);
        case TropExpr::Kind::minus:
            return wrap(*t.args[0], false) + " - " + wrap(*t.args[1], detail::trop_precedence(*t.args[1]) <= 1);
        case TropExpr::Kind::scale:
            return std::to_string(t.value) + "*" + wrap(*t.args[0], detail::trop_precedence(*t.args[0]) < 3);
    }
    throw std::logic_error("bad tropical node");
}

inline void collect_vars(TropExpr const& t, std::set<std::string>& out) {
    if (t.kind == TropExpr::Kind::var) out.insert(t.name);
    for (auto const& a : t.args) collect_vars(*a, out);
}

using IntEnv = std::map<std::string, std::int64_t, std::less<>>;

inline std::int64_t eval_trop(TropExpr const& t, IntEnv const& env) {
    switch (t.kind) {
        case TropExpr::Kind::var: {
            auto it = env.find(t.name);
            if (it == env.end()) throw std::out_of_range("unbound variable " + t.name);
            return it->second;
        }
        case TropExpr::Kind::constant: return t.value;
        case TropExpr::Kind::max: {
            std::int64_t m = eval_trop(*t.args[0], env);
            for (std::size_t i = 1; i < t.args.size(); ++i) m = std::max(m, eval_trop(*t.args[i], env));
            return m;
        }
        case TropExpr::Kind::plus: return eval_trop(*t.args[0], env) + eval_trop(*t.args[1], env);
        case TropExpr::Kind::minus: return eval_trop(*t.args[0], env) - eval_trop(*t.args[1], env);
        case TropExpr::Kind::scale: return t.value * eval_trop(*t.args[0], env);
    }
    throw std::logic_error("bad tropical node");
}

/// TropExpr with variables resolved to positions, for repeated evaluation.
class CompiledTrop {
public:
    CompiledTrop(TropExpr const& t, std::vector<std::string> const& vars) { root_ = build(t, vars); }

    std::int64_t operator()(std::span<const std::int64_t> vals) const { return eval(root_, vals); }

private:
    struct Node {
        TropExpr::Kind kind;
        std::int64_t value;  // constant / scalar / variable index
        std::vector<int> args;
    };
    std::vector<Node> nodes_;
    int root_ = -1;

    int build(TropExpr const& t, std::vector<std::string> const& vars) {
        Node n{t.kind, t.value, {}};
        if (t.kind == TropExpr::Kind::var) {
            auto it = std::find(vars.begin(), vars.end(), t.name);
            if (it == vars.end()) throw std::out_of_range("unbound variable " + t.name);
            n.value = it - vars.begin();
        }
        for (auto const& a : t.args) n.args.push_back(build(*a, vars));
        nodes_.push_back(std::move(n));
        return static_cast<int>(nodes_.size()) - 1;
    }

    std::int64_t eval(int i, std::span<const std::int64_t> vals) const {
        Node const& n = nodes_[i];
        switch (n.kind) {
            case TropExpr::Kind::var: return vals[n.value];
            case TropExpr::Kind::constant: return n.value;
            case TropExpr::Kind::max: {
                std::int64_t m = eval(n.args[0], vals);
                for (std::size_t j = 1; j < n.args.size(); ++j) m = std::max(m, eval(n.args[j], vals));
                return m;
            }
            case TropExpr::Kind::plus: return eval(n.args[0], vals) + eval(n.args[1], vals);
            case TropExpr::Kind::minus: return eval(n.args[0], vals) - eval(n.args[1], vals);
            case TropExpr::Kind::scale: return n.value * eval(n.args[0], vals);
        }
        return 0;
    }
};

struct TropComparison {
    bool equal = true;
    std::int64_t points = 0;
    bool exhaustive = false;
    std::optional<IntEnv> witness;
};

/// Compares two piecewise-linear maps on [-box, box]^n: exhaustively when the
/// box has at most `samples` points, otherwise at `samples` seeded points.
inline TropComparison trop_equal_on_box(TropExpr const& a, TropExpr const& b, std::int64_t box,
                                        std::int64_t samples, std::uint64_t seed) {
    if (box < 0) throw std::invalid_argument("box must be nonnegative");
    std::set<std::string> names;
    collect_vars(a, names);
    collect_vars(b, names);
    std::vector<std::string> vars(names.begin(), names.end());
    CompiledTrop ca(a, vars), cb(b, vars);

    TropComparison out;
    std::vector<std::int64_t> v(vars.size(), -box);
    auto check = [&] {
        ++out.points;
        if (ca(v) == cb(v)) return true;
        out.equal = false;
        IntEnv w;
        for (std::size_t i = 0; i < vars.size(); ++i) w[vars[i]] = v[i];
        out.witness = std::move(w);
        return false;
    };

    long double total = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) total *= static_cast<long double>(2 * box + 1);
    if (total <= static_cast<long double>(samples)) {
        out.exhaustive = true;
        for (;;) {
            if (!check()) return out;
            std::size_t i = vars.size();
            while (i > 0 && v[i - 1] == box) v[--i] = -box;
            if (i == 0) return out;
            ++v[i - 1];
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(-box, box);
    for (std::int64_t s = 0; s < samples; ++s) {
        for (auto& x : v) x = dist(rng);
        if (!check()) return out;
    }
    return out;
}

}  // namespace d5
