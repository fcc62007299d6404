// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#include "gfmix/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace gfmix::expr {

struct Expression::Node {
    enum class Kind { Constant, Variable, Unary, Binary, Call1, Call2 };
    Kind kind;
    double value = 0.0;           // Constant
    std::string name;             // Variable / Call
    char op = 0;                  // Unary ('-') / Binary
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string& what) {
    throw std::invalid_argument("expression error at position " + std::to_string(pos) + " ('" +
                                std::string(text.substr(pos, 8)) + "'): " + what +
                                " in \"" + std::string(text) + "\"");
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr run() {
        NodePtr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail(text_, pos_, "trailing input");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NodePtr parse_sum() {
        NodePtr lhs = parse_product();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos_;
            NodePtr rhs = parse_product();
            lhs = binary(c, lhs, rhs);
        }
    }

    NodePtr parse_product() {
        NodePtr lhs = parse_unary();
        for (;;) {
            char c = peek();
            if (c != '*' && c != '/') return lhs;
            ++pos_;
            NodePtr rhs = parse_unary();
            lhs = binary(c, lhs, rhs);
        }
    }

    NodePtr parse_unary() {
        if (eat('-')) {
            auto n = std::make_shared<Expression::Node>();
            n->kind = Kind::Unary;
            n->op = '-';
            n->lhs = parse_unary();
            return n;
        }
        (void)eat('+');
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (peek() == '^') {
            ++pos_;
            NodePtr exp = parse_unary(); // right associative
            return binary('^', base, exp);
        }
        return base;
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail(text_, pos_, "unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
        if (c == '(') {
            ++pos_;
            NodePtr e = parse_sum();
            if (!eat(')')) fail(text_, pos_, "expected ')'");
            return e;
        }
        fail(text_, pos_, "unexpected character");
    }

    NodePtr parse_number() {
        const char* begin = text_.data() + pos_;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) fail(text_, pos_, "malformed number");
        pos_ += static_cast<std::size_t>(end - begin);
        auto n = std::make_shared<Expression::Node>();
        n->kind = Kind::Constant;
        n->value = v;
        return n;
    }

    NodePtr parse_ident() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (peek() == '(') {
            ++pos_;
            NodePtr arg1 = parse_sum();
            NodePtr arg2;
            if (eat(',')) arg2 = parse_sum();
            if (!eat(')')) fail(text_, pos_, "expected ')' after arguments of " + name);
            static const char* unary_fns[] = {"exp", "ln", "sqrt", "cosh", "acosh"};
            if (name == "pow") {
                if (!arg2) fail(text_, start, "pow takes two arguments");
                return binary('^', arg1, arg2);
            }
            if (std::find_if(std::begin(unary_fns), std::end(unary_fns),
                             [&](const char* f) { return name == f; }) == std::end(unary_fns))
                fail(text_, start, "unknown function '" + name + "'");
            if (arg2) fail(text_, start, name + " takes one argument");
            auto n = std::make_shared<Expression::Node>();
            n->kind = Kind::Call1;
            n->name = name;
            n->lhs = arg1;
            return n;
        }
        auto n = std::make_shared<Expression::Node>();
        if (name == "pi") {
            n->kind = Kind::Constant;
            n->value = std::numbers::pi;
        } else if (name == "e") {
            n->kind = Kind::Constant;
            n->value = std::numbers::e;
        } else {
            n->kind = Kind::Variable;
            n->name = std::move(name);
        }
        return n;
    }

    static NodePtr binary(char op, NodePtr lhs, NodePtr rhs) {
        auto n = std::make_shared<Expression::Node>();
        n->kind = Kind::Binary;
        n->op = op;
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        return n;
    }
};

double eval_node(const Expression::Node& n, const std::map<std::string, double>& vars) {
    switch (n.kind) {
    case Kind::Constant: return n.value;
    case Kind::Variable: {
        auto it = vars.find(n.name);
        if (it == vars.end())
            throw std::invalid_argument("expression: unbound variable '" + n.name + "'");
        return it->second;
    }
    case Kind::Unary: return -eval_node(*n.lhs, vars);
    case Kind::Binary: {
        double a = eval_node(*n.lhs, vars);
        double b = eval_node(*n.rhs, vars);
        switch (n.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/': return a / b;
        case '^': return std::pow(a, b);
        }
        break;
    }
    case Kind::Call1: {
        double a = eval_node(*n.lhs, vars);
        if (n.name == "exp") return std::exp(a);
        if (n.name == "ln") return std::log(a);
        if (n.name == "sqrt") return std::sqrt(a);
        if (n.name == "cosh") return std::cosh(a);
        if (n.name == "acosh") return std::acosh(a);
        break;
    }
    default: break;
    }
    throw std::logic_error("expression: malformed node");
}

void collect_vars(const Expression::Node& n, std::vector<std::string>& out) {
    if (n.kind == Kind::Variable) out.push_back(n.name);
    if (n.lhs) collect_vars(*n.lhs, out);
    if (n.rhs) collect_vars(*n.rhs, out);
}

} // namespace

Expression Expression::parse(std::string_view text) {
    Expression e;
    e.text_ = std::string(text);
    e.root_ = Parser(text).run();
    collect_vars(*e.root_, e.vars_);
    std::sort(e.vars_.begin(), e.vars_.end());
    e.vars_.erase(std::unique(e.vars_.begin(), e.vars_.end()), e.vars_.end());
    return e;
}

double Expression::eval(const std::map<std::string, double>& vars) const {
    if (!root_) throw std::logic_error("expression: evaluating empty expression");
    return eval_node(*root_, vars);
}

double Expression::eval1(std::string_view var, double value) const {
    return eval({{std::string(var), value}});
}

} // namespace gfmix::expr
