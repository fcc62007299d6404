// Copyright 2026 the gfmix authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GFMIX_EXPR_HPP
#define GFMIX_EXPR_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace gfmix::expr {

/// A parsed arithmetic expression over named variables.
///
/// Grammar: +, -, *, /, ^ plus the functions pow, exp, ln, sqrt, cosh and
/// acosh, with pi and e as named constants. Used for user-supplied mapping
/// and mixing-density definitions.
class Expression {
public:
    Expression() = default;

    /// Throws std::invalid_argument naming the offending token.
    static Expression parse(std::string_view text);

    double eval(const std::map<std::string, double>& vars) const;
    double eval1(std::string_view var, double value) const;

    /// Variable names referenced by the expression, sorted, deduplicated.
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& text() const { return text_; }
    bool empty() const { return root_ == nullptr; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
    std::vector<std::string> vars_;
};

} // namespace gfmix::expr

#endif
