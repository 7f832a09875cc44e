#pragma once

#include "wittforge/integer.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace wittforge {

using Bindings = std::map<std::string, std::int64_t, std::less<>>;

/// Integer expression over named parameters, e.g. "(n-1)(n+2)/2" or "4n^2+7n+2".
///
/// Supports + - * / ^, parentheses, unary minus and implicit multiplication
/// ("2n", "(n-1)(n+2)"). Division must be exact; evaluation is unbounded and
/// the result must fit in 64 bits.
class Expr {
public:
    Expr() = default;

    /// Throws ErrorKind::Parse.
    static Expr parse(std::string_view text);
    static Expr constant(std::int64_t value);

    /// Throws ErrorKind::Argument on unbound names or inexact division.
    std::int64_t evaluate(const Bindings& env = {}) const;

    std::set<std::string> variables() const;
    bool is_constant() const { return variables().empty(); }
    const std::string& text() const noexcept { return text_; }

private:
    enum class Op { Num, Var, Add, Sub, Mul, Div, Pow, Neg };
    struct Instr {
        Op op;
        Integer value;
        std::string name;
    };

    std::string text_;
    std::vector<Instr> program_; // postfix
    friend class ExprParser;
};

} // namespace wittforge
