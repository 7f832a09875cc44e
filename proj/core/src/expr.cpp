#include "wittforge/expr.hpp"

#include "wittforge/error.hpp"

#include <cctype>

namespace wittforge {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Expr run() {
        Expr e;
        e.text_ = std::string(text_);
        out_ = &e.program_;
        skip_space();
        if (pos_ == text_.size()) {
            error("empty expression");
        }
        parse_sum();
        skip_space();
        if (pos_ != text_.size()) {
            error("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return e;
    }

private:
    using Op = Expr::Op;

    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorKind::Parse, "in expression '" + std::string(text_) + "' at column " +
                                   std::to_string(pos_ + 1) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_atom() {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
               c == '_' || c == '(';
    }

    void emit(Op op) { out_->push_back({op, Integer(0), {}}); }

    void parse_sum() {
        parse_product();
        for (;;) {
            const char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                parse_product();
                emit(c == '+' ? Op::Add : Op::Sub);
            } else {
                return;
            }
        }
    }

    void parse_product() {
        parse_unary();
        for (;;) {
            const char c = peek();
            if (c == '*' || c == '/') {
                ++pos_;
                parse_unary();
                emit(c == '*' ? Op::Mul : Op::Div);
            } else if (starts_atom()) {
                parse_power();
                emit(Op::Mul);
            } else {
                return;
            }
        }
    }

    void parse_unary() {
        if (peek() == '-') {
            ++pos_;
            parse_unary();
            emit(Op::Neg);
            return;
        }
        if (peek() == '+') {
            ++pos_;
            parse_unary();
            return;
        }
        parse_power();
    }

    void parse_power() {
        parse_atom();
        if (peek() == '^') {
            ++pos_;
            parse_unary();
            emit(Op::Pow);
        }
    }

    void parse_atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            parse_sum();
            if (peek() != ')') {
                error("expected ')'");
            }
            ++pos_;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            out_->push_back({Op::Num, Integer(std::string(text_.substr(start, pos_ - start))), {}});
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            out_->push_back({Op::Var, Integer(0), std::string(text_.substr(start, pos_ - start))});
            return;
        }
        error(c == '\0' ? "unexpected end of expression" : "unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<Expr::Instr>* out_ = nullptr;
};

Expr Expr::parse(std::string_view text) { return ExprParser(text).run(); }

Expr Expr::constant(std::int64_t value) {
    Expr e;
    e.text_ = std::to_string(value);
    e.program_.push_back({Op::Num, Integer(static_cast<long>(value)), {}});
    if (value < 0) {
        e.program_.back().value = -static_cast<long>(value);
        e.program_.push_back({Op::Neg, Integer(0), {}});
    }
    return e;
}

std::int64_t Expr::evaluate(const Bindings& env) const {
    std::vector<Integer> stack;
    auto pop = [&stack]() {
        Integer v = std::move(stack.back());
        stack.pop_back();
        return v;
    };
    for (const auto& ins : program_) {
        switch (ins.op) {
        case Op::Num: stack.push_back(ins.value); break;
        case Op::Var: {
            auto it = env.find(ins.name);
            if (it == env.end()) {
                fail(ErrorKind::Argument, "unbound parameter '" + ins.name + "' in '" + text_ + "'");
            }
            stack.emplace_back(static_cast<long>(it->second));
            break;
        }
        case Op::Neg: stack.back() = -stack.back(); break;
        default: {
            Integer rhs = pop();
            Integer lhs = pop();
            if (ins.op == Op::Add) {
                stack.push_back(lhs + rhs);
            } else if (ins.op == Op::Sub) {
                stack.push_back(lhs - rhs);
            } else if (ins.op == Op::Mul) {
                stack.push_back(lhs * rhs);
            } else if (ins.op == Op::Div) {
                if (rhs == 0 || lhs % rhs != 0) {
                    fail(ErrorKind::Argument, "inexact division " + lhs.get_str() + "/" + rhs.get_str() +
                                                  " in '" + text_ + "'");
                }
                stack.push_back(lhs / rhs);
            } else {
                if (rhs < 0 || rhs > 64) {
                    fail(ErrorKind::Argument, "exponent out of range in '" + text_ + "'");
                }
                Integer p;
                mpz_pow_ui(p.get_mpz_t(), lhs.get_mpz_t(), rhs.get_ui());
                stack.push_back(p);
            }
        }
        }
    }
    if (stack.size() != 1 || !stack.back().fits_slong_p()) {
        fail(ErrorKind::Argument, "expression '" + text_ + "' does not evaluate to a 64-bit integer");
    }
    return stack.back().get_si();
}

std::set<std::string> Expr::variables() const {
    std::set<std::string> out;
    for (const auto& ins : program_) {
        if (ins.op == Op::Var) {
            out.insert(ins.name);
        }
    }
    return out;
}

} // namespace wittforge
