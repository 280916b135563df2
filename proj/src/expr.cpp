#include "bmh/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace bmh {

namespace {

class Parser {
public:
    Parser(std::string_view text, const ExprAliases& aliases) : s_(text), aliases_(aliases) {}

    RatFunc parse() {
        RatFunc v = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_expression: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                                    std::string(s_) + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc sum() {
        RatFunc v = product();
        while (true) {
            if (eat('+')) v += product();
            else if (eat('-')) v -= product();
            else return v;
        }
    }

    RatFunc product() {
        RatFunc v = unary();
        while (true) {
            if (eat('*')) v *= unary();
            else if (eat('/')) {
                RatFunc d = unary();
                if (d.is_zero()) fail("division by zero");
                v = v / d;
            } else return v;
        }
    }

    RatFunc unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    RatFunc power() {
        RatFunc base = atom();
        if (eat('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }

    RatFunc atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc v = sum();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RatFunc(Rational::parse(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string_view name = s_.substr(start, pos_ - start);
            if (auto it = aliases_.find(name); it != aliases_.end()) return it->second;
            try {
                return RatFunc::variable(Var::from_name(name));
            } catch (const std::invalid_argument&) {
                pos_ = start;
                fail("unknown name '" + std::string(name) + "'");
            }
        }
        fail("unexpected character");
    }

    std::string_view s_;
    const ExprAliases& aliases_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_expression(std::string_view text, const ExprAliases& aliases) { return Parser(text, aliases).parse(); }

const ExprAliases& scheme_aliases() {
    static const ExprAliases aliases{{"qm", RatFunc::variable(var::q) * RatFunc::variable(var::r)}};
    return aliases;
}

}  // namespace bmh
