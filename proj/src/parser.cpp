#include "meropole/parser.hpp"

#include "meropole/errors.hpp"

#include <algorithm>
#include <cctype>

namespace meropole {
namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError("syntax error: " + msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        skip_ws();
        const bool negate = accept('-');
        MultiPoly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    MultiPoly factor() {
        MultiPoly b = base();
        if (!accept('^')) return b;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '-') throw ParseError("negative exponent", pos_);
        if (pos_ >= s_.size() || !is_digit(s_[pos_])) throw ParseError("exponent must be a nonnegative integer", pos_);
        const std::size_t start = pos_;
        const BigInt e = integer();
        if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/'))
            throw ParseError("non-integer exponent", start);
        if (e > 100000) throw ParseError("exponent too large", start);
        return b.pow(static_cast<unsigned>(e.get_ui()));
    }

    BigInt integer() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    MultiPoly base() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (is_digit(c)) {
            BigInt num = integer();
            BigInt den = 1;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip_ws();
                if (pos_ >= s_.size() || !is_digit(s_[pos_])) fail("expected positive integer denominator");
                const std::size_t at = pos_;
                den = integer();
                if (den == 0) throw ParseError("zero denominator", at);
            }
            if (pos_ < s_.size() && (is_ident_start(s_[pos_]) || s_[pos_] == '('))
                fail("implicit multiplication is not allowed");
            if (pos_ < s_.size() && s_[pos_] == '.') fail("decimal literals are not supported");
            return MultiPoly::constant(vars_, Rational(num, den));
        }
        if (is_ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
            const std::string name(s_.substr(start, pos_ - start));
            if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
                throw InputError("unknown identifier '" + name + "' at position " + std::to_string(start));
            return MultiPoly::variable(vars_, name);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_expression(std::string_view text, const std::vector<std::string>& variables) {
    return Parser(text, variables).parse();
}

std::vector<std::string> parse_variable_list(std::string_view text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i <= text.size()) {
        const std::size_t comma = std::min(text.find(',', i), text.size());
        std::string_view item = text.substr(i, comma - i);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        if (item.empty() || !is_ident_start(item.front()) ||
            !std::all_of(item.begin(), item.end(), is_ident_char))
            throw InputError("invalid variable name '" + std::string(item) + "'");
        if (std::find(out.begin(), out.end(), item) != out.end())
            throw InputError("duplicate variable '" + std::string(item) + "'");
        out.emplace_back(item);
        i = comma + 1;
    }
    return out;
}

}  // namespace meropole
