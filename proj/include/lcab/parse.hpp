#pragma once

#include "lcab/expr.hpp"

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lcab {

/// Positioned syntax/semantic error; `offset` is a byte offset into the input.
struct parse_error : std::runtime_error {
    parse_error(std::size_t at, const std::string& message)
        : std::runtime_error(message + " (at byte " + std::to_string(at) + ")"), offset(at) {}
    std::size_t offset;
};

namespace detail {

class term_parser {
public:
    explicit term_parser(std::string_view text) : text_(text) {}

    group_expr parse() {
        group_expr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail(pos_, "trailing input after expression");
        return e;
    }

private:
    group_expr parse_sum() {
        std::vector<group_expr> parts;
        parts.push_back(parse_term());
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '+') {
                ++pos_;
                parts.push_back(parse_term());
            } else {
                break;
            }
        }
        if (parts.size() == 1) return std::move(parts.front());
        return group_expr::direct_sum(std::move(parts));
    }

    group_expr parse_term() {
        skip_ws();
        if (pos_ >= text_.size()) fail(pos_, "expected a term");
        char c = text_[pos_];
        if (c == '0') {
            ++pos_;
            return group_expr::trivial();
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) fail(pos_, "expected a term");
        std::size_t start = pos_;
        std::string word = identifier();
        if (word == "R") return group_expr::reals();
        if (word == "Z") return group_expr::integers();
        if (word == "T") return group_expr::circle();
        if (word == "Q") return group_expr::rationals();
        if (word == "Qhat") return group_expr::rationals_dual();
        if (word == "C") {
            auto [n, at] = paren_uint();
            if (n < 2) fail(at, "C(n) requires n >= 2");
            return group_expr::cyclic(n);
        }
        if (word == "Prufer") return prime_ctor(start, &group_expr::prufer);
        if (word == "Zp") return prime_ctor(start, &group_expr::padic_integers);
        if (word == "Qp") return prime_ctor(start, &group_expr::padic_field);
        if (word == "prod" || word == "sum") {
            expect('(');
            group_expr base = parse_sum();
            expect(',');
            cardinal k = parse_cardinal();
            expect(')');
            return word == "prod" ? group_expr::power(std::move(base), k)
                                  : group_expr::restricted_power(std::move(base), k);
        }
        if (word == "lp") {
            expect('(');
            skip_ws();
            std::size_t inner = pos_;
            if (identifier() != "Qp") fail(inner, "lp expects the pair (Qp(p), Zp(p))");
            auto [p, at] = paren_uint();
            if (!is_prime(p)) fail(at, "non-prime argument to Qp");
            expect(',');
            cardinal k = parse_cardinal();
            expect(')');
            return group_expr::local_prod(p, k);
        }
        fail(start, "unknown term '" + word + "'");
    }

    group_expr prime_ctor(std::size_t, group_expr (*make)(std::uint64_t)) {
        auto [p, at] = paren_uint();
        if (!is_prime(p)) fail(at, "non-prime argument");
        return make(p);
    }

    cardinal parse_cardinal() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == 'w') {
            ++pos_;
            return cardinal::aleph0();
        }
        auto [n, at] = parse_uint();
        (void)at;
        return cardinal::finite(n);
    }

    std::pair<std::uint64_t, std::size_t> paren_uint() {
        expect('(');
        auto r = parse_uint();
        expect(')');
        return r;
    }

    std::pair<std::uint64_t, std::size_t> parse_uint() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(pos_, "expected a number");
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (UINT64_MAX - d) / 10) fail(start, "number too large");
            v = v * 10 + d;
            ++pos_;
        }
        return {v, start};
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(std::size_t at, const std::string& message) { throw parse_error(at, message); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses the term grammar
///   R | Z | T | Q | Qhat | C(n) | Prufer(p) | Zp(p) | Qp(p)
///   | prod(E, k) | sum(E, k) | lp(Qp(p), k) | E + E | 0
/// with k a non-negative integer or `w`.  `+` is left-associative and
/// flattened into a direct sum; finite local products normalize to powers.
inline group_expr parse_expr(std::string_view text) { return detail::term_parser(text).parse(); }

} // namespace lcab
