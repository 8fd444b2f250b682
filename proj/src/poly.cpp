#include "polyprime/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "polyprime/errors.hpp"

namespace polyprime {

namespace {

void strip_leading_zeros(std::vector<BigInt>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

struct Token {
    enum class Kind { Integer, Var, Caret, Star, Plus, Minus, End };
    Kind kind;
    BigInt value;    // Integer only
    std::size_t pos; // offset in the input, for error messages
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            tokens.push_back({Token::Kind::Integer,
                              BigInt(std::string(text.substr(start, i - start)), 10), start});
            continue;
        }
        switch (c) {
            case 'x': tokens.push_back({Token::Kind::Var, 0, i}); break;
            case '^': tokens.push_back({Token::Kind::Caret, 0, i}); break;
            case '*': tokens.push_back({Token::Kind::Star, 0, i}); break;
            case '+': tokens.push_back({Token::Kind::Plus, 0, i}); break;
            case '-': tokens.push_back({Token::Kind::Minus, 0, i}); break;
            default: {
                std::ostringstream msg;
                msg << "unexpected character '" << c << "' at position " << i;
                throw SyntaxError(msg.str());
            }
        }
        ++i;
    }
    tokens.push_back({Token::Kind::End, 0, text.size()});
    return tokens;
}

class TermParser {
public:
    TermParser(std::vector<Token> tokens, std::size_t degree_cap)
        : tokens_(std::move(tokens)), cap_(degree_cap) {}

    const Token& peek() const { return tokens_[pos_]; }
    void advance() { ++pos_; }

    // One term: coefficient and exponent.
    std::pair<BigInt, std::size_t> parse_term() {
        BigInt coefficient;
        bool has_var = false;
        if (peek().kind == Token::Kind::Integer) {
            coefficient = peek().value;
            advance();
            if (peek().kind == Token::Kind::Star) {
                advance();
                if (peek().kind != Token::Kind::Var) throw SyntaxError("'*' must be followed by 'x'");
            }
            if (peek().kind == Token::Kind::Var) {
                advance();
                has_var = true;
            }
        } else if (peek().kind == Token::Kind::Var) {
            coefficient = 1;
            advance();
            has_var = true;
        } else {
            throw SyntaxError("expected a term");
        }

        std::size_t exponent = 0;
        if (has_var) {
            exponent = 1;
            if (peek().kind == Token::Kind::Caret) {
                advance();
                if (peek().kind != Token::Kind::Integer) throw SyntaxError("dangling '^'");
                const BigInt& e = peek().value;
                if (e > cap_) throw DegreeCapExceeded("exponent " + to_decimal(e) +
                                                      " exceeds the degree cap " + std::to_string(cap_));
                exponent = e.get_ui();
                advance();
            }
        }
        if (exponent > cap_) {
            throw DegreeCapExceeded("exponent " + std::to_string(exponent) +
                                    " exceeds the degree cap " + std::to_string(cap_));
        }
        return {std::move(coefficient), exponent};
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t cap_;
};

} // namespace

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    strip_leading_zeros(coeffs_);
}

Polynomial Polynomial::parse(std::string_view text, std::size_t degree_cap) {
    auto tokens = tokenize(text);
    if (tokens.front().kind == Token::Kind::End) throw EmptyInput("empty polynomial expression");

    TermParser parser(std::move(tokens), degree_cap);
    std::vector<BigInt> coeffs;
    auto accumulate = [&coeffs](const BigInt& c, std::size_t exp, int sign) {
        if (coeffs.size() <= exp) coeffs.resize(exp + 1, BigInt(0));
        if (sign > 0)
            coeffs[exp] += c;
        else
            coeffs[exp] -= c;
    };

    int sign = 1;
    if (parser.peek().kind == Token::Kind::Minus) { // unary minus on the first term
        parser.advance();
        sign = -1;
    }
    while (true) {
        auto [coefficient, exponent] = parser.parse_term();
        accumulate(coefficient, exponent, sign);
        if (parser.peek().kind == Token::Kind::End) break;
        if (parser.peek().kind == Token::Kind::Plus) {
            sign = 1;
        } else if (parser.peek().kind == Token::Kind::Minus) {
            sign = -1;
        } else {
            throw SyntaxError("expected '+' or '-' between terms");
        }
        parser.advance();
    }

    return Polynomial(std::move(coeffs));
}

const BigInt& Polynomial::coeff(std::size_t i) const {
    static const BigInt zero = 0;
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

BigInt Polynomial::operator()(const BigInt& point) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= point;
        acc += *it;
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        const BigInt& c = coeffs_[idx];
        if (c == 0) continue;
        bool negative = c < 0;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        BigInt magnitude = abs(c);
        if (idx == 0) {
            out << magnitude.get_str();
        } else {
            if (magnitude != 1) out << magnitude.get_str();
            out << 'x';
            if (idx >= 2) out << '^' << idx;
        }
    }
    return out.str();
}

Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
    std::vector<BigInt> sum(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) sum[i] += lhs.coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) sum[i] += rhs.coeffs_[i];
    return Polynomial(std::move(sum));
}

} // namespace polyprime
