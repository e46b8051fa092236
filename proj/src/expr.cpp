#include "higgs/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace higgs {

ParseError::ParseError(const std::string& message, int line_, int column_)
    : std::runtime_error(message + " at " + std::to_string(line_) + ":" +
                         std::to_string(column_)),
      line(line_),
      column(column_) {}

namespace {

struct Token {
    enum class Kind { plus, minus, star, caret, lparen, rparen, number,
                      imag_number, ident, end };
    Kind kind = Kind::end;
    double number = 0.0;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& current() const { return token_; }

    void advance() {
        skip_whitespace();
        token_.line = line_;
        token_.column = column_;
        if (pos_ >= text_.size()) {
            token_.kind = Token::Kind::end;
            return;
        }
        const char ch = text_[pos_];
        switch (ch) {
            case '+': token_.kind = Token::Kind::plus; bump(); return;
            case '-': token_.kind = Token::Kind::minus; bump(); return;
            case '*': token_.kind = Token::Kind::star; bump(); return;
            case '^': token_.kind = Token::Kind::caret; bump(); return;
            case '(': token_.kind = Token::Kind::lparen; bump(); return;
            case ')': token_.kind = Token::Kind::rparen; bump(); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            lex_identifier();
            return;
        }
        throw ParseError(std::string("unexpected character '") + ch + "'",
                         line_, column_);
    }

  private:
    void bump() {
        if (pos_ < text_.size()) {
            if (text_[pos_] == '\n') {
                ++line_;
                column_ = 1;
            } else {
                ++column_;
            }
            ++pos_;
        }
    }

    void skip_whitespace() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            bump();
    }

    void lex_number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            bump();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            bump();
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                bump();
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = pos_;
            bump();
            if (pos_ < text_.size() &&
                (text_[pos_] == '+' || text_[pos_] == '-'))
                bump();
            if (pos_ >= text_.size() ||
                !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                // not an exponent after all; rewind is not needed because
                // the grammar has no other use for 'e' here -> error
                throw ParseError("malformed numeric exponent", token_.line,
                                 static_cast<int>(mark) + 1);
            }
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                bump();
        }
        const std::string slice = text_.substr(start, pos_ - start);
        double value = 0.0;
        const auto result =
            std::from_chars(slice.data(), slice.data() + slice.size(), value);
        if (result.ec != std::errc() ||
            result.ptr != slice.data() + slice.size())
            throw ParseError("malformed number '" + slice + "'", token_.line,
                             token_.column);
        token_.number = value;
        if (pos_ < text_.size() && text_[pos_] == 'i') {
            bump();
            token_.kind = Token::Kind::imag_number;
        } else {
            token_.kind = Token::Kind::number;
        }
    }

    void lex_identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
            bump();
        token_.text = text_.substr(start, pos_ - start);
        // Unicode dagger alias: a† == ad
        if (token_.text == "a" && pos_ + 3 <= text_.size() &&
            text_.compare(pos_, 3, "\xE2\x80\xA0") == 0) {
            pos_ += 3;
            column_ += 1;
            token_.text = "ad";
        }
        token_.kind = Token::Kind::ident;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    Token token_;
};

class Parser {
  public:
    Parser(const std::string& text, int n_modes)
        : lexer_(text), n_modes_(n_modes) {}

    ExprPtr run() {
        auto expr = parse_expr();
        expect(Token::Kind::end, "end of input");
        return expr;
    }

  private:
    [[noreturn]] void fail(const std::string& message) {
        throw ParseError(message, lexer_.current().line,
                         lexer_.current().column);
    }

    void expect(Token::Kind kind, const std::string& what) {
        if (lexer_.current().kind != kind) fail("expected " + what);
        if (kind != Token::Kind::end) lexer_.advance();
    }

    bool accept(Token::Kind kind) {
        if (lexer_.current().kind != kind) return false;
        lexer_.advance();
        return true;
    }

    ExprPtr parse_expr() {
        auto node = parse_term();
        while (true) {
            if (accept(Token::Kind::plus)) {
                auto sum = std::make_shared<ExprNode>();
                sum->kind = ExprNode::Kind::sum;
                sum->children = {node, parse_term()};
                node = sum;
            } else if (accept(Token::Kind::minus)) {
                auto diff = std::make_shared<ExprNode>();
                diff->kind = ExprNode::Kind::difference;
                diff->children = {node, parse_term()};
                node = diff;
            } else {
                return node;
            }
        }
    }

    ExprPtr parse_term() {
        auto node = parse_factor();
        while (accept(Token::Kind::star)) {
            auto product = std::make_shared<ExprNode>();
            product->kind = ExprNode::Kind::product;
            product->children = {node, parse_factor()};
            node = product;
        }
        return node;
    }

    ExprPtr parse_factor() {
        if (accept(Token::Kind::minus)) {
            auto negate = std::make_shared<ExprNode>();
            negate->kind = ExprNode::Kind::negate;
            negate->children = {parse_factor()};
            return negate;
        }
        auto base = parse_base();
        if (accept(Token::Kind::caret)) {
            const auto& tok = lexer_.current();
            if (tok.kind != Token::Kind::number || tok.number < 0.0 ||
                tok.number != std::floor(tok.number))
                fail("expected a non-negative integer exponent");
            auto power = std::make_shared<ExprNode>();
            power->kind = ExprNode::Kind::power;
            power->children = {base};
            power->exponent = static_cast<unsigned>(tok.number);
            lexer_.advance();
            return power;
        }
        return base;
    }

    ExprPtr parse_base() {
        const Token tok = lexer_.current();
        switch (tok.kind) {
            case Token::Kind::number: {
                lexer_.advance();
                auto node = std::make_shared<ExprNode>();
                node->kind = ExprNode::Kind::scalar;
                node->value = Complex{tok.number, 0.0};
                return node;
            }
            case Token::Kind::imag_number: {
                lexer_.advance();
                auto node = std::make_shared<ExprNode>();
                node->kind = ExprNode::Kind::scalar;
                node->value = Complex{0.0, tok.number};
                return node;
            }
            case Token::Kind::lparen: {
                lexer_.advance();
                auto inner = parse_expr();
                expect(Token::Kind::rparen, "')'");
                return inner;
            }
            case Token::Kind::ident:
                return parse_identifier(tok);
            default:
                fail("expected a scalar, atom, parameter, or '('");
        }
    }

    ExprPtr parse_identifier(const Token& tok) {
        lexer_.advance();
        auto node = std::make_shared<ExprNode>();
        if (tok.text == "i") {
            node->kind = ExprNode::Kind::scalar;
            node->value = Complex{0.0, 1.0};
            return node;
        }
        if (tok.text == "a" || tok.text == "ad") {
            expect(Token::Kind::lparen, "'(' after " + tok.text);
            const auto& mode_tok = lexer_.current();
            if (mode_tok.kind != Token::Kind::number ||
                mode_tok.number != std::floor(mode_tok.number))
                fail("expected an integer mode index");
            const int mode = static_cast<int>(mode_tok.number);
            if (mode < 1 || mode > n_modes_)
                fail("mode index " + std::to_string(mode) + " outside 1.." +
                     std::to_string(n_modes_));
            lexer_.advance();
            expect(Token::Kind::rparen, "')'");
            node->kind = ExprNode::Kind::atom;
            node->creation = (tok.text == "ad");
            node->mode = mode;
            return node;
        }
        if (tok.text == "gamma" || tok.text == "omega0" || tok.text == "c" ||
            tok.text == "beta") {
            node->kind = ExprNode::Kind::param;
            node->name = tok.text;
            return node;
        }
        throw ParseError("unknown identifier '" + tok.text + "'", tok.line,
                         tok.column);
    }

    Lexer lexer_;
    int n_modes_;
};

}  // namespace

ExprPtr parse(const std::string& text, int n_modes) {
    return Parser(text, n_modes).run();
}

BosonPolynomial lower(const ExprPtr& ast, const DeformationParams& params,
                      int n_modes) {
    switch (ast->kind) {
        case ExprNode::Kind::sum:
            return lower(ast->children[0], params, n_modes) +
                   lower(ast->children[1], params, n_modes);
        case ExprNode::Kind::difference:
            return lower(ast->children[0], params, n_modes) -
                   lower(ast->children[1], params, n_modes);
        case ExprNode::Kind::product:
            return normal_multiply(lower(ast->children[0], params, n_modes),
                                   lower(ast->children[1], params, n_modes));
        case ExprNode::Kind::power: {
            auto result = BosonPolynomial::constant(n_modes, {1.0, 0.0});
            const auto base = lower(ast->children[0], params, n_modes);
            for (unsigned k = 0; k < ast->exponent; ++k)
                result = normal_multiply(result, base);
            return result;
        }
        case ExprNode::Kind::negate:
            return Complex{-1.0, 0.0} *
                   lower(ast->children[0], params, n_modes);
        case ExprNode::Kind::scalar:
            return BosonPolynomial::constant(n_modes, ast->value);
        case ExprNode::Kind::atom:
            return ast->creation
                       ? BosonPolynomial::creation(n_modes, ast->mode)
                       : BosonPolynomial::annihilation(n_modes, ast->mode);
        case ExprNode::Kind::param: {
            double value = 0.0;
            if (ast->name == "gamma") value = params.gamma;
            else if (ast->name == "omega0") value = params.omega0;
            else if (ast->name == "c") value = params.c;
            else value = params.beta;
            return BosonPolynomial::constant(n_modes, {value, 0.0});
        }
    }
    throw std::logic_error("unhandled expression node");
}

BosonPolynomial parse_polynomial(const std::string& text,
                                 const DeformationParams& params,
                                 int n_modes) {
    return lower(parse(text, n_modes), params, n_modes);
}

}  // namespace higgs
