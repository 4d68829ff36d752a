#include "indexform/poly_parser.hpp"

#include <cctype>

namespace indexform {

namespace {

// Recursive-descent over: expr = ['-'|'+'] term (('+'|'-') term)*
//                         term = factor ('*' factor)*
//                         factor = atom ['^' natural]
//                         atom = rational | variable | '(' expr ')'
class Parser {
  public:
    Parser(const std::string &text, RingPtr ring, int line)
        : text_(text), ring_(std::move(ring)), line_(line) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        skip_ws();
        bool neg = false;
        if (consume('-'))
            neg = true;
        else
            consume('+');
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (consume('-'))
                acc -= term();
            else if (consume('+'))
                acc += term();
            else
                break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (consume('*')) acc *= factor();
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (consume('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == start) fail("expected exponent");
            unsigned long e = std::stoul(text_.substr(start, pos_ - start));
            if (e > 512) fail("exponent too large");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!consume(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::islower(static_cast<unsigned char>(c))) return variable();
        fail(std::string("unexpected character '") + c + "'");
    }

    Poly number() {
        std::string digits = digit_run("integer");
        skip_ws();
        // A '/' directly after an integer literal is a rational literal.
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::string den = digit_run("denominator");
            if (mpz_class(den) == 0) fail("zero denominator");
            return Poly::constant(ring_, Rat::parse(digits + "/" + den));
        }
        return Poly::constant(ring_, Rat::parse(digits));
    }

    std::string digit_run(const char *what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail(std::string("expected ") + what);
        return text_.substr(start, pos_ - start);
    }

    Poly variable() {
        std::size_t start = pos_;
        ++pos_;
        while (pos_ < text_.size() &&
               (std::islower(static_cast<unsigned char>(text_[pos_])) ||
                std::isdigit(static_cast<unsigned char>(text_[pos_]))))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        std::size_t idx = ring_->find(name);
        if (idx == PolyRing::npos) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        return Poly::variable(ring_, idx);
    }

    const std::string &text_;
    RingPtr ring_;
    int line_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string &text, const RingPtr &ring, int line) {
    return Parser(text, ring, line).run();
}

}  // namespace indexform
