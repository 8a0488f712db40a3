/*
   Copyright 2026 The omegapi Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "omegapi/parser.hpp"

#include <cctype>
#include <string>

#include "omegapi/errors.hpp"

namespace omegapi {
namespace {

class Parser {
   public:
    Parser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

    Term parse_whole_term() {
        Term t = term();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return t;
    }

    Polynomial parse_whole_polynomial(std::optional<std::pair<std::size_t, std::size_t>> shape) {
        skip_space();
        std::size_t save = pos_;
        if (peek_char() == '0') {
            ++pos_;
            skip_space();
            if (pos_ == text_.size()) {
                if (!shape) fail("zero polynomial needs an explicit shape");
                return Polynomial(shape->first, shape->second);
            }
            pos_ = save;
        }
        std::optional<Polynomial> out;
        if (shape) out.emplace(shape->first, shape->second);
        bool first = true;
        while (true) {
            skip_space();
            int sign = 1;
            if (int s = take_sign()) {
                sign = s;
            } else if (!first) {
                break;
            }
            skip_space();
            Rational coef = sign;
            if (std::isdigit(static_cast<unsigned char>(peek_char()))) {
                std::size_t at = pos_;
                Rational c = natural();
                skip_space();
                if (peek_char() == '/') {
                    ++pos_;
                    skip_space();
                    std::size_t dpos = pos_;
                    Rational d = natural();
                    if (d.is_zero()) throw ParseError("zero denominator", dpos);
                    c /= d;
                    skip_space();
                }
                if (peek_char() != '*') throw ParseError("expected '*' after coefficient", at);
                ++pos_;
                coef *= c;
            }
            std::size_t tpos = pos_;
            Term t = term();
            if (!out) out.emplace(t.dom(), t.cod());
            if (t.dom() != out->dom() || t.cod() != out->cod())
                throw ArityError("term at position " + std::to_string(tpos) + " has shape " + std::to_string(t.dom()) +
                                 "->" + std::to_string(t.cod()) + ", polynomial has " + std::to_string(out->dom()) +
                                 "->" + std::to_string(out->cod()));
            out->add_term(t, coef);
            first = false;
        }
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return *out;
    }

   private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek_char() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    // 0 when no sign follows
    int take_sign() {
        if (peek_char() == '+') {
            ++pos_;
            return 1;
        }
        if (peek_char() == '-') {
            ++pos_;
            return -1;
        }
        if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
            pos_ += 3;
            return -1;
        }
        return 0;
    }

    void expect(char c) {
        skip_space();
        if (peek_char() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Rational natural() {
        skip_space();
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek_char()))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Rational::parse(text_.substr(start, pos_ - start));
    }

    std::size_t small_natural() {
        std::size_t at = pos_;
        Rational r = natural();
        if (!r.is_small() || r > Rational(1 << 20)) throw ParseError("object too large", at);
        return static_cast<std::size_t>(r.to_double());
    }

    Term term() {
        std::vector<Term> parts;
        std::vector<std::size_t> positions;
        skip_space();
        positions.push_back(pos_);
        parts.push_back(tens());
        while (true) {
            skip_space();
            if (peek_char() != '.') break;
            ++pos_;
            skip_space();
            positions.push_back(pos_);
            parts.push_back(tens());
        }
        Term acc = parts.back();
        for (std::size_t i = parts.size() - 1; i-- > 0;) {
            if (parts[i].dom() != acc.cod())
                throw ArityError("composition at position " + std::to_string(positions[i]) + ": domain " +
                                 std::to_string(parts[i].dom()) + " does not match codomain " +
                                 std::to_string(acc.cod()));
            acc = compose(parts[i], acc);
        }
        return acc;
    }

    Term tens() {
        std::vector<Term> parts{atom()};
        while (true) {
            skip_space();
            if (peek_char() != '#') break;
            ++pos_;
            parts.push_back(atom());
        }
        return tensor_all(parts);
    }

    Term atom() {
        skip_space();
        char c = peek_char();
        if (c == '(') {
            ++pos_;
            Term t = term();
            expect(')');
            return t;
        }
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
            if (pos_ >= text_.size()) fail("unexpected end of input");
            fail("unexpected '" + std::string(1, c) + "'");
        }
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek_char())) || peek_char() == '_') ++pos_;
        std::string_view ident = text_.substr(start, pos_ - start);
        if (ident == "id") {
            expect('(');
            std::size_t n = small_natural();
            expect(')');
            return Term::identity(n);
        }
        if (ident == "tau" || ident == "tau_inv") {
            expect('(');
            std::size_t m = small_natural();
            expect(',');
            std::size_t n = small_natural();
            expect(')');
            return ident == "tau" ? Term::braid(m, n) : Term::braid_inverse(m, n);
        }
        auto idx = sig_.index_of(ident);
        if (!idx) throw ParseError("unknown generator '" + std::string(ident) + "'", start);
        const GeneratorSpec& g = sig_.generators()[*idx];
        return Term::generator(g.name, g.arity, g.coarity);
    }

    std::string_view text_;
    const Signature& sig_;
    std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text, const Signature& sig) { return Parser(text, sig).parse_whole_term(); }

Polynomial parse_polynomial(std::string_view text, const Signature& sig,
                            std::optional<std::pair<std::size_t, std::size_t>> shape) {
    return Parser(text, sig).parse_whole_polynomial(shape);
}

}  // namespace omegapi
