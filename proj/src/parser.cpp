#include "apolaris/parser.hpp"

#include <cctype>
#include <vector>

namespace apolaris {

namespace {

enum class Tok { plus, minus, star, caret, slash, lparen, rparen, number, var_x, var_w, imag, end };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string digits;  // number: literal digits; var: index digits
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto scan_digits = [&]() {
        std::string d;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            d += text[i++];
        }
        return d;
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t pos = i;
        switch (c) {
            case '+': out.push_back({Tok::plus, pos, {}}); ++i; continue;
            case '-': out.push_back({Tok::minus, pos, {}}); ++i; continue;
            case '*': out.push_back({Tok::star, pos, {}}); ++i; continue;
            case '^': out.push_back({Tok::caret, pos, {}}); ++i; continue;
            case '/': out.push_back({Tok::slash, pos, {}}); ++i; continue;
            case '(': out.push_back({Tok::lparen, pos, {}}); ++i; continue;
            case ')': out.push_back({Tok::rparen, pos, {}}); ++i; continue;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            out.push_back({Tok::number, pos, scan_digits()});
            continue;
        }
        if (c == 'x' || c == 'w') {
            ++i;
            std::string d = scan_digits();
            if (d.empty()) throw parse_error("variable needs an index", pos);
            out.push_back({c == 'x' ? Tok::var_x : Tok::var_w, pos, std::move(d)});
            continue;
        }
        if (c == 'i') {
            out.push_back({Tok::imag, pos, {}});
            ++i;
            continue;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos);
    }
    out.push_back({Tok::end, text.size(), {}});
    return out;
}

int parse_small_uint(const Token& t, const char* what) {
    if (t.digits.size() > 6) throw parse_error(std::string(what) + " too large", t.pos);
    return std::stoi(t.digits);
}

class Parser {
public:
    Parser(std::vector<Token> tokens, int arity, int base_vars)
        : toks_(std::move(tokens)), arity_(arity), base_(base_vars) {}

    Poly run() {
        Poly::TermMap terms;
        bool negative = accept(Tok::minus);
        if (!negative) accept(Tok::plus);
        parse_term(terms, negative);
        while (!at(Tok::end)) {
            if (accept(Tok::plus)) {
                parse_term(terms, false);
            } else if (accept(Tok::minus)) {
                parse_term(terms, true);
            } else {
                throw parse_error("expected '+' or '-'", peek().pos);
            }
        }
        return Poly::from_map(arity_, std::move(terms));
    }

private:
    const Token& peek() const { return toks_[idx_]; }
    bool at(Tok k) const { return peek().kind == k; }
    bool accept(Tok k) {
        if (!at(k)) return false;
        ++idx_;
        return true;
    }
    const Token& expect(Tok k, const char* what) {
        if (!at(k)) throw parse_error(std::string("expected ") + what, peek().pos);
        return toks_[idx_++];
    }

    bool coeff_start() const {
        Tok k = peek().kind;
        return k == Tok::number || k == Tok::imag || k == Tok::lparen || k == Tok::minus ||
               k == Tok::plus;
    }
    bool var_start() const { return at(Tok::var_x) || at(Tok::var_w); }

    // int ('/' uint)?
    Rational parse_rational() {
        bool neg = accept(Tok::minus);
        if (!neg) accept(Tok::plus);
        const Token& num = expect(Tok::number, "a number");
        Integer n(num.digits);
        if (neg) n = -n;
        Integer d = 1;
        if (accept(Tok::slash)) {
            const Token& den = expect(Tok::number, "a denominator");
            d = Integer(den.digits);
            if (d == 0) throw parse_error("zero denominator", den.pos);
        }
        return make_rational(n, d);
    }

    GaussianRational parse_coeff() {
        if (accept(Tok::lparen)) {
            Rational re = parse_rational();
            Rational im = 0;
            if (at(Tok::plus) || at(Tok::minus)) {
                bool neg = at(Tok::minus);
                ++idx_;
                im = at(Tok::imag) ? Rational(1) : parse_rational();
                if (neg) im = -im;
                expect(Tok::imag, "'i'");
            }
            expect(Tok::rparen, "')'");
            return GaussianRational(std::move(re), std::move(im));
        }
        if (accept(Tok::imag)) return GaussianRational::i();
        Rational r = parse_rational();
        if (accept(Tok::imag)) return GaussianRational(Rational(0), std::move(r));
        return GaussianRational(std::move(r));
    }

    int parse_var_index() {
        if (!var_start()) throw parse_error("expected a variable", peek().pos);
        const Token& t = toks_[idx_++];
        int k = parse_small_uint(t, "variable index");
        if (k < 1) throw parse_error("variable index must be at least 1", t.pos);
        int index = (t.kind == Tok::var_w) ? base_ + k : k;
        if (index > arity_) throw parse_error("variable out of range", t.pos);
        return index;
    }

    // var ('^' uint)? ('*'? var ('^' uint)?)*
    MultiIndex parse_mono() {
        std::vector<int> exps(arity_, 0);
        while (true) {
            int index = parse_var_index();
            int e = 1;
            if (accept(Tok::caret)) {
                const Token& t = expect(Tok::number, "an exponent");
                e = parse_small_uint(t, "exponent");
            }
            exps[index - 1] += e;
            if (var_start()) continue;
            if (at(Tok::star) && (toks_[idx_ + 1].kind == Tok::var_x ||
                                  toks_[idx_ + 1].kind == Tok::var_w)) {
                ++idx_;
                continue;
            }
            break;
        }
        return MultiIndex(std::move(exps));
    }

    void parse_term(Poly::TermMap& terms, bool negative) {
        GaussianRational c(1);
        MultiIndex alpha = MultiIndex::zeros(arity_);
        if (var_start()) {
            alpha = parse_mono();
        } else if (coeff_start()) {
            c = parse_coeff();
            if (accept(Tok::star)) {
                alpha = parse_mono();
            } else if (var_start()) {
                alpha = parse_mono();
            }
        } else {
            throw parse_error("expected a term", peek().pos);
        }
        if (negative) c = -c;
        if (c.is_zero()) return;
        auto [it, inserted] = terms.try_emplace(std::move(alpha), std::move(c));
        if (!inserted) it->second += c;
    }

    std::vector<Token> toks_;
    int arity_;
    int base_;
    std::size_t idx_ = 0;
};

VariableScan scan_tokens(const std::vector<Token>& toks) {
    VariableScan scan;
    for (const auto& t : toks) {
        if (t.kind == Tok::var_x) {
            scan.max_x = std::max(scan.max_x, parse_small_uint(t, "variable index"));
        } else if (t.kind == Tok::var_w) {
            scan.max_w = std::max(scan.max_w, parse_small_uint(t, "variable index"));
        }
    }
    return scan;
}

}  // namespace

Poly parse(std::string_view text, int arity) {
    if (arity < 1) throw std::invalid_argument("arity must be positive");
    std::vector<Token> toks = tokenize(text);
    VariableScan scan = scan_tokens(toks);
    Parser parser(std::move(toks), arity, scan.max_x);
    return parser.run();
}

VariableScan scan_variables(std::string_view text) {
    return scan_tokens(tokenize(text));
}

}  // namespace apolaris
