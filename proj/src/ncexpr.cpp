/*
 * Copyright 2026 The opalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "opalg/ncexpr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

#include "opalg/errors.hpp"

namespace opalg {

namespace {

constexpr unsigned kMaxExponent = 1024;

} // namespace

NcExpr NcExpr::constant(Rational value) {
    return NcExpr(Const{std::move(value)});
}

NcExpr NcExpr::gen(Generator generator) {
    if (generator.name.empty()) throw Error("generator with empty name");
    return NcExpr(Gen{std::move(generator)});
}

NcExpr NcExpr::sum(std::vector<NcExpr> terms) {
    if (terms.empty()) throw Error("sum of no terms");
    if (terms.size() == 1) return std::move(terms[0]);
    return NcExpr(Sum{std::move(terms)});
}

NcExpr NcExpr::scalar_mul(Rational scalar, NcExpr operand) {
    std::vector<NcExpr> op;
    op.push_back(std::move(operand));
    return NcExpr(ScalarMul{std::move(scalar), std::move(op)});
}

NcExpr NcExpr::product(std::vector<NcExpr> factors) {
    if (factors.empty()) throw Error("product of no factors");
    if (factors.size() == 1) return std::move(factors[0]);
    return NcExpr(Product{std::move(factors)});
}

NcExpr NcExpr::power(NcExpr base, unsigned exponent) {
    if (exponent > kMaxExponent) {
        throw ValidationError("exponent " + std::to_string(exponent) + " exceeds the limit of " +
                              std::to_string(kMaxExponent));
    }
    std::vector<NcExpr> b;
    b.push_back(std::move(base));
    return NcExpr(Power{std::move(b), exponent});
}

bool word_lex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

namespace {

void register_generator(NormalForm& nf, const Generator& g) {
    auto [it, inserted] = nf.generators.emplace(g.name, g);
    if (!inserted && it->second.commutes_with_update != g.commutes_with_update) {
        throw ValidationError("generator \"" + g.name + "\" appears with conflicting tags");
    }
}

std::vector<Monomial> merge_monomials(std::vector<Monomial> ms) {
    std::sort(ms.begin(), ms.end(),
              [](const Monomial& a, const Monomial& b) { return word_lex_less(a.word, b.word); });
    std::vector<Monomial> out;
    for (Monomial& m : ms) {
        if (!out.empty() && out.back().word == m.word) {
            out.back().coeff += m.coeff;
        } else {
            out.push_back(std::move(m));
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Monomial& m) { return m.coeff.is_zero(); }),
              out.end());
    return out;
}

std::vector<Monomial> product_of(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
    std::vector<Monomial> out;
    out.reserve(a.size() * b.size());
    for (const Monomial& x : a) {
        for (const Monomial& y : b) {
            Word w = x.word;
            w.insert(w.end(), y.word.begin(), y.word.end());
            out.push_back(Monomial{x.coeff * y.coeff, std::move(w)});
        }
    }
    return merge_monomials(std::move(out));
}

std::vector<Monomial> collect(const NcExpr& e, NormalForm& nf) {
    return std::visit(
        [&nf](const auto& n) -> std::vector<Monomial> {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, NcExpr::Const>) {
                if (n.value.is_zero()) return {};
                return {Monomial{n.value, {}}};
            } else if constexpr (std::is_same_v<T, NcExpr::Gen>) {
                register_generator(nf, n.generator);
                return {Monomial{Rational(1), {n.generator.name}}};
            } else if constexpr (std::is_same_v<T, NcExpr::Sum>) {
                std::vector<Monomial> out;
                for (const NcExpr& t : n.terms) {
                    auto part = collect(t, nf);
                    out.insert(out.end(), part.begin(), part.end());
                }
                return merge_monomials(std::move(out));
            } else if constexpr (std::is_same_v<T, NcExpr::ScalarMul>) {
                auto part = collect(n.operand[0], nf);
                if (n.scalar.is_zero()) return {};
                for (Monomial& m : part) m.coeff *= n.scalar;
                return part;
            } else if constexpr (std::is_same_v<T, NcExpr::Product>) {
                std::vector<Monomial> acc{Monomial{Rational(1), {}}};
                for (const NcExpr& f : n.factors) {
                    acc = product_of(acc, collect(f, nf));
                }
                return acc;
            } else {
                static_assert(std::is_same_v<T, NcExpr::Power>);
                std::vector<Monomial> base = collect(n.base[0], nf);
                std::vector<Monomial> acc{Monomial{Rational(1), {}}};
                for (unsigned i = 0; i < n.exponent; ++i) acc = product_of(acc, base);
                return acc;
            }
        },
        e.node());
}

} // namespace

NormalForm normal_form(const NcExpr& e) {
    NormalForm nf;
    nf.monomials = collect(e, nf);
    return nf;
}

namespace {

NcExpr word_expr(const Rational& coeff, const Word& word,
                 const std::map<std::string, Generator>& table) {
    if (word.empty()) return NcExpr::constant(coeff);
    std::vector<NcExpr> factors;
    std::size_t i = 0;
    while (i < word.size()) {
        std::size_t run = 1;
        while (i + run < word.size() && word[i + run] == word[i]) ++run;
        auto it = table.find(word[i]);
        Generator g = it != table.end() ? it->second : Generator{word[i], false};
        NcExpr base = NcExpr::gen(std::move(g));
        factors.push_back(run == 1 ? std::move(base)
                                   : NcExpr::power(std::move(base), static_cast<unsigned>(run)));
        i += run;
    }
    NcExpr prod = NcExpr::product(std::move(factors));
    if (coeff.is_one()) return prod;
    return NcExpr::scalar_mul(coeff, std::move(prod));
}

} // namespace

NcExpr normalized_expr(const NormalForm& nf) {
    if (nf.monomials.empty()) return NcExpr::constant(Rational(0));
    std::vector<NcExpr> terms;
    for (const Monomial& m : nf.monomials) {
        terms.push_back(word_expr(m.coeff, m.word, nf.generators));
    }
    return NcExpr::sum(std::move(terms));
}

namespace {

enum class Ctx { Top, Factor };

void render(const NcExpr& e, std::ostream& os, Ctx ctx);

// True when the rendering of e begins with a minus sign.
bool leading_negative(const NcExpr& e) {
    return std::visit(
        [](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, NcExpr::Const>) {
                return n.value.sign() < 0;
            } else if constexpr (std::is_same_v<T, NcExpr::ScalarMul>) {
                return n.scalar.sign() < 0;
            } else {
                return false;
            }
        },
        e.node());
}

NcExpr negated(const NcExpr& e) {
    return std::visit(
        [&e](const auto& n) -> NcExpr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, NcExpr::Const>) {
                return NcExpr::constant(-n.value);
            } else if constexpr (std::is_same_v<T, NcExpr::ScalarMul>) {
                if (n.scalar == Rational(-1)) return n.operand[0];
                return NcExpr::scalar_mul(-n.scalar, n.operand[0]);
            } else {
                return NcExpr::scalar_mul(Rational(-1), e);
            }
        },
        e.node());
}

void render(const NcExpr& e, std::ostream& os, Ctx ctx) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, NcExpr::Const>) {
                os << n.value;
            } else if constexpr (std::is_same_v<T, NcExpr::Gen>) {
                os << n.generator.name;
            } else if constexpr (std::is_same_v<T, NcExpr::Sum>) {
                if (ctx == Ctx::Factor) os << "(";
                for (std::size_t i = 0; i < n.terms.size(); ++i) {
                    if (i == 0) {
                        render(n.terms[i], os, Ctx::Top);
                    } else if (leading_negative(n.terms[i])) {
                        os << " - ";
                        render(negated(n.terms[i]), os, Ctx::Top);
                    } else {
                        os << " + ";
                        render(n.terms[i], os, Ctx::Top);
                    }
                }
                if (ctx == Ctx::Factor) os << ")";
            } else if constexpr (std::is_same_v<T, NcExpr::ScalarMul>) {
                if (ctx == Ctx::Factor) os << "(";
                os << n.scalar << "*";
                render(n.operand[0], os, Ctx::Factor);
                if (ctx == Ctx::Factor) os << ")";
            } else if constexpr (std::is_same_v<T, NcExpr::Product>) {
                for (std::size_t i = 0; i < n.factors.size(); ++i) {
                    if (i) os << "*";
                    render(n.factors[i], os, Ctx::Factor);
                }
            } else {
                static_assert(std::is_same_v<T, NcExpr::Power>);
                const NcExpr& base = n.base[0];
                bool bare = std::holds_alternative<NcExpr::Gen>(base.node());
                if (!bare) os << "(";
                render(base, os, Ctx::Factor);
                if (!bare) os << ")";
                os << "^" << n.exponent;
            }
        },
        e.node());
}

} // namespace

std::string to_string(const NcExpr& e) {
    std::ostringstream os;
    render(e, os, Ctx::Top);
    return os.str();
}

std::string to_string(const ExpansionForm& f) {
    if (f.terms.empty()) return "0";
    std::ostringstream os;
    const std::string bracket = "[" + std::string(kUpdateName) + "," + f.bracket_operand.name + "]";
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        if (i) os << " + ";
        render(f.terms[i].left, os, Ctx::Factor);
        os << "*" << bracket << "*";
        render(f.terms[i].right, os, Ctx::Factor);
    }
    return os.str();
}

ExpansionForm leibniz_expand(const NcExpr& e, const Generator& d) {
    if (d.commutes_with_update) {
        throw ValidationError("bracket operand \"" + d.name + "\" must not carry the tag");
    }
    NormalForm nf = normal_form(e);
    for (const auto& [name, g] : nf.generators) {
        if (name == d.name) {
            if (g.commutes_with_update) {
                throw ValidationError("bracket operand \"" + d.name +
                                      "\" appears tagged inside the expression");
            }
            continue;
        }
        if (!g.commutes_with_update) {
            throw UntaggedGenerator("generator \"" + name +
                                    "\" is neither the bracket operand nor tagged");
        }
    }
    ExpansionForm out{d, {}};
    for (const Monomial& m : nf.monomials) {
        for (std::size_t pos = 0; pos < m.word.size(); ++pos) {
            if (m.word[pos] != d.name) continue;
            Word left(m.word.begin(), m.word.begin() + static_cast<std::ptrdiff_t>(pos));
            Word right(m.word.begin() + static_cast<std::ptrdiff_t>(pos) + 1, m.word.end());
            out.terms.push_back(ExpansionTerm{word_expr(m.coeff, left, nf.generators),
                                              word_expr(Rational(1), right, nf.generators)});
        }
    }
    return out;
}

namespace {

const Matrix& assigned(const Assignment& assignment, const std::string& name, std::size_t dim) {
    auto it = assignment.find(name);
    if (it == assignment.end()) {
        throw MissingAssignment("no assignment for generator \"" + name + "\"");
    }
    if (it->second.rows() != dim || it->second.cols() != dim) {
        throw ShapeMismatch("assignment for \"" + name + "\" is " +
                            std::to_string(it->second.rows()) + "x" +
                            std::to_string(it->second.cols()) + ", expected " +
                            std::to_string(dim) + "x" + std::to_string(dim));
    }
    return it->second;
}

void collect_generators(const NcExpr& e, std::map<std::string, Generator>& gens) {
    std::visit(
        [&gens](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, NcExpr::Gen>) {
                auto [it, inserted] = gens.emplace(n.generator.name, n.generator);
                if (!inserted && it->second.commutes_with_update != n.generator.commutes_with_update) {
                    throw ValidationError("generator \"" + n.generator.name +
                                          "\" appears with conflicting tags");
                }
            } else if constexpr (std::is_same_v<T, NcExpr::Sum>) {
                for (const NcExpr& t : n.terms) collect_generators(t, gens);
            } else if constexpr (std::is_same_v<T, NcExpr::ScalarMul>) {
                collect_generators(n.operand[0], gens);
            } else if constexpr (std::is_same_v<T, NcExpr::Product>) {
                for (const NcExpr& f : n.factors) collect_generators(f, gens);
            } else if constexpr (std::is_same_v<T, NcExpr::Power>) {
                collect_generators(n.base[0], gens);
            }
        },
        e.node());
}

void check_tags(const std::map<std::string, Generator>& gens, const Assignment& assignment,
                std::size_t dim) {
    for (const auto& [name, g] : gens) {
        const Matrix& m = assigned(assignment, name, dim);
        if (!g.commutes_with_update) continue;
        const Matrix& u = assigned(assignment, kUpdateName, dim);
        if (!commutator(u, m).is_zero()) {
            throw TagViolation("generator \"" + name + "\" is tagged but [" + kUpdateName + ", " +
                               name + "] != 0");
        }
    }
}

Matrix eval_rec(const NcExpr& e, const Assignment& assignment, std::size_t dim) {
    return std::visit(
        [&](const auto& n) -> Matrix {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, NcExpr::Const>) {
                return n.value * Matrix::identity(dim);
            } else if constexpr (std::is_same_v<T, NcExpr::Gen>) {
                return assigned(assignment, n.generator.name, dim);
            } else if constexpr (std::is_same_v<T, NcExpr::Sum>) {
                Matrix acc = Matrix::zero(dim, dim);
                for (const NcExpr& t : n.terms) acc = acc + eval_rec(t, assignment, dim);
                return acc;
            } else if constexpr (std::is_same_v<T, NcExpr::ScalarMul>) {
                return n.scalar * eval_rec(n.operand[0], assignment, dim);
            } else if constexpr (std::is_same_v<T, NcExpr::Product>) {
                Matrix acc = Matrix::identity(dim);
                for (const NcExpr& f : n.factors) acc = acc * eval_rec(f, assignment, dim);
                return acc;
            } else {
                static_assert(std::is_same_v<T, NcExpr::Power>);
                Matrix base = eval_rec(n.base[0], assignment, dim);
                Matrix acc = Matrix::identity(dim);
                for (unsigned i = 0; i < n.exponent; ++i) acc = acc * base;
                return acc;
            }
        },
        e.node());
}

} // namespace

Matrix evaluate(const NcExpr& e, const Assignment& assignment, std::size_t dim) {
    if (dim == 0) throw ShapeMismatch("evaluation dimension must be at least 1");
    std::map<std::string, Generator> gens;
    collect_generators(e, gens);
    check_tags(gens, assignment, dim);
    return eval_rec(e, assignment, dim);
}

Matrix evaluate_expansion(const ExpansionForm& f, const Assignment& assignment, std::size_t dim) {
    if (dim == 0) throw ShapeMismatch("evaluation dimension must be at least 1");
    Matrix acc = Matrix::zero(dim, dim);
    if (f.terms.empty()) return acc;
    const Matrix& u = assigned(assignment, kUpdateName, dim);
    const Matrix& d = assigned(assignment, f.bracket_operand.name, dim);
    Matrix bracket = commutator(u, d);
    for (const ExpansionTerm& t : f.terms) {
        Matrix left = evaluate(t.left, assignment, dim);
        Matrix right = evaluate(t.right, assignment, dim);
        acc = acc + left * bracket * right;
    }
    return acc;
}

namespace {

struct Token {
    enum class Kind { Ident, Number, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t column; // 1-based
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            std::size_t col = pos_ + 1;
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos_;
                while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                               text_[pos_] == '_' || text_[pos_] == '\'')) {
                    ++pos_;
                }
                out.push_back({Token::Kind::Ident, std::string(text_.substr(start, pos_ - start)), col});
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    ++pos_;
                }
                out.push_back({Token::Kind::Number, std::string(text_.substr(start, pos_ - start)), col});
                continue;
            }
            Token::Kind kind;
            switch (c) {
                case '+': kind = Token::Kind::Plus; break;
                case '-': kind = Token::Kind::Minus; break;
                case '*': kind = Token::Kind::Star; break;
                case '^': kind = Token::Kind::Caret; break;
                case '/': kind = Token::Kind::Slash; break;
                case '(': kind = Token::Kind::LParen; break;
                case ')': kind = Token::Kind::RParen; break;
                default:
                    throw ParseError("unexpected character '" + std::string(1, c) + "' at column " +
                                     std::to_string(col), col);
            }
            out.push_back({kind, std::string(1, c), col});
            ++pos_;
        }
        out.push_back({Token::Kind::End, "", text_.size() + 1});
        return out;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, const std::map<std::string, Generator>& table)
        : tokens_(std::move(tokens)), table_(table) {}

    NcExpr run() {
        NcExpr e = parse_sum();
        expect(Token::Kind::End, "end of expression");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(Token::Kind k, const char* what) {
        if (!accept(k)) {
            throw ParseError("expected " + std::string(what) + " at column " +
                             std::to_string(peek().column), peek().column);
        }
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at column " + std::to_string(peek().column), peek().column);
    }

    bool starts_factor() const {
        return peek().kind == Token::Kind::Ident || peek().kind == Token::Kind::LParen;
    }

    NcExpr parse_sum() {
        bool negate = accept(Token::Kind::Minus);
        NcExpr first = parse_term();
        if (negate) first = NcExpr::scalar_mul(Rational(-1), std::move(first));
        std::vector<NcExpr> terms;
        terms.push_back(std::move(first));
        while (true) {
            if (accept(Token::Kind::Plus)) {
                terms.push_back(parse_term());
            } else if (accept(Token::Kind::Minus)) {
                terms.push_back(NcExpr::scalar_mul(Rational(-1), parse_term()));
            } else {
                break;
            }
        }
        return NcExpr::sum(std::move(terms));
    }

    NcExpr parse_term() {
        if (peek().kind == Token::Kind::Number) {
            Rational c = parse_rational();
            if (accept(Token::Kind::Star) || starts_factor()) {
                return NcExpr::scalar_mul(std::move(c), parse_factors());
            }
            return NcExpr::constant(std::move(c));
        }
        if (!starts_factor()) fail("expected a term");
        return parse_factors();
    }

    Rational parse_rational() {
        const Token& num = advance();
        if (accept(Token::Kind::Slash)) {
            if (peek().kind != Token::Kind::Number) fail("expected a denominator");
            const Token& den = advance();
            return Rational::parse(num.text + "/" + den.text);
        }
        return Rational::parse(num.text);
    }

    NcExpr parse_factors() {
        std::vector<NcExpr> factors;
        factors.push_back(parse_factor());
        while (true) {
            if (accept(Token::Kind::Star)) {
                if (!starts_factor()) fail("expected a factor after '*'");
                factors.push_back(parse_factor());
            } else if (starts_factor()) {
                factors.push_back(parse_factor());
            } else {
                break;
            }
        }
        return NcExpr::product(std::move(factors));
    }

    NcExpr parse_factor() {
        NcExpr base = parse_primary();
        while (accept(Token::Kind::Caret)) {
            if (peek().kind != Token::Kind::Number) fail("expected an integer exponent");
            const Token& exp = advance();
            unsigned long value = 0;
            try {
                value = std::stoul(exp.text);
            } catch (const std::exception&) {
                throw ParseError("exponent out of range at column " + std::to_string(exp.column),
                                 exp.column);
            }
            if (value > kMaxExponent) {
                throw ValidationError("exponent " + exp.text + " exceeds the limit of " +
                                      std::to_string(kMaxExponent));
            }
            base = NcExpr::power(std::move(base), static_cast<unsigned>(value));
        }
        return base;
    }

    NcExpr parse_primary() {
        if (peek().kind == Token::Kind::Ident) {
            const Token& t = advance();
            auto it = table_.find(t.text);
            if (it == table_.end()) {
                throw ValidationError("unknown name \"" + t.text + "\" in expression");
            }
            return NcExpr::gen(it->second);
        }
        if (accept(Token::Kind::LParen)) {
            NcExpr inner = parse_sum();
            expect(Token::Kind::RParen, "')'");
            return inner;
        }
        fail("expected an identifier or '('");
    }

    std::vector<Token> tokens_;
    const std::map<std::string, Generator>& table_;
    std::size_t pos_ = 0;
};

} // namespace

NcExpr parse_expr(std::string_view text, const std::map<std::string, Generator>& table) {
    Lexer lexer(text);
    Parser parser(lexer.run(), table);
    return parser.run();
}

} // namespace opalg
