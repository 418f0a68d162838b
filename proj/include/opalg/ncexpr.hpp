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

#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "opalg/matrix.hpp"
#include "opalg/rational.hpp"

namespace opalg {

/// The update operator's name is reserved: it may appear in expressions but
/// never carries the commutation tag.
inline constexpr const char* kUpdateName = "U";
/// Conventional name of the discrimination operator / bracket operand.
inline constexpr const char* kDiscriminationName = "D";

/// A named symbol in a noncommutative expression. `commutes_with_update`
/// is a promise checked against matrices at evaluation time.
struct Generator {
    std::string name;
    bool commutes_with_update = false;

    friend bool operator==(const Generator& a, const Generator& b) = default;
};

/// Immutable formal expression in noncommuting generators over the
/// rationals. Copies are cheap (shared subtrees).
class NcExpr {
public:
    struct Const {
        Rational value; // value times the identity
    };
    struct Gen {
        Generator generator;
    };
    struct Sum {
        std::vector<NcExpr> terms; // at least 1
    };
    struct ScalarMul {
        Rational scalar;
        std::vector<NcExpr> operand; // exactly 1
    };
    struct Product {
        std::vector<NcExpr> factors; // at least 1
    };
    struct Power {
        std::vector<NcExpr> base; // exactly 1
        unsigned exponent;
    };
    using Node = std::variant<Const, Gen, Sum, ScalarMul, Product, Power>;

    static NcExpr constant(Rational value);
    static NcExpr gen(Generator generator);
    static NcExpr sum(std::vector<NcExpr> terms);
    static NcExpr scalar_mul(Rational scalar, NcExpr operand);
    static NcExpr product(std::vector<NcExpr> factors);
    static NcExpr power(NcExpr base, unsigned exponent);

    const Node& node() const { return *node_; }

private:
    explicit NcExpr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
    std::shared_ptr<const Node> node_;
};

/// A word is a (possibly empty) sequence of generator names; the empty
/// word is the identity.
using Word = std::vector<std::string>;

/// Length first, then lexicographic.
bool word_lex_less(const Word& a, const Word& b);

struct Monomial {
    Rational coeff;
    Word word;
};

/// Sorted sum of scalar-weighted words: words strictly increasing in
/// length-lex order, coefficients nonzero. `generators` records the tag of
/// every generator that appeared; conflicting tags for one name are
/// rejected.
struct NormalForm {
    std::vector<Monomial> monomials;
    std::map<std::string, Generator> generators;
};

NormalForm normal_form(const NcExpr& e);

/// Canonical expression tree for a normal form (the empty sum renders as
/// the constant 0).
NcExpr normalized_expr(const NormalForm& nf);

std::string to_string(const NcExpr& e);

/// One term of a derivation expansion: left * [U, d] * right.
struct ExpansionTerm {
    NcExpr left;
    NcExpr right;
};

struct ExpansionForm {
    Generator bracket_operand;
    std::vector<ExpansionTerm> terms;
};

std::string to_string(const ExpansionForm& f);

/// Rewrites [U, e] as a sum of left * [U, d] * right terms by splitting
/// each normal-form word at each occurrence of d. Every other generator
/// must carry the commutation tag (UntaggedGenerator otherwise); the term
/// list is empty iff d does not occur in the normal form of e.
ExpansionForm leibniz_expand(const NcExpr& e, const Generator& d);

using Assignment = std::map<std::string, Matrix>;

/// Evaluates under an assignment of dim x dim matrices. Every generator
/// needs an assignment (MissingAssignment), every matrix must be square of
/// the given dimension (ShapeMismatch), and every tagged generator's matrix
/// must commute with the one assigned to "U" (TagViolation).
Matrix evaluate(const NcExpr& e, const Assignment& assignment, std::size_t dim);

/// Sum of left * [U, d] * right over the expansion's terms; the empty
/// expansion evaluates to zero.
Matrix evaluate_expansion(const ExpansionForm& f, const Assignment& assignment, std::size_t dim);

/// Parses the expression grammar
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := rational ['*' factors] | rational factors | factors
///   factors:= factor (['*'] factor)*
///   factor := primary ('^' nat)*
///   primary:= IDENT | '(' expr ')'
/// against a table resolving identifiers to generators. Unknown names are
/// a ValidationError; syntax failures are ParseError with a 1-based column.
NcExpr parse_expr(std::string_view text, const std::map<std::string, Generator>& table);

} // namespace opalg
