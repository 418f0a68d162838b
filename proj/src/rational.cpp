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

#include "opalg/rational.hpp"

#include <cctype>
#include <ostream>

#include "opalg/errors.hpp"

namespace opalg {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    std::string_view num = rest;
    std::string_view den;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num = rest.substr(0, slash);
        den = rest.substr(slash + 1);
        if (!all_digits(den)) {
            throw ParseError("malformed rational \"" + std::string(text) + "\"");
        }
    }
    if (!all_digits(num)) {
        throw ParseError("malformed rational \"" + std::string(text) + "\"");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (d == 0) throw ParseError("rational \"" + std::string(text) + "\" has zero denominator");
    mpq_class v(n, d);
    v.canonicalize();
    if (negative) v = -v;
    return from_raw(std::move(v));
}

std::string Rational::str() const {
    return value_.get_str();
}

Rational Rational::abs() const {
    return from_raw(::abs(value_));
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error("division by zero");
    mpq_class v = 1 / value_;
    return from_raw(std::move(v));
}

Rational Rational::from_raw(mpq_class v) {
    Rational r;
    r.value_ = std::move(v);
    return r;
}

Rational Rational::operator-() const {
    return from_raw(-value_);
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace opalg
