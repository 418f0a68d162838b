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

#include <stdexcept>
#include <string>

namespace opalg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class DimBudgetExceeded : public Error {
public:
    using Error::Error;
};

class TagViolation : public Error {
public:
    using Error::Error;
};

class MissingAssignment : public Error {
public:
    using Error::Error;
};

class UntaggedGenerator : public Error {
public:
    using Error::Error;
};

class NotIdempotent : public Error {
public:
    using Error::Error;
};

class NotRankOne : public Error {
public:
    using Error::Error;
};

class NotClosed : public Error {
public:
    using Error::Error;
};

/// Syntactic failure in a scenario document or expression string.
/// `column` is 1-based; 0 means "not applicable".
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::size_t column = 0)
        : Error(what), column(column) {}
    std::size_t column;
};

/// A well-formed document that violates a semantic rule (unknown name,
/// dimension mismatch, budget limits).
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace opalg
