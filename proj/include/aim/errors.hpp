/*
   Copyright 2026 The aim Authors

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

#ifndef AIM_ERRORS_HPP
#define AIM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aim {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (mismatched variables, bad arguments).
class UsageError : public Error {
   public:
    using Error::Error;
};

/// Division by an exact zero.
class ArithmeticError : public Error {
   public:
    using Error::Error;
};

/// A rational function was evaluated at one of its poles. `point` is the
/// textual form of the offending point.
class PoleError : public ArithmeticError {
   public:
    PoleError(const std::string& what, std::string point)
        : ArithmeticError(what + " (at " + point + ")"), point_(std::move(point)) {}
    const std::string& point() const noexcept { return point_; }

   private:
    std::string point_;
};

/// The homogeneous system for a polynomial solution has only the trivial kernel.
class InconsistencyError : public Error {
   public:
    using Error::Error;
};

/// A Casorati (or q-Wronskian) determinant vanished.
class DependenceError : public Error {
   public:
    using Error::Error;
};

/// An infinite product or series failed to meet its tail bound within the factor cap.
class TruncationError : public Error {
   public:
    using Error::Error;
};

/// Half-open byte range [begin, end) into DSL source text.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
    friend bool operator==(const Span&, const Span&) = default;
};

/// Lexing, parsing or lowering failure with a source location.
class SyntaxError : public Error {
   public:
    SyntaxError(const std::string& what, Span span)
        : Error(what + " at [" + std::to_string(span.begin) + "," + std::to_string(span.end) + ")"), span_(span) {}
    Span span() const noexcept { return span_; }

   private:
    Span span_;
};

class LexError : public SyntaxError {
   public:
    using SyntaxError::SyntaxError;
};

class ParseError : public SyntaxError {
   public:
    ParseError(const std::string& what, Span span, std::string expected)
        : SyntaxError(what + (expected.empty() ? "" : ", expected " + expected), span),
          expected_(std::move(expected)) {}
    const std::string& expected() const noexcept { return expected_; }

   private:
    std::string expected_;
};

class LowerError : public SyntaxError {
   public:
    using SyntaxError::SyntaxError;
};

}  // namespace aim

#endif
