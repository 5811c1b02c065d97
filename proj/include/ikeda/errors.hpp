// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace ikeda {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class InexactDivision : public Error {
public:
    explicit InexactDivision(const std::string& what = "inexact polynomial division")
        : Error(what) {}
};

class ZeroAtNegativeExponent : public Error {
public:
    ZeroAtNegativeExponent() : Error("evaluation at zero of a polynomial with negative exponents") {}
};

/// A denominator 1 - x_i/x_j vanished at the evaluation point.
class PoleAtPoint : public Error {
public:
    explicit PoleAtPoint(const std::string& what) : Error(what) {}
};

class ZeroCoordinate : public Error {
public:
    explicit ZeroCoordinate(const std::string& what) : Error(what) {}
};

class OracleNotPolynomial : public Error {
public:
    explicit OracleNotPolynomial(const std::string& what) : Error(what) {}
};

class NonIntegerCoefficient : public Error {
public:
    explicit NonIntegerCoefficient(const std::string& what) : Error(what) {}
};

class CheckFailed : public Error {
public:
    explicit CheckFailed(const std::string& what) : Error(what) {}
};

class BoundViolated : public Error {
public:
    explicit BoundViolated(const std::string& what) : Error(what) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

class PositivityViolated : public Error {
public:
    explicit PositivityViolated(const std::string& what) : Error(what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

/// Malformed input file; `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace ikeda
