/*
 * Copyright 2026 The effinfo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EFFINFO_ERRORS_HPP
#define EFFINFO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace effinfo {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input violates a type invariant (stochasticity, distinctness,
/// alphabet agreement, unknown symbol, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// The requested quantity is not defined for these arguments, e.g. the
/// actual repertoire of an output the system never produces.
class UndefinedQuantityError : public Error {
public:
    using Error::Error;
};

/// KL divergence D[p||q] with p(x) > 0 and q(x) = 0.
class SupportError : public UndefinedQuantityError {
public:
    SupportError(const std::string& message, std::string symbol)
        : UndefinedQuantityError(message), symbol_(std::move(symbol)) {}

    const std::string& symbol() const noexcept { return symbol_; }

private:
    std::string symbol_;
};

/// An exhaustive enumeration would exceed the configured size cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

}  // namespace effinfo

#endif  // EFFINFO_ERRORS_HPP
