// Copyright 2026 The qstab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSTAB_ERRORS_HPP
#define QSTAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qstab {

/// Base class for all qstab errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
    using Error::Error;
};

struct ReducibleModulus : Error {
    using Error::Error;
};

struct DegreeMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct ParityViolation : Error {
    using Error::Error;
};

struct SearchExhausted : Error {
    using Error::Error;
};

/// Raised when a stabilizer construction is attempted on a code that is not
/// selforthogonal under the trace-symplectic form. Carries the offending
/// basis pair and the value of their pairing.
struct NotSelforthogonal : Error {
    NotSelforthogonal(std::size_t i, std::size_t j, std::uint64_t pairing_value)
        : Error("code is not trace-symplectic selforthogonal: basis pair (" + std::to_string(i) +
                "," + std::to_string(j) + ") pairs to " + std::to_string(pairing_value)),
          witness_i(i),
          witness_j(j),
          value(pairing_value) {}
    std::size_t witness_i;
    std::size_t witness_j;
    std::uint64_t value;
};

struct InconsistentCharacter : Error {
    using Error::Error;
};

struct DimensionBudget : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace qstab

#endif  // QSTAB_ERRORS_HPP
