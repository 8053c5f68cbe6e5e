// Copyright 2026 The telesim Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace telesim {

/// A matrix or vector does not describe a physical qubit / two-qubit state.
class InvalidStateError : public std::invalid_argument {
   public:
    explicit InvalidStateError(const std::string &what) : std::invalid_argument(what) {}
};

/// A scalar parameter (damping probability, index, sample count) is out of range.
class ParameterError : public std::invalid_argument {
   public:
    explicit ParameterError(const std::string &what) : std::invalid_argument(what) {}
};

/// The input is well formed but outside the domain of the operation.
class DomainError : public std::domain_error {
   public:
    explicit DomainError(const std::string &what) : std::domain_error(what) {}
};

/// Diagonal parameters lie outside the Pauli tetrahedron.
class NotPauliChannelError : public DomainError {
   public:
    explicit NotPauliChannelError(const std::string &what) : DomainError(what) {}
};

/// The constraint system has no feasible point.
class InfeasibleError : public DomainError {
   public:
    explicit InfeasibleError(const std::string &what) : DomainError(what) {}
};

}  // namespace telesim
