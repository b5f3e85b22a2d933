// Copyright 2026 The czw Authors
//
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

namespace czw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A qubit-index set or string domain does not meet an operation's precondition.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Amplitude vector length does not match 2^|carrier|.
class ShapeError : public Error {
public:
  using Error::Error;
};

class NormalizationError : public Error {
public:
  using Error::Error;
};

/// Phase too close to 1 for the gate to be a G_eta gate.
class InvalidPhaseError : public Error {
public:
  using Error::Error;
};

class NotSeparableError : public Error {
public:
  using Error::Error;
};

class ArgumentError : public Error {
public:
  using Error::Error;
};

/// A step that the entanglement theorem guarantees could not be carried out.
/// Signals a numerics or tolerance problem, never a disproof.
class InternalContradiction : public Error {
public:
  using Error::Error;
};

class DegenerateFamilyError : public Error {
public:
  using Error::Error;
};

} // namespace czw
