/*
 * Copyright 2026 the gppdf developers
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

#pragma once

#include <stdexcept>
#include <string>

namespace gppdf {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the caller's input was violated.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// An algorithm failed for numerical reasons (not a caller bug).
class NumericalError : public Error {
public:
    using Error::Error;
};

/// File or stream I/O failed.
class IoError : public Error {
public:
    using Error::Error;
};

// -- input validation ------------------------------------------------------

class LengthMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NegativeInput : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class AllZero : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class DegenerateSamples : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class UnsupportedNu : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NonPositiveParam : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class OneClassOnly : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// -- numerical failures ----------------------------------------------------

class LeavesHemisphere : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class AntipodalPair : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NotPSD : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NoConvergence : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class LineSearchFailed : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NonFiniteGradient : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class AllRejected : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace gppdf
