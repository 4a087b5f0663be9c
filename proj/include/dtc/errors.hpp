// Copyright 2026 the dtc-lab authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DTC_ERRORS_HPP
#define DTC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dtc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input/state validation failures. The CLI maps these to exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

struct DimensionMismatch : ValidationError {
    using ValidationError::ValidationError;
};
struct NotHermitian : ValidationError {
    using ValidationError::ValidationError;
};
struct NotUnitTrace : ValidationError {
    using ValidationError::ValidationError;
};
struct NotPSD : ValidationError {
    using ValidationError::ValidationError;
};
struct InvalidPartySet : ValidationError {
    using ValidationError::ValidationError;
};
struct InvalidPermutation : ValidationError {
    using ValidationError::ValidationError;
};
struct OutOfRange : ValidationError {
    using ValidationError::ValidationError;
};
struct InvalidChannel : ValidationError {
    using ValidationError::ValidationError;
};
struct WrongArity : ValidationError {
    using ValidationError::ValidationError;
};
struct ParseError : ValidationError {
    using ValidationError::ValidationError;
};
struct UnknownDemo : ValidationError {
    using ValidationError::ValidationError;
};

// Materializing an operator would exceed the dimension cap. CLI exit code 3.
struct DimensionCapExceeded : Error {
    using Error::Error;
};

struct EigenFailure : Error {
    using Error::Error;
};

// Raised on ill-defined extended-real arithmetic (inf - inf).
struct UndefinedArithmetic : Error {
    using Error::Error;
};

}  // namespace dtc

#endif
