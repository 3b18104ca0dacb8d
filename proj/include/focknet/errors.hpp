/*
 * Copyright 2026 The focknet authors
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

namespace focknet {

/// Base class of all focknet exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A size guard was exceeded (dimension or enumeration cap). Callers that
/// expose guards as knobs map these to a dedicated exit status.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// The inputs themselves are malformed (mismatched shapes, bad values).
class InvalidInput : public Error {
public:
    using Error::Error;
};

class DimensionTooLarge : public CapExceeded {
public:
    using CapExceeded::CapExceeded;
};

class EnumerationTooLarge : public CapExceeded {
public:
    using CapExceeded::CapExceeded;
};

class DimensionMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class MultiplicityMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class PatternMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class IndexOutOfRange : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class PhotonDeficit : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotNormalized : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotUnitary : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class OutOfRange : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

}  // namespace focknet
