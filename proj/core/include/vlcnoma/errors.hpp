// SPDX-License-Identifier: Apache-2.0
//
// vlcnoma: NOMA link-level toolkit for mobile VLC users with random orientation
// Copyright (C) 2026 The vlcnoma authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace vlcnoma {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Configuration rejected during parsing or validation; `field()` names the offending key.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& message)
        : Error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// The weak user's SINR target cannot be met at any channel gain
/// (share_weak - share_strong * eps_weak <= 0).
class InfeasibleAllocation : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature did not reach its tolerance; carries the best estimate.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& message, double value, double abs_error)
        : Error(message), value_(value), abs_error_(abs_error) {}

    double value() const noexcept { return value_; }
    double abs_error() const noexcept { return abs_error_; }

private:
    double value_;
    double abs_error_;
};

} // namespace vlcnoma
