// SPDX-License-Identifier: Apache-2.0
//
// rfvlc - outage and BER analysis of mixed RF-VLC relaying links
// Copyright (C) 2026 The rfvlc authors
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

#ifndef RFVLC_ERRORS_HPP
#define RFVLC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rfvlc
{

// Argument outside the mathematical domain of an operation (negative SNR, order 0, ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// A series or iteration hit its term cap before reaching the requested tolerance.
class ConvergenceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed or invalid configuration input. line() is 0 when the error is not tied to a line.
class ConfigError : public std::runtime_error
{
public:
    ConfigError(const std::string &what, std::size_t line = 0, std::string key = {})
        : std::runtime_error(format(what, line, key)), line_(line), key_(std::move(key))
    {
    }

    std::size_t line() const noexcept { return line_; }
    const std::string &key() const noexcept { return key_; }

private:
    static std::string format(const std::string &what, std::size_t line, const std::string &key)
    {
        std::string msg;
        if (line != 0)
            msg += "line " + std::to_string(line) + ": ";
        if (!key.empty())
            msg += "key '" + key + "': ";
        return msg + what;
    }

    std::size_t line_;
    std::string key_;
};

} // namespace rfvlc

#endif
