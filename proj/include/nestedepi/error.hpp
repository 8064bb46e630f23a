/*
* Copyright (C) 2026 The nestedepi Authors
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
#ifndef NESTEDEPI_ERROR_HPP
#define NESTEDEPI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nestedepi
{

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A parameter or input value violates its domain.
class ParameterError : public Error
{
public:
    ParameterError(std::string field, const std::string& what)
        : Error(field + ": " + what)
        , m_field(std::move(field))
    {
    }

    const std::string& field() const noexcept
    {
        return m_field;
    }

private:
    std::string m_field;
};

/// Malformed configuration text. line() is 1-based, 0 if unknown.
class ConfigError : public Error
{
public:
    ConfigError(const std::string& what, unsigned long line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what)
        , m_line(line)
    {
    }

    unsigned long line() const noexcept
    {
        return m_line;
    }

private:
    unsigned long m_line;
};

/// A computation failed for numerical reasons.
class NumericalError : public Error
{
public:
    using Error::Error;
};

class IntegrationBudgetError : public NumericalError
{
public:
    using NumericalError::NumericalError;
};

/// Non-finite derivative or collapsed step size at time().
class DivergenceError : public NumericalError
{
public:
    DivergenceError(double time, const std::string& what)
        : NumericalError(what + " at t=" + std::to_string(time))
        , m_time(time)
    {
    }

    double time() const noexcept
    {
        return m_time;
    }

private:
    double m_time;
};

/// The viral load never reaches the detection limit.
class EmptyWindowError : public NumericalError
{
public:
    using NumericalError::NumericalError;
};

/// A trajectory left the feasible region (negative or unbounded states).
class InvariantViolation : public NumericalError
{
public:
    using NumericalError::NumericalError;
};

class IoError : public Error
{
public:
    using Error::Error;
};

} // namespace nestedepi

#endif // NESTEDEPI_ERROR_HPP
