// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace entqfi {

/// Input violates a documented precondition (non-Hermitian, non-unitary, bad range...).
class ValidationError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Experiment or search configuration is not acceptable.
class ConfigError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Eigensolver did not converge. `input()` holds the offending matrix printed row by row.
class EigenError : public std::runtime_error
{
  public:
    EigenError(const std::string& what, std::string input)
        : std::runtime_error(what), input_(std::move(input))
    {
    }
    const std::string& input() const noexcept { return input_; }

  private:
    std::string input_;
};

/// File output failed; the message carries the path.
class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace entqfi
