// Copyright 2026 The reason_eval Authors
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

#ifndef REASON_EVAL__ERRORS_HPP_
#define REASON_EVAL__ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reason_eval
{

/// Base class of every error raised by the engine.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates a precondition or type invariant.
class InvalidArgument : public Error
{
public:
  using Error::Error;
};

/// Accumulated state handed back by the caller is inconsistent (e.g. a negative clock).
class InvalidState : public Error
{
public:
  using Error::Error;
};

/// Environment and trajectory are not temporally aligned.
class AlignmentError : public InvalidArgument
{
public:
  AlignmentError(const std::string & what, std::size_t agent_index, std::size_t step_index)
  : InvalidArgument(what), agent_index_(agent_index), step_index_(step_index)
  {
  }

  std::size_t agent_index() const noexcept { return agent_index_; }
  std::size_t step_index() const noexcept { return step_index_; }

private:
  std::size_t agent_index_;
  std::size_t step_index_;
};

/// Scenario or run configuration cannot be realized.
class ConfigError : public InvalidArgument
{
public:
  using InvalidArgument::InvalidArgument;
};

/// Input text could not be parsed.
class ParseError : public InvalidArgument
{
public:
  using InvalidArgument::InvalidArgument;
};

/// Filesystem failure (missing file, unwritable directory).
class IoError : public Error
{
public:
  using Error::Error;
};

}  // namespace reason_eval

#endif  // REASON_EVAL__ERRORS_HPP_
