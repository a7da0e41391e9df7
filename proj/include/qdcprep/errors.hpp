// Copyright 2026 The qdcprep Authors
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
#include <string_view>

namespace qdcprep {

/// Base class for every error raised by the library. `what()` is prefixed
/// with the error kind so diagnostics name it directly.
class Error : public std::runtime_error {
  public:
    Error(std::string_view kind, const std::string &message)
        : std::runtime_error(std::string(kind) + ": " + message),
          kind_(kind) {}

    [[nodiscard]] std::string_view kind() const noexcept { return kind_; }

  private:
    std::string_view kind_;
};

#define QDCPREP_DEFINE_ERROR(Name)                                             \
    class Name : public Error {                                                \
      public:                                                                  \
        explicit Name(const std::string &message) : Error(#Name, message) {}   \
    }

/// Vector or tree length is not a power of two, or sizes disagree.
QDCPREP_DEFINE_ERROR(DimensionError);
/// Input vector is not unit norm (and auto-normalization was not requested).
QDCPREP_DEFINE_ERROR(NormalizationError);
/// Malformed input that is neither a size nor a norm problem.
QDCPREP_DEFINE_ERROR(InputError);
/// Invalid gate, qubit index or register manipulation.
QDCPREP_DEFINE_ERROR(IRError);
/// Circuit cannot be expressed in the requested text format.
QDCPREP_DEFINE_ERROR(ExportError);
/// Simulation or oracle would exceed the configured qubit cap.
QDCPREP_DEFINE_ERROR(ResourceError);
/// Probability vector with negative entries or wrong total mass.
QDCPREP_DEFINE_ERROR(DistributionError);

#undef QDCPREP_DEFINE_ERROR

} // namespace qdcprep
