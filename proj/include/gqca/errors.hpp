// Copyright 2026 The gqca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GQCA_ERRORS_HPP
#define GQCA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gqca {

/// Argument outside the mathematical domain of an operation (rule number,
/// site index, probability outside [0,1], ...).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Problem size exceeds what a dense or statevector routine supports.
class CapacityError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// A statevector whose squared norm drifted away from one.
class NormError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Not enough data to form the requested statistic (e.g. empty counts).
class StatisticsError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Two-qubit operation requested between sites that are not coupled.
class TopologyError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A decomposition or search whose preconditions cannot be met.
class InfeasibleError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class NotImplementedError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Malformed configuration or input file. `path` names the offending field.
class ValidationError : public std::invalid_argument {
   public:
    ValidationError(std::string path, const std::string &message)
        : std::invalid_argument(path + ": " + message), path_(std::move(path)) {
    }
    const std::string &path() const noexcept {
        return path_;
    }

   private:
    std::string path_;
};

}  // namespace gqca

#endif  // GQCA_ERRORS_HPP
