// Copyright 2026 The qsta authors
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

#ifndef QSTA_ERRORS_HPP
#define QSTA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsta {

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct InvalidNoiseModel : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Followed-eigenstate tracking lost the branch (adjacent-step overlap < 0.9).
struct BranchLost : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Eigenframe undefined at Omega = Delta = 0; the caller picks a limit frame.
struct DegenerateFrame : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& key, const std::string& what)
        : std::runtime_error("config key '" + key + "': " + what), offending_key(key) {}
    std::string offending_key;
};

}  // namespace qsta

#endif
