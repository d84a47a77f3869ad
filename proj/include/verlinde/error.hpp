/*
   Copyright 2026 The verlinde authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace verlinde {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input, a violated precondition, or a failed structural check.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A computation would exceed the configured dimension guard.
class SizeGuardError : public Error {
  public:
    using Error::Error;
};

inline constexpr std::size_t kDefaultSizeGuard = 10000;

/// Largest ambient dimension any intermediate object may reach.
/// VERLINDE_SIZE_GUARD overrides the default of 10^4.
inline std::size_t size_guard() {
    if (const char* env = std::getenv("VERLINDE_SIZE_GUARD")) {
        try {
            const long long v = std::stoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return kDefaultSizeGuard;
}

inline void check_size(std::size_t dim, const std::string& what) {
    if (dim > size_guard())
        throw SizeGuardError(what + ": dimension " + std::to_string(dim) + " exceeds size guard " +
                             std::to_string(size_guard()));
}

}  // namespace verlinde
