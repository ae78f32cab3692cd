/*
   Copyright 2026 The semiswitch Authors

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

#ifndef SEMISWITCH_ERRORS_HPP
#define SEMISWITCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semiswitch {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Bad parameters: reducible modulus, wrong extension degree, zero where a unit is required, ...
class InvalidArgument : public Error {
   public:
    using Error::Error;
};

/// A table or enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
   public:
    using Error::Error;
};

/// A result that must hold by construction (or an internal table invariant) failed.
/// `witness` carries a minimal JSON dump of the offending input.
class ConsistencyFault : public Error {
   public:
    ConsistencyFault(const std::string& what, std::string witness = {})
        : Error(what), witness_(std::move(witness)) {}
    const std::string& witness() const noexcept { return witness_; }

   private:
    std::string witness_;
};

}  // namespace semiswitch

#endif
