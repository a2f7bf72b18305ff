/*
   Copyright 2026 The maxcurve Authors

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

#ifndef MAXCURVE_ERRORS_HPP
#define MAXCURVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxcurve {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Bad input: rejected before any computation (CLI exit code 2).
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// A point handed to an operation does not satisfy the curve equation.
class NotOnCurve : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// Enumeration or scan would exceed the configured budget (CLI exit code 3).
class BudgetExceeded : public Error {
   public:
    using Error::Error;
};

/// Local expansion hit the hard precision cap without resolving a valuation.
class PrecisionExhausted : public Error {
   public:
    using Error::Error;
};

/// A checked identity did not hold (CLI exit code 1).
class IdentityFailure : public Error {
   public:
    using Error::Error;
};

}  // namespace maxcurve

#endif
