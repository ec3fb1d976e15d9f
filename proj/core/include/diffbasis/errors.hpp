// Copyright 2026 The diffbasis Authors.
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

#ifndef DIFFBASIS_ERRORS_HPP_
#define DIFFBASIS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace diffbasis {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's domain (bad parameters,
// malformed sets, failed preconditions).
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured size cap (field order, sieve limit, group order, search
// universe) would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Mathematically undefined request, e.g. inverting zero or dlog(0).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Object is not in the state the operation needs (e.g. no log table).
class StateError : public Error {
 public:
  using Error::Error;
};

// A construction failed its own verification. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace diffbasis

#endif  // DIFFBASIS_ERRORS_HPP_
