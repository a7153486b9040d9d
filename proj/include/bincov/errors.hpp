// Copyright 2026 The bincov Authors
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

#ifndef BINCOV_ERRORS_HPP_
#define BINCOV_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bincov {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class EmptyInstance : public Error {
 public:
  EmptyInstance() : Error("empty instance") {}
};

/// Raised when the bin-type catalog grows past its cap.
class CatalogOverflow : public Error {
 public:
  explicit CatalogOverflow(std::size_t partial)
      : Error("bin-type catalog exceeds cap after " + std::to_string(partial) + " types"),
        partial_(partial) {}
  std::size_t partialCount() const { return partial_; }

 private:
  std::size_t partial_;
};

class NoOrdering : public Error {
 public:
  using Error::Error;
};

/// Raised when the exact optimum search visits more states than allowed.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace bincov

#endif  // BINCOV_ERRORS_HPP_
