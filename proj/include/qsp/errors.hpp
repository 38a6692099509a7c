// Copyright 2026 The qspfact Authors
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

#ifndef QSP_ERRORS_HPP
#define QSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsp {

/// Base class for all library failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: shape mismatch, bad parameter, non-real target, ...
class InputError : public Error {
 public:
  using Error::Error;
};

/// 1 - a^2 - b^2 too close to zero; caller must reduce the norms of a or b.
class ScalingError : public Error {
 public:
  using Error::Error;
};

/// No adequate truncation degree exists below the grid cap.
class DegreeOverflowError : public Error {
 public:
  using Error::Error;
};

/// The inner CG solve stagnated.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

/// The null vector has a negligible leading coefficient (bad b choice).
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// The completed pair fails its consistency certificate (alpha not constant).
class CompletionError : public Error {
 public:
  using Error::Error;
};

/// The peel loop left above-degree residuals behind.
class InstabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsp

#endif
