// Copyright 2026 The gbsdks Authors.
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

#ifndef GBSDKS_ERRORS_HPP_
#define GBSDKS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gbsdks {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside its documented domain (k out of range, loss > 1, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Density or other metric requested on a graph with fewer than two vertices.
class DegenerateGraphError : public Error {
 public:
  using Error::Error;
};

// Vertex selection with duplicate or out-of-range indices.
class SelectionError : public Error {
 public:
  using Error::Error;
};

// Embedding scale c at or beyond the inverse largest adjacency eigenvalue.
class ScalingError : public Error {
 public:
  using Error::Error;
};

// Operation requires a pure state but received a mixed one.
class PurityError : public Error {
 public:
  PurityError(const std::string& what, double largest_symplectic_eigenvalue)
      : Error(what), largest_(largest_symplectic_eigenvalue) {}
  double largest_symplectic_eigenvalue() const { return largest_; }

 private:
  double largest_;
};

// Matrix is not symplectic (to tolerance) or a factorization failed.
class DecompositionError : public Error {
 public:
  DecompositionError(const std::string& what, double defect)
      : Error(what), defect_(defect) {}
  double defect() const { return defect_; }

 private:
  double defect_;
};

// Requested source purity cannot be reached with the given (l, b).
class InfeasiblePurityError : public Error {
 public:
  InfeasiblePurityError(const std::string& what, double min_purity,
                        double max_purity)
      : Error(what), min_(min_purity), max_(max_purity) {}
  double min_purity() const { return min_; }
  double max_purity() const { return max_; }

 private:
  double min_;
  double max_;
};

// Wrong matrix shape: odd dimension, non-square, not symmetric.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Numerically singular or non-positive matrix where a physical one was
// expected.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Exhaustive computation refused because it exceeds a size guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Sampling from a distribution with no probability mass.
class EmptyDistributionError : public Error {
 public:
  using Error::Error;
};

// Invalid experiment configuration, detected before any computation.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed file whose content violates a model invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// True for errors that the CLI reports as configuration problems (exit 1).
bool is_configuration_error(const std::exception& e);

}  // namespace gbsdks

#endif  // GBSDKS_ERRORS_HPP_
