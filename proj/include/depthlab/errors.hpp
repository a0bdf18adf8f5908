#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace depthlab {

/// Base class for data-dependent failures (bad input, degenerate samples).
/// Precondition violations on arguments throw std::invalid_argument instead.
class DepthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// CSV ingestion failure. Row and column are 1-based; column 0 means the
/// whole row is at fault.
class ParseError : public DepthError {
 public:
  ParseError(std::size_t row, std::size_t col, const std::string& what);

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

class SingularCovarianceError : public DepthError {
 public:
  SingularCovarianceError(std::size_t rank, std::size_t dim);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t dim() const noexcept { return dim_; }

 private:
  std::size_t rank_;
  std::size_t dim_;
};

/// The sample lies in a lower-dimensional flat (or is otherwise unusable)
/// for the requested computation.
class DegenerateSampleError : public DepthError {
 public:
  using DepthError::DepthError;
};

}  // namespace depthlab
