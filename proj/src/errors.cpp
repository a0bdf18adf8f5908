#include "depthlab/errors.hpp"

namespace depthlab {

ParseError::ParseError(std::size_t row, std::size_t col, const std::string& what)
    : DepthError("row " + std::to_string(row) + (col ? ", col " + std::to_string(col) : std::string{}) +
                 ": " + what),
      row_(row),
      col_(col) {}

SingularCovarianceError::SingularCovarianceError(std::size_t rank, std::size_t dim)
    : DepthError("covariance matrix is singular: rank " + std::to_string(rank) + " < dimension " +
                 std::to_string(dim)),
      rank_(rank),
      dim_(dim) {}

}  // namespace depthlab
