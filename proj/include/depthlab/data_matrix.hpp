#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace depthlab {

/// n observations x d coordinates, row-major, all entries finite.
/// Immutable once constructed.
class DataMatrix {
 public:
  /// Throws std::invalid_argument on a size mismatch, n == 0, d == 0 or a
  /// non-finite entry.
  DataMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  static DataMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static DataMatrix from_rows(const std::vector<std::vector<double>>& rows);
  /// One-column matrix.
  static DataMatrix from_column(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::span<const double> row(std::size_t i) const noexcept {
    return {values_.data() + i * cols_, cols_};
  }
  double operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * cols_ + j]; }
  std::span<const double> values() const noexcept { return values_; }

  std::vector<double> column(std::size_t j) const;
  std::vector<double> mean() const;
  DataMatrix select_rows(std::span<const std::size_t> indices) const;

  friend bool operator==(const DataMatrix&, const DataMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

/// Reads a numeric CSV (comma delimiter, LF or CRLF line endings, no quoting).
/// Blank lines are ignored. Throws ParseError with the offending row/column.
DataMatrix load_matrix(std::istream& in, bool has_header = false);
DataMatrix load_matrix_file(const std::string& path, bool has_header = false);

/// Writes every value with round-trip precision.
void save_matrix(std::ostream& out, const DataMatrix& m);

}  // namespace depthlab
