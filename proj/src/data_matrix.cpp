#include "depthlab/data_matrix.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "depthlab/errors.hpp"

namespace depthlab {

DataMatrix::DataMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("DataMatrix needs at least one row and one column");
  if (values_.size() != rows_ * cols_) throw std::invalid_argument("DataMatrix value count does not match shape");
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("DataMatrix entries must be finite");
  }
}

DataMatrix DataMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> copy;
  for (const auto& r : rows) copy.emplace_back(r);
  return from_rows(copy);
}

DataMatrix DataMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw std::invalid_argument("DataMatrix needs at least one row");
  const std::size_t d = rows.front().size();
  std::vector<double> values;
  values.reserve(rows.size() * d);
  for (const auto& r : rows) {
    if (r.size() != d) throw std::invalid_argument("ragged rows");
    values.insert(values.end(), r.begin(), r.end());
  }
  return DataMatrix(rows.size(), d, std::move(values));
}

DataMatrix DataMatrix::from_column(std::span<const double> values) {
  return DataMatrix(values.size(), 1, std::vector<double>(values.begin(), values.end()));
}

std::vector<double> DataMatrix::column(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<double> DataMatrix::mean() const {
  std::vector<double> m(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m[j] += (*this)(i, j);
  }
  for (double& v : m) v /= static_cast<double>(rows_);
  return m;
}

DataMatrix DataMatrix::select_rows(std::span<const std::size_t> indices) const {
  std::vector<double> values;
  values.reserve(indices.size() * cols_);
  for (std::size_t i : indices) {
    if (i >= rows_) throw std::out_of_range("row index out of range");
    auto r = row(i);
    values.insert(values.end(), r.begin(), r.end());
  }
  return DataMatrix(indices.size(), cols_, std::move(values));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

DataMatrix load_matrix(std::istream& in, bool has_header) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::vector<double> values;
  bool header_pending = has_header;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty()) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }
    std::size_t field = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = view.find(',', start);
      std::string_view cell = trim(view.substr(start, comma == std::string_view::npos ? view.npos : comma - start));
      ++field;
      double value = 0.0;
      const char* first = cell.data();
      const char* last = cell.data() + cell.size();
      if (!cell.empty() && *first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (cell.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError(line_no, field, "non-numeric cell '" + std::string(cell) + "'");
      }
      if (!std::isfinite(value)) throw ParseError(line_no, field, "non-finite value");
      values.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (rows == 0) {
      cols = field;
    } else if (field != cols) {
      throw ParseError(line_no, 0, "expected " + std::to_string(cols) + " fields, found " + std::to_string(field));
    }
    ++rows;
  }
  if (rows == 0) throw ParseError(line_no, 0, "no data rows");
  return DataMatrix(rows, cols, std::move(values));
}

DataMatrix load_matrix_file(const std::string& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw DepthError("cannot open '" + path + "'");
  return load_matrix(in, has_header);
}

void save_matrix(std::ostream& out, const DataMatrix& m) {
  char buf[64];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), m(i, j));
      (void)ec;
      if (j) out << ',';
      out.write(buf, ptr - buf);
    }
    out << '\n';
  }
}

}  // namespace depthlab
