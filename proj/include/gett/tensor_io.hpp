#pragma once

/// \file tensor_io.hpp
/// Line-oriented text format for strided tensors.
///
///     GETT-TENSOR 1
///     dtype: d
///     rank: 2
///     extents: 2 3
///     increments: 1 2
///     offset: 0
///     buffer: 6
///     1 2 3 4 5 6
///
/// Values follow in buffer order, whitespace separated, across any number of
/// lines. Complex dtypes store each element as a real/imaginary pair. Values
/// are written in shortest round-trip form, so write-then-read is exact.

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gett/kernel.hpp"
#include "gett/layout.hpp"

namespace gett {

using TensorValues =
    std::variant<std::vector<float>, std::vector<double>,
                 std::vector<std::complex<float>>, std::vector<std::complex<double>>>;

struct TensorFile {
  TensorView view;
  TensorValues values;

  ElementType dtype() const noexcept;

  friend bool operator==(const TensorFile& x, const TensorFile& y);
};

/// Malformed content. `line()` is 1-based.
class FormatError : public std::runtime_error {
 public:
  FormatError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Unreadable or unwritable file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TensorFile parse_tensor(std::istream& in);
void format_tensor(std::ostream& out, const TensorFile& tensor);

TensorFile read_tensor(const std::filesystem::path& path);
void write_tensor(const std::filesystem::path& path, const TensorFile& tensor);

template <class T>
TensorFile make_tensor_file(TensorView view, std::vector<T> values) {
  return TensorFile{std::move(view), TensorValues(std::move(values))};
}

}  // namespace gett
