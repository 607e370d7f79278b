#include "gett/tensor_io.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace gett {
namespace {

constexpr std::string_view kMagic = "GETT-TENSOR 1";

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class N>
N parse_number(std::string_view tok, int line, std::string_view what) {
  N value{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw FormatError(line, "bad " + std::string(what) + " '" + std::string(tok) + "'");
  }
  return value;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& out) {
    if (!std::getline(in_, out)) return false;
    ++line_;
    return true;
  }
  int line() const noexcept { return line_; }

  // Reads "key: rest" and returns rest.
  std::string header(std::string_view key) {
    std::string text;
    if (!next(text)) throw FormatError(line_ + 1, "missing '" + std::string(key) + ":' line");
    const std::string_view t = trim(text);
    if (t.size() < key.size() + 1 || t.substr(0, key.size()) != key ||
        t[key.size()] != ':') {
      throw FormatError(line_, "expected '" + std::string(key) + ":', got '" +
                                   std::string(t) + "'");
    }
    return std::string(trim(t.substr(key.size() + 1)));
  }

 private:
  std::istream& in_;
  int line_ = 0;
};

std::vector<index_t> parse_list(const std::string& text, int line, std::string_view what) {
  std::vector<index_t> out;
  for (auto tok : split(text)) out.push_back(parse_number<index_t>(tok, line, what));
  return out;
}

template <class R>
void append_value(std::string& out, R x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  out.append(buf, res.ptr);
}

template <class T>
bool bitwise_equal(const std::vector<T>& x, const std::vector<T>& y) {
  return x.size() == y.size() &&
         (x.empty() || std::memcmp(x.data(), y.data(), x.size() * sizeof(T)) == 0);
}

}  // namespace

ElementType TensorFile::dtype() const noexcept {
  switch (values.index()) {
    case 0: return ElementType::S;
    case 1: return ElementType::D;
    case 2: return ElementType::C;
    default: return ElementType::Z;
  }
}

bool operator==(const TensorFile& x, const TensorFile& y) {
  if (x.view.extents != y.view.extents || x.view.increments != y.view.increments ||
      x.view.base_offset != y.view.base_offset || x.view.buffer_len != y.view.buffer_len ||
      x.values.index() != y.values.index()) {
    return false;
  }
  return std::visit(
      [&](const auto& xs) {
        using V = std::decay_t<decltype(xs)>;
        return bitwise_equal(xs, std::get<V>(y.values));
      },
      x.values);
}

TensorFile parse_tensor(std::istream& in) {
  LineReader reader(in);
  std::string text;
  if (!reader.next(text) || trim(text) != kMagic) {
    throw FormatError(1, "expected magic '" + std::string(kMagic) + "'");
  }

  const std::string dtype = reader.header("dtype");
  const int dtype_line = reader.line();
  if (dtype != "s" && dtype != "d" && dtype != "c" && dtype != "z") {
    throw FormatError(dtype_line, "unknown dtype '" + dtype + "'");
  }

  const std::string rank_text = reader.header("rank");
  const int rank_line = reader.line();
  const auto rank = parse_number<index_t>(trim(rank_text), rank_line, "rank");
  if (rank < 0) throw FormatError(rank_line, "negative rank");

  TensorView view;
  view.extents = parse_list(reader.header("extents"), reader.line(), "extent");
  if (static_cast<index_t>(view.extents.size()) != rank) {
    throw FormatError(reader.line(), "rank " + std::to_string(rank) + " with " +
                                         std::to_string(view.extents.size()) + " extents");
  }
  for (index_t e : view.extents) {
    if (e < 0) throw FormatError(reader.line(), "negative extent " + std::to_string(e));
  }
  view.increments = parse_list(reader.header("increments"), reader.line(), "increment");
  if (static_cast<index_t>(view.increments.size()) != rank) {
    throw FormatError(reader.line(), "rank " + std::to_string(rank) + " with " +
                                         std::to_string(view.increments.size()) +
                                         " increments");
  }
  view.base_offset = parse_number<index_t>(trim(reader.header("offset")), reader.line(), "offset");
  if (view.base_offset < 0) throw FormatError(reader.line(), "negative offset");
  view.buffer_len = parse_number<index_t>(trim(reader.header("buffer")), reader.line(), "buffer length");
  const int buffer_line = reader.line();
  if (view.buffer_len < 1) throw FormatError(buffer_line, "buffer length must be positive");
  if (!footprint_in_bounds(view)) {
    throw FormatError(buffer_line, "view addresses elements outside the buffer");
  }

  const bool complex = dtype == "c" || dtype == "z";
  const auto expected = static_cast<std::size_t>(view.buffer_len) * (complex ? 2 : 1);

  std::vector<double> tmp_d;
  std::vector<float> tmp_s;
  const bool single = dtype == "s" || dtype == "c";
  if (single) {
    tmp_s.reserve(expected);
  } else {
    tmp_d.reserve(expected);
  }
  std::size_t count = 0;
  while (reader.next(text)) {
    for (auto tok : split(text)) {
      if (count == expected) {
        throw FormatError(reader.line(), "more than " + std::to_string(expected) +
                                             " values for buffer " +
                                             std::to_string(view.buffer_len));
      }
      if (single) {
        tmp_s.push_back(parse_number<float>(tok, reader.line(), "value"));
      } else {
        tmp_d.push_back(parse_number<double>(tok, reader.line(), "value"));
      }
      ++count;
    }
  }
  if (count != expected) {
    throw FormatError(reader.line(), "expected " + std::to_string(expected) +
                                         " values for buffer " +
                                         std::to_string(view.buffer_len) + ", found " +
                                         std::to_string(count));
  }

  TensorFile tf;
  tf.view = std::move(view);
  auto pairs = [](const auto& flat) {
    using R = typename std::decay_t<decltype(flat)>::value_type;
    std::vector<std::complex<R>> out(flat.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = {flat[2 * i], flat[2 * i + 1]};
    return out;
  };
  if (dtype == "s") tf.values = std::move(tmp_s);
  else if (dtype == "d") tf.values = std::move(tmp_d);
  else if (dtype == "c") tf.values = pairs(tmp_s);
  else tf.values = pairs(tmp_d);
  return tf;
}

void format_tensor(std::ostream& out, const TensorFile& tensor) {
  std::string s(kMagic);
  s += "\ndtype: ";
  s += static_cast<char>(tensor.dtype());
  s += "\nrank: " + std::to_string(tensor.view.rank());
  s += "\nextents:";
  for (index_t e : tensor.view.extents) s += " " + std::to_string(e);
  s += "\nincrements:";
  for (index_t i : tensor.view.increments) s += " " + std::to_string(i);
  s += "\noffset: " + std::to_string(tensor.view.base_offset);
  s += "\nbuffer: " + std::to_string(tensor.view.buffer_len) + "\n";

  std::visit(
      [&](const auto& values) {
        for (std::size_t i = 0; i < values.size(); ++i) {
          if (i) s += (i % 8 == 0) ? '\n' : ' ';
          const auto& x = values[i];
          if constexpr (std::is_floating_point_v<std::decay_t<decltype(x)>>) {
            append_value(s, x);
          } else {
            append_value(s, x.real());
            s += ' ';
            append_value(s, x.imag());
          }
        }
      },
      tensor.values);
  s += '\n';
  out << s;
}

TensorFile read_tensor(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return parse_tensor(in);
  } catch (const FormatError& e) {
    throw FormatError(e.line(), path.string() + ": " +
                                    std::string(std::string_view(e.what()).substr(
                                        std::string_view(e.what()).find(": ") + 2)));
  }
}

void write_tensor(const std::filesystem::path& path, const TensorFile& tensor) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  format_tensor(out, tensor);
  if (!out.flush()) throw IoError("write failed for " + path.string());
}

}  // namespace gett
