#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <complex>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gett/kernel.hpp"
#include "gett/plan.hpp"
#include "gett/tensor_io.hpp"
#include "gett/testkit/generator.hpp"
#include "gett/testkit/suite.hpp"

namespace gett::cli {
namespace {

std::string join(const std::vector<index_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s;
}

void print_errors(std::ostream& err, const ErrorList& errors) {
  for (const auto& e : errors) err << "error: " << to_string(e.code) << ": " << e.detail << "\n";
}

template <class T>
int run_typed(const TensorFile& a, const TensorFile& b, const ContractionSpec& spec,
              const std::vector<index_t>& ext_c, const std::vector<index_t>& inc_c,
              const std::filesystem::path& out_path, std::ostream& out,
              std::ostream& err) {
  TensorView c_view;
  c_view.extents = ext_c;
  c_view.increments = inc_c;
  const Footprint fp = footprint(c_view);
  c_view.base_offset = -fp.min_offset;
  c_view.buffer_len = fp.empty ? 1 : fp.max_offset - fp.min_offset + 1;

  std::vector<T> c(static_cast<std::size_t>(c_view.buffer_len));
  zero_view<T>(c_view, c);
  const auto& av = std::get<std::vector<T>>(a.values);
  const auto& bv = std::get<std::vector<T>>(b.values);
  if (auto errors = xgett<T>(a.view, std::span<const T>(av), b.view,
                             std::span<const T>(bv), spec, inc_c, c_view.base_offset,
                             std::span<T>(c));
      !errors.empty()) {
    print_errors(err, errors);
    return kFailure;
  }
  try {
    write_tensor(out_path, make_tensor_file(c_view, std::move(c)));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
  out << "wrote " << out_path.string() << " (rank " << ext_c.size() << ", extents ["
      << join(ext_c) << "])\n";
  return kOk;
}

std::string format_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s << " s";
  return os.str();
}

}  // namespace

std::vector<index_t> parse_index_list(const std::string& text) {
  std::vector<index_t> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
      throw std::invalid_argument("bad index list '" + text + "'");
    }
    out.push_back(v);
  }
  if (!text.empty() && text.back() == ',') {
    throw std::invalid_argument("bad index list '" + text + "'");
  }
  return out;
}

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  TensorFile a, b;
  try {
    a = read_tensor(opts.a_path);
    b = read_tensor(opts.b_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }

  ContractionSpec spec;
  std::optional<std::vector<index_t>> out_ext, out_inc;
  try {
    spec.conts = opts.conts;
    spec.cont_a = parse_index_list(opts.cont_a);
    spec.cont_b = parse_index_list(opts.cont_b);
    spec.perm = parse_index_list(opts.perm);
    if (opts.out_ext) out_ext = parse_index_list(*opts.out_ext);
    if (opts.out_inc) out_inc = parse_index_list(*opts.out_inc);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }

  if (a.dtype() != b.dtype()) {
    err << "error: DtypeMismatch: A is " << static_cast<char>(a.dtype()) << ", B is "
        << static_cast<char>(b.dtype()) << "\n";
    return kFailure;
  }

  // Packed placeholder increments let the spec be checked before C's layout is known.
  const int rank_c = output_rank(a.view.rank(), b.view.rank(), spec.conts);
  const std::vector<index_t> provisional =
      out_inc ? *out_inc : std::vector<index_t>(static_cast<std::size_t>(std::max(rank_c, 0)), 1);
  if (auto errors = validate_operands(a.view, b.view, spec, provisional); !errors.empty()) {
    print_errors(err, errors);
    return kFailure;
  }
  const auto ext_c = output_extents(a.view, b.view, spec);
  if (out_ext && *out_ext != ext_c) {
    err << "error: OutputExtentMismatch: --out-ext [" << join(*out_ext)
        << "] but the contraction produces [" << join(ext_c) << "]\n";
    return kFailure;
  }
  const auto inc_c = out_inc ? *out_inc : contiguous_increments(ext_c);

  switch (a.dtype()) {
    case ElementType::S: return run_typed<float>(a, b, spec, ext_c, inc_c, opts.out_path, out, err);
    case ElementType::D: return run_typed<double>(a, b, spec, ext_c, inc_c, opts.out_path, out, err);
    case ElementType::C:
      return run_typed<std::complex<float>>(a, b, spec, ext_c, inc_c, opts.out_path, out, err);
    case ElementType::Z:
      return run_typed<std::complex<double>>(a, b, spec, ext_c, inc_c, opts.out_path, out, err);
  }
  return kFailure;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<testkit::Category> selected;
  if (opts.suite == "all") {
    const auto& all = testkit::all_categories();
    selected.assign(all.begin(), all.end());
  } else if (auto c = testkit::parse_category(opts.suite)) {
    selected.push_back(*c);
  } else {
    err << "error: unknown category '" << opts.suite << "'; expected \"all\" or one of:\n";
    for (auto c : testkit::all_categories()) err << "  " << testkit::category_name(c) << "\n";
    return kFailure;
  }
  if (opts.cases < 0) {
    err << "error: --cases must be non-negative\n";
    return kFailure;
  }

  const auto start = std::chrono::steady_clock::now();
  const auto reports = testkit::run_suite(selected, opts.cases, opts.seed);
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  long passed = 0, cases = 0;
  for (const auto& r : reports) {
    out << std::left << std::setw(38) << testkit::category_name(r.category) << std::right
        << std::setw(6) << r.passed << "/" << r.cases << " passed  ("
        << format_seconds(r.seconds) << ")\n";
    passed += r.passed;
    cases += r.cases;
  }
  out << std::left << std::setw(38) << "TOTAL" << std::right << std::setw(6) << passed
      << "/" << cases << " passed  (" << format_seconds(total) << ")\n";

  if (passed != cases) {
    for (const auto& r : reports) {
      for (const auto& f : r.failures) err << "FAIL " << f << "\n";
    }
    return kFailure;
  }
  return kOk;
}

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err) {
  const auto category = testkit::parse_category(opts.category);
  if (!category) {
    err << "error: unknown category '" << opts.category << "'\n";
    return kFailure;
  }
  const auto tc = testkit::generate_case<double>(*category, opts.seed);
  try {
    std::filesystem::create_directories(opts.out_dir);
    write_tensor(opts.out_dir / "a.tns", make_tensor_file(tc.a_view, tc.a));
    write_tensor(opts.out_dir / "b.tns", make_tensor_file(tc.b_view, tc.b));
    const auto spec_path = opts.out_dir / "spec.txt";
    std::ofstream spec(spec_path, std::ios::trunc);
    spec << "--conts=" << tc.spec.conts << " --cont-a=" << join(tc.spec.cont_a)
         << " --cont-b=" << join(tc.spec.cont_b) << " --perm=" << join(tc.spec.perm)
         << " --out-ext=" << join(tc.c_view.extents)
         << " --out-inc=" << join(tc.c_view.increments) << "\n";
    if (!spec.flush()) throw IoError("write failed for " + spec_path.string());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
  out << "wrote a.tns, b.tns, spec.txt to " << opts.out_dir.string() << "\n";
  return kOk;
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.rank < 0 || opts.extent < 0 || opts.conts < 0 || opts.conts > opts.rank ||
      opts.reps < 1) {
    err << "error: need 0 <= conts <= rank, extent >= 0, reps >= 1\n";
    return kFailure;
  }
  const std::vector<index_t> ext(static_cast<std::size_t>(opts.rank), opts.extent);
  const TensorView view = packed_view(ext);

  // Contract A's trailing dimensions against B's leading ones.
  ContractionSpec spec;
  spec.conts = opts.conts;
  for (int k = 0; k < opts.conts; ++k) {
    spec.cont_a.push_back(opts.rank - opts.conts + k);
    spec.cont_b.push_back(k);
  }
  for (int i = 0; i < 2 * (opts.rank - opts.conts); ++i) spec.perm.push_back(i);

  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> a(static_cast<std::size_t>(view.buffer_len)), b(a.size());
  for (auto& x : a) x = dist(rng);
  for (auto& x : b) x = dist(rng);

  const TensorView c_view = packed_view(output_extents(view, view, spec));
  std::vector<double> c(static_cast<std::size_t>(c_view.buffer_len));
  std::vector<double> times;
  for (int r = 0; r < opts.reps; ++r) {
    zero_view<double>(c_view, c);
    const auto t0 = std::chrono::steady_clock::now();
    const auto errors = xgett<double>(view, std::span<const double>(a), view,
                                      std::span<const double>(b), spec,
                                      c_view.increments, 0, std::span<double>(c));
    const auto t1 = std::chrono::steady_clock::now();
    if (!errors.empty()) {
      print_errors(err, errors);
      return kFailure;
    }
    times.push_back(std::chrono::duration<double>(t1 - t0).count());
  }
  std::sort(times.begin(), times.end());
  const double median = times.size() % 2 ? times[times.size() / 2]
                                         : 0.5 * (times[times.size() / 2 - 1] +
                                                  times[times.size() / 2]);

  index_t macs = 1;
  for (int i = 0; i < 2 * opts.rank - opts.conts; ++i) macs *= opts.extent;
  const index_t out_elems = num_elements(c_view.extents);
  out << "rank " << opts.rank << ", extent " << opts.extent << ", conts " << opts.conts
      << ", reps " << opts.reps << "\n";
  out << "multiply-adds per rep: " << macs << "\n";
  out << "median time: " << std::scientific << std::setprecision(3) << median << " s\n";
  const double safe = median > 0 ? median : 1e-12;
  out << "multiply-adds/second: " << static_cast<double>(macs) / safe << "\n";
  out << "output elements/second: " << static_cast<double>(out_elems) / safe << "\n";
  return kOk;
}

}  // namespace gett::cli
