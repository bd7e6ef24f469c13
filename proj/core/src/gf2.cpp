#include "binomrank/gf2.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "binomrank/errors.hpp"

namespace binomrank {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }
}  // namespace

Gf2Vector::Gf2Vector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

bool Gf2Vector::get(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("Gf2Vector::get: index " + std::to_string(i));
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void Gf2Vector::set(std::size_t i, bool v) {
  if (i >= size_) throw std::out_of_range("Gf2Vector::set: index " + std::to_string(i));
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (v)
    words_[i / kWordBits] |= mask;
  else
    words_[i / kWordBits] &= ~mask;
}

bool Gf2Vector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * wpr_, 0) {
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("Gf2Matrix: dimensions must be positive");
}

void Gf2Matrix::check(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw std::out_of_range("Gf2Matrix: (" + std::to_string(r) + ", " + std::to_string(c) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  check(r, c);
  return (row(r)[c / kWordBits] >> (c % kWordBits)) & 1u;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
  check(r, c);
  const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
  if (v)
    row(r)[c / kWordBits] |= mask;
  else
    row(r)[c / kWordBits] &= ~mask;
}

void Gf2Matrix::xor_row(std::size_t dst, std::size_t src) {
  std::uint64_t* d = row(dst);
  const std::uint64_t* s = row(src);
  for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::uint64_t* ra = row(a);
  std::uint64_t* rb = row(b);
  for (std::size_t w = 0; w < wpr_; ++w) std::swap(ra[w], rb[w]);
}

namespace {

// In-place reduced row echelon form over the first main_cols columns.
// Pivot choice is deterministic: scan columns left to right, take the
// topmost row with a set bit at or below the current row.
std::vector<std::size_t> rref(Gf2Matrix& m, std::size_t main_cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < main_cols && next < m.rows(); ++col) {
    std::size_t piv = m.rows();
    for (std::size_t r = next; r < m.rows(); ++r) {
      if (m.get(r, col)) {
        piv = r;
        break;
      }
    }
    if (piv == m.rows()) continue;
    m.swap_rows(next, piv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != next && m.get(r, col)) m.xor_row(r, next);
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

bool row_parity(const std::uint64_t* row, const std::uint64_t* vec, std::size_t words) {
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words; ++w) acc ^= row[w] & vec[w];
  return std::popcount(acc) & 1u;
}

}  // namespace

std::size_t rank(const Gf2Matrix& a) {
  Gf2Matrix m = a;
  return rref(m, m.cols()).size();
}

SolveReport solve_report(const Gf2Matrix& a, const Gf2Vector& b) {
  if (b.size() != a.rows())
    throw std::invalid_argument("solve: rhs size " + std::to_string(b.size()) +
                                " does not match " + std::to_string(a.rows()) + " rows");
  Gf2Matrix aug = append_column(a, b);
  const std::vector<std::size_t> pivots = rref(aug, a.cols());
  SolveReport rep;
  rep.rank = pivots.size();
  bool inconsistent = false;
  for (std::size_t r = rep.rank; r < aug.rows(); ++r) {
    if (aug.get(r, a.cols())) {
      inconsistent = true;
      break;
    }
  }
  rep.rank_aug = rep.rank + (inconsistent ? 1 : 0);
  rep.solvable = !inconsistent;
  if (rep.solvable) {
    Gf2Vector x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x.set(pivots[i], aug.get(i, a.cols()));
    rep.x = std::move(x);
  }
  return rep;
}

std::optional<Gf2Vector> solve(const Gf2Matrix& a, const Gf2Vector& b) {
  return solve_report(a, b).x;
}

bool is_consistent(const Gf2Matrix& a, const Gf2Vector& b) {
  return solve_report(a, b).solvable;
}

std::optional<Gf2Vector> brute_force_solve(const Gf2Matrix& a, const Gf2Vector& b,
                                           std::size_t max_cols) {
  if (b.size() != a.rows())
    throw std::invalid_argument("brute_force_solve: rhs size does not match rows");
  if (a.cols() > max_cols)
    throw RefusalError("brute_force_solve: " + std::to_string(a.cols()) +
                       " columns exceeds limit " + std::to_string(max_cols));
  const std::size_t n = a.cols();
  for (std::uint64_t counter = 0; counter < (std::uint64_t{1} << n); ++counter) {
    // Lexicographic order over (x_0, .., x_{n-1}): x_i is bit n-1-i of counter.
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((counter >> (n - 1 - i)) & 1u) word |= std::uint64_t{1} << i;
    }
    bool ok = true;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (row_parity(a.row(r), &word, 1) != b.get(r)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Gf2Vector x(n);
      if (n > 0) x.words()[0] = word;
      return x;
    }
  }
  return std::nullopt;
}

Gf2Vector mat_vec(const Gf2Matrix& a, const Gf2Vector& x) {
  if (x.size() != a.cols())
    throw std::invalid_argument("mat_vec: vector size does not match columns");
  Gf2Vector y(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    y.set(r, row_parity(a.row(r), x.words(), a.words_per_row()));
  return y;
}

Gf2Matrix transpose(const Gf2Matrix& a) {
  Gf2Matrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a.get(r, c)) t.set(c, r, true);
  return t;
}

Gf2Matrix append_column(const Gf2Matrix& a, const Gf2Vector& b) {
  if (b.size() != a.rows())
    throw std::invalid_argument("append_column: column size does not match rows");
  Gf2Matrix m(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const std::uint64_t* src = a.row(r);
    std::uint64_t* dst = m.row(r);
    for (std::size_t w = 0; w < a.words_per_row(); ++w) dst[w] = src[w];
    m.set(r, a.cols(), b.get(r));
  }
  return m;
}

namespace {
void dump_matrix(std::ostream& out, const Gf2Matrix& a) {
  out << a.rows() << " " << a.cols() << "\n";
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out << (a.get(r, c) ? '1' : '0');
    out << "\n";
  }
}
}  // namespace

std::string to_dump(const Gf2Matrix& a) {
  std::ostringstream out;
  dump_matrix(out, a);
  return out.str();
}

std::string to_dump(const Gf2Matrix& a, const Gf2Vector& b) {
  if (b.size() != a.rows())
    throw std::invalid_argument("to_dump: rhs size does not match rows");
  std::ostringstream out;
  dump_matrix(out, a);
  for (std::size_t r = 0; r < b.size(); ++r) out << (b.get(r) ? '1' : '0');
  out << "\n";
  return out.str();
}

DumpContents from_dump(std::istream& in) {
  std::size_t rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows == 0 || cols == 0)
    throw std::invalid_argument("from_dump: bad header");
  auto read_line = [&in](std::size_t want, const char* what) {
    std::string line;
    if (!(in >> line) || line.size() != want)
      throw std::invalid_argument(std::string("from_dump: bad ") + what);
    for (char ch : line)
      if (ch != '0' && ch != '1')
        throw std::invalid_argument(std::string("from_dump: bad character in ") + what);
    return line;
  };
  DumpContents d;
  d.a = Gf2Matrix(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string line = read_line(cols, "row");
    for (std::size_t c = 0; c < cols; ++c) d.a.set(r, c, line[c] == '1');
  }
  std::string extra;
  if (in >> extra) {
    if (extra.size() != rows) throw std::invalid_argument("from_dump: bad rhs length");
    Gf2Vector b(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      if (extra[r] != '0' && extra[r] != '1')
        throw std::invalid_argument("from_dump: bad character in rhs");
      b.set(r, extra[r] == '1');
    }
    d.rhs = std::move(b);
  }
  return d;
}

DumpContents from_dump(const std::string& text) {
  std::istringstream in(text);
  return from_dump(in);
}

}  // namespace binomrank
