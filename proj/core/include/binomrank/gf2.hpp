#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace binomrank {

// Dense bit-packed vector over GF(2).
class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t size);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool v);
  bool is_zero() const;

  std::size_t word_count() const { return words_.size(); }
  const std::uint64_t* words() const { return words_.data(); }
  std::uint64_t* words() { return words_.data(); }

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Dense bit-packed matrix over GF(2), row major, each row word-aligned.
// Bits past the column count stay zero so whole-word ops and equality are
// safe.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool v);

  const std::uint64_t* row(std::size_t r) const { return data_.data() + r * wpr_; }
  std::uint64_t* row(std::size_t r) { return data_.data() + r * wpr_; }

  void xor_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  void check(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> data_;
};

struct SolveReport {
  bool solvable = false;
  std::optional<Gf2Vector> x;  // present iff solvable
  std::size_t rank = 0;        // rank of A
  std::size_t rank_aug = 0;    // rank of [A|b]
};

std::size_t rank(const Gf2Matrix& a);

// Deterministic elimination: leftmost pivot column first, topmost nonzero
// row as pivot, free variables fixed to zero.
std::optional<Gf2Vector> solve(const Gf2Matrix& a, const Gf2Vector& b);
SolveReport solve_report(const Gf2Matrix& a, const Gf2Vector& b);
bool is_consistent(const Gf2Matrix& a, const Gf2Vector& b);

// Exhaustive reference solver. Tries all 2^cols vectors in lexicographic
// order ((0,..,0), (0,..,1), ...) and returns the first that works.
// Refuses when cols exceeds max_cols.
std::optional<Gf2Vector> brute_force_solve(const Gf2Matrix& a, const Gf2Vector& b,
                                           std::size_t max_cols = 16);

Gf2Vector mat_vec(const Gf2Matrix& a, const Gf2Vector& x);
Gf2Matrix transpose(const Gf2Matrix& a);
Gf2Matrix append_column(const Gf2Matrix& a, const Gf2Vector& b);

// Plain-text dump: header "rows cols", then one '0'/'1' line per row,
// optionally followed by one extra line holding a right-hand side.
std::string to_dump(const Gf2Matrix& a);
std::string to_dump(const Gf2Matrix& a, const Gf2Vector& b);

struct DumpContents {
  Gf2Matrix a;
  std::optional<Gf2Vector> rhs;
};
DumpContents from_dump(std::istream& in);
DumpContents from_dump(const std::string& text);

}  // namespace binomrank
