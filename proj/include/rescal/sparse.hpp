#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rescal/rational.hpp"

namespace rescal {

using ColIndex = std::uint32_t;

struct Entry {
  ColIndex col;
  Rational val;
};

// Sorted by column, no zero entries stored.
using SparseVector = std::vector<Entry>;

SparseVector sparse_from_dense(const std::vector<Rational>& v);
std::vector<Rational> sparse_to_dense(const SparseVector& v, ColIndex ncols);

// r += c * p, keeping r sorted and zero-free.
void add_multiple(SparseVector& r, const Rational& c, const SparseVector& p);

// Online row-echelon accumulator with monic pivots. Insertion order is
// the elimination order; rank does not depend on it.
class RowEchelon {
public:
  void reduce(SparseVector& row) const;
  // Reduce, and if nonzero keep as a new pivot row. Returns false if the
  // row was dependent on the rows already present.
  bool insert(SparseVector row);

  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVector>& rows() const { return rows_; }

private:
  std::unordered_map<ColIndex, std::size_t> pivot_of_col_;
  std::vector<SparseVector> rows_;
};

enum class EliminationMode { kSerial, kParallel, kAuto };

// Exact rank of the span of the given rows.
//
// kSerial is the straightforward online elimination and is the reference
// implementation. kParallel reduces rows in chunks against the frozen
// echelon with OpenMP, then finishes each chunk serially; it computes the
// same pivots in the same order. kAuto picks based on problem size.
std::size_t rank_of_rows(std::vector<SparseVector> rows, EliminationMode mode = EliminationMode::kAuto);

// Echelon form of the given rows (independent subset, reduced, monic),
// same elimination as rank_of_rows.
RowEchelon echelon_of_rows(std::vector<SparseVector> rows,
                           EliminationMode mode = EliminationMode::kAuto);

// Membership solver: tracks the expression of each reduced row as a
// combination of the inserted vectors.
class SpanSolver {
public:
  // Returns true if v was independent of the vectors added so far
  // (v then becomes part of the spanning basis).
  bool add(SparseVector v);
  std::size_t rank() const { return rows_.size(); }
  bool contains(const SparseVector& v) const;
  // Coordinates of v as a combination of the independent added vectors,
  // in insertion order; nullopt if v is outside the span.
  std::optional<std::vector<Rational>> solve(const SparseVector& v) const;

private:
  struct TaggedRow {
    SparseVector real;
    SparseVector tag;  // combination of inserted vectors, col = insert index
  };
  void reduce(TaggedRow& row) const;

  std::unordered_map<ColIndex, std::size_t> pivot_of_col_;
  std::vector<TaggedRow> rows_;
  ColIndex inserted_ = 0;
};

// Fully reduced row echelon form, maintained incrementally: every pivot
// column appears in exactly one row. normal_form() is then a canonical
// representative of the coset modulo the row space, supported on free
// columns only. Meant for small quotient computations.
class Rref {
public:
  bool insert(SparseVector row);
  SparseVector normal_form(SparseVector v) const;
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(ColIndex c) const { return pivot_of_col_.count(c) > 0; }

private:
  std::unordered_map<ColIndex, std::size_t> pivot_of_col_;
  std::vector<SparseVector> rows_;
};

// The spec-facing matrix type: exact sparse matrix over the rationals.
class SparseMatrix {
public:
  SparseMatrix(std::size_t rows, std::size_t cols) : nrows_(rows), ncols_(cols), row_data_(rows) {}

  std::size_t rows() const { return nrows_; }
  std::size_t cols() const { return ncols_; }

  void set(std::size_t r, std::size_t c, const Rational& v);
  Rational get(std::size_t r, std::size_t c) const;
  const SparseVector& row(std::size_t r) const { return row_data_.at(r); }

  std::size_t rank(EliminationMode mode = EliminationMode::kAuto) const;
  // Exact basis of the right kernel {x : Mx = 0}, as dense vectors.
  std::vector<std::vector<Rational>> kernel_basis() const;

private:
  std::size_t nrows_, ncols_;
  std::vector<SparseVector> row_data_;
};

// Parallelism is wired through OpenMP; this reports the active width.
int max_threads();

}  // namespace rescal
