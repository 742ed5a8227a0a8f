#include "rescal/sparse.hpp"

#include <algorithm>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rescal {

int max_threads() {
#ifdef _OPENMP
  if (std::getenv("RESCAL_SERIAL")) return 1;
  return omp_get_max_threads();
#else
  return 1;
#endif
}

SparseVector sparse_from_dense(const std::vector<Rational>& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back({static_cast<ColIndex>(i), v[i]});
  return s;
}

std::vector<Rational> sparse_to_dense(const SparseVector& v, ColIndex ncols) {
  std::vector<Rational> d(ncols);
  for (const Entry& e : v) d.at(e.col) = e.val;
  return d;
}

void add_multiple(SparseVector& r, const Rational& c, const SparseVector& p) {
  if (c == 0 || p.empty()) return;
  SparseVector out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() && j < p.size()) {
    if (r[i].col < p[j].col) {
      out.push_back(std::move(r[i++]));
    } else if (r[i].col > p[j].col) {
      out.push_back({p[j].col, c * p[j].val});
      ++j;
    } else {
      Rational v = r[i].val + c * p[j].val;
      if (v != 0) out.push_back({r[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  while (i < r.size()) out.push_back(std::move(r[i++]));
  for (; j < p.size(); ++j) out.push_back({p[j].col, c * p[j].val});
  r = std::move(out);
}

void RowEchelon::reduce(SparseVector& row) const {
  while (!row.empty()) {
    auto it = pivot_of_col_.find(row.front().col);
    if (it == pivot_of_col_.end()) return;
    Rational c = -row.front().val;  // pivot rows are monic
    add_multiple(row, c, rows_[it->second]);
  }
}

bool RowEchelon::insert(SparseVector row) {
  reduce(row);
  if (row.empty()) return false;
  Rational lead = row.front().val;
  if (lead != 1) {
    Rational inv = rat(1) / lead;
    for (Entry& e : row) e.val *= inv;
  }
  pivot_of_col_.emplace(row.front().col, rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

namespace {

std::size_t eliminate_serial(std::vector<SparseVector>& rows, RowEchelon& ech) {
  for (SparseVector& r : rows) ech.insert(std::move(r));
  return ech.rank();
}

// Chunked elimination: each chunk is reduced against the frozen echelon in
// parallel, then the survivors are inserted serially (which also settles
// dependencies inside the chunk). Pivot choice matches the serial path,
// so the resulting echelon is identical row for row.
std::size_t eliminate_parallel(std::vector<SparseVector>& rows, RowEchelon& ech) {
#ifndef _OPENMP
  return eliminate_serial(rows, ech);
#else
  const std::size_t chunk = 128;
  for (std::size_t base = 0; base < rows.size(); base += chunk) {
    std::size_t end = std::min(rows.size(), base + chunk);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = base; i < end; ++i) ech.reduce(rows[i]);
    for (std::size_t i = base; i < end; ++i) ech.insert(std::move(rows[i]));
  }
  return ech.rank();
#endif
}

bool use_parallel(const std::vector<SparseVector>& rows, EliminationMode mode) {
  switch (mode) {
    case EliminationMode::kSerial:
      return false;
    case EliminationMode::kParallel:
      return true;
    case EliminationMode::kAuto:
      return max_threads() > 1 && rows.size() >= 192;
  }
  return false;
}

}  // namespace

RowEchelon echelon_of_rows(std::vector<SparseVector> rows, EliminationMode mode) {
  RowEchelon ech;
  if (use_parallel(rows, mode))
    eliminate_parallel(rows, ech);
  else
    eliminate_serial(rows, ech);
  return ech;
}

std::size_t rank_of_rows(std::vector<SparseVector> rows, EliminationMode mode) {
  return echelon_of_rows(std::move(rows), mode).rank();
}

void SpanSolver::reduce(TaggedRow& row) const {
  while (!row.real.empty()) {
    auto it = pivot_of_col_.find(row.real.front().col);
    if (it == pivot_of_col_.end()) return;
    Rational c = -row.real.front().val;
    add_multiple(row.real, c, rows_[it->second].real);
    add_multiple(row.tag, c, rows_[it->second].tag);
  }
}

bool SpanSolver::add(SparseVector v) {
  TaggedRow row{std::move(v), {{inserted_, rat(1)}}};
  ++inserted_;
  reduce(row);
  if (row.real.empty()) return false;
  Rational inv = rat(1) / row.real.front().val;
  if (inv != 1) {
    for (Entry& e : row.real) e.val *= inv;
    for (Entry& e : row.tag) e.val *= inv;
  }
  pivot_of_col_.emplace(row.real.front().col, rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

bool SpanSolver::contains(const SparseVector& v) const {
  TaggedRow row{v, {}};
  reduce(row);
  return row.real.empty();
}

std::optional<std::vector<Rational>> SpanSolver::solve(const SparseVector& v) const {
  TaggedRow row{v, {}};
  reduce(row);
  if (!row.real.empty()) return std::nullopt;
  // invariant: real = v + sum tag_j * inserted_j, so v = -sum tag_j * inserted_j
  std::vector<Rational> coords(inserted_);
  for (const Entry& e : row.tag) coords.at(e.col) = -e.val;
  return coords;
}

SparseVector Rref::normal_form(SparseVector v) const {
  // Pivot rows touch their own pivot column (coefficient 1) and free
  // columns only, so each cancellation is final.
  for (std::size_t i = 0; i < v.size();) {
    auto it = pivot_of_col_.find(v[i].col);
    if (it == pivot_of_col_.end()) {
      ++i;
      continue;
    }
    Rational c = -v[i].val;
    add_multiple(v, c, rows_[it->second]);
    // restart scan from the beginning: earlier entries cannot reappear at
    // pivot columns < current, but the vector shifted
    i = 0;
  }
  return v;
}

bool Rref::insert(SparseVector row) {
  row = normal_form(std::move(row));
  if (row.empty()) return false;
  Rational inv = rat(1) / row.front().val;
  if (inv != 1)
    for (Entry& e : row) e.val *= inv;
  ColIndex pc = row.front().col;
  // clean the new pivot column out of the existing rows
  for (SparseVector& r : rows_) {
    auto it = std::lower_bound(r.begin(), r.end(), pc,
                               [](const Entry& e, ColIndex col) { return e.col < col; });
    if (it != r.end() && it->col == pc) {
      Rational c = -it->val;
      add_multiple(r, c, row);
    }
  }
  pivot_of_col_.emplace(pc, rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= nrows_ || c >= ncols_) throw InvalidArgument("matrix index out of range");
  SparseVector& row = row_data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    if (v == 0)
      row.erase(it);
    else
      it->val = v;
  } else if (v != 0) {
    row.insert(it, {static_cast<ColIndex>(c), v});
  }
}

Rational SparseMatrix::get(std::size_t r, std::size_t c) const {
  const SparseVector& row = row_data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->val;
  return Rational(0);
}

std::size_t SparseMatrix::rank(EliminationMode mode) const {
  return rank_of_rows(row_data_, mode);
}

std::vector<std::vector<Rational>> SparseMatrix::kernel_basis() const {
  // Reduced row echelon, then a kernel vector per free column:
  // x_free = 1, pivot coordinates solve the rest.
  RowEchelon ech = echelon_of_rows(row_data_, EliminationMode::kSerial);
  std::vector<SparseVector> rref = ech.rows();
  // Clean pivot columns in increasing order; cleaning column c only
  // introduces entries in columns > c, so earlier columns stay clean.
  std::sort(rref.begin(), rref.end(),
            [](const SparseVector& a, const SparseVector& b) { return a.front().col < b.front().col; });
  for (std::size_t i = 0; i < rref.size(); ++i) {
    ColIndex pc = rref[i].front().col;
    for (std::size_t h = 0; h < rref.size(); ++h) {
      if (h == i) continue;
      auto it = std::lower_bound(rref[h].begin(), rref[h].end(), pc,
                                 [](const Entry& e, ColIndex col) { return e.col < col; });
      if (it != rref[h].end() && it->col == pc) {
        Rational c = -it->val;
        add_multiple(rref[h], c, rref[i]);
      }
    }
  }
  std::vector<bool> is_pivot(ncols_, false);
  std::unordered_map<ColIndex, std::size_t> row_of_pivot;
  for (std::size_t i = 0; i < rref.size(); ++i) {
    is_pivot[rref[i].front().col] = true;
    row_of_pivot[rref[i].front().col] = i;
  }
  std::vector<std::vector<Rational>> kernel;
  for (ColIndex f = 0; f < ncols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(ncols_);
    x[f] = 1;
    for (const auto& [pc, i] : row_of_pivot) {
      auto it = std::lower_bound(rref[i].begin(), rref[i].end(), f,
                                 [](const Entry& e, ColIndex col) { return e.col < col; });
      if (it != rref[i].end() && it->col == f) x[pc] = -it->val;
    }
    kernel.push_back(std::move(x));
  }
  return kernel;
}

}  // namespace rescal
