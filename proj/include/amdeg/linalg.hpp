#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "field.hpp"

namespace amdeg {

/// Sparse vector over GF(p) with strictly increasing indices and nonzero values.
struct SparseVector {
  std::vector<std::uint32_t> idx;
  std::vector<Coeff> val;

  bool empty() const { return idx.empty(); }
  std::size_t size() const { return idx.size(); }
  void push(std::uint32_t i, Coeff v) {
    idx.push_back(i);
    val.push_back(v);
  }
};

/// Incremental row echelon form with pivots restricted to indices below
/// `pivot_limit`. Entries at or above the limit are carried along, which is
/// how kernels are tracked (see `kernel`).
class Echelon {
 public:
  Echelon(std::size_t dim, const PrimeField& field, std::size_t pivot_limit)
      : field_(field), limit_(pivot_limit), acc_(dim, 0), mark_(dim, 0), pivot_(pivot_limit, -1) {}
  Echelon(std::size_t dim, const PrimeField& field) : Echelon(dim, field, dim) {}

  std::size_t rank() const { return rows_.size(); }

  /// Reduces v against the stored rows. If the residual is nonzero below the
  /// pivot limit it becomes a new row and `true` is returned; otherwise the
  /// residual (entries at or above the limit only) is written to `residual`.
  bool insert(const SparseVector& v, SparseVector* residual = nullptr) {
    SparseVector r;
    std::uint32_t lead = reduce_into(v, r);
    if (lead == kNone) {
      if (residual) *residual = std::move(r);
      return false;
    }
    const Coeff inv = field_.inv(r.val[0]);
    for (auto& x : r.val) x = field_.mul(x, inv);
    pivot_[lead] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  /// True iff v lies in the span of the stored rows (below the limit).
  bool contains(const SparseVector& v) {
    SparseVector r;
    return reduce_into(v, r) == kNone;
  }

 private:
  static constexpr std::uint32_t kNone = 0xFFFFFFFFu;

  void touch(std::uint32_t i, std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>>& heap,
             std::vector<std::uint32_t>& touched) {
    if (!mark_[i]) {
      mark_[i] = 1;
      touched.push_back(i);
      if (i < limit_) heap.push(i);
    }
  }

  // Returns the first index below the limit that survives reduction, or kNone.
  std::uint32_t reduce_into(const SparseVector& v, SparseVector& out) {
    const std::uint64_t p = field_.modulus();
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
    std::vector<std::uint32_t> touched;
    for (std::size_t k = 0; k < v.size(); ++k) {
      acc_[v.idx[k]] = v.val[k];
      touch(v.idx[k], heap, touched);
    }
    std::uint32_t lead = kNone;
    while (!heap.empty()) {
      std::uint32_t i = heap.top();
      heap.pop();
      std::uint64_t a = acc_[i] % p;
      acc_[i] = a;
      if (a == 0) continue;
      std::int64_t row = pivot_[i];
      if (row < 0) {
        lead = i;
        break;
      }
      const SparseVector& rv = rows_[static_cast<std::size_t>(row)];
      const std::uint64_t factor = p - a;
      acc_[i] = 0;
      for (std::size_t k = 1; k < rv.size(); ++k) {
        std::uint32_t j = rv.idx[k];
        // Each product is below 2^62; reduce before the sum can pass 2^64.
        std::uint64_t sum = acc_[j] + factor * rv.val[k];
        if (sum >= (std::uint64_t{1} << 63)) sum %= p;
        acc_[j] = sum;
        touch(j, heap, touched);
      }
    }
    std::sort(touched.begin(), touched.end());
    out.idx.clear();
    out.val.clear();
    for (std::uint32_t i : touched) {
      std::uint64_t a = acc_[i] % p;
      if (a && (lead != kNone || i >= limit_) && (lead == kNone || i >= lead)) out.push(i, static_cast<Coeff>(a));
      acc_[i] = 0;
      mark_[i] = 0;
    }
    return lead;
  }

  PrimeField field_;
  std::size_t limit_;
  std::vector<std::uint64_t> acc_;
  std::vector<std::uint8_t> mark_;
  std::vector<std::int64_t> pivot_;
  std::vector<SparseVector> rows_;
};

/// Rank of the matrix whose columns are given (each of dimension `dim`).
inline std::size_t rank(const std::vector<SparseVector>& columns, std::size_t dim, const PrimeField& field) {
  Echelon e(dim, field);
  for (const auto& c : columns) e.insert(c);
  return e.rank();
}

/// Basis of {y : sum_j y_j * columns[j] = 0}. Each returned vector has its
/// largest index j with coefficient 1, one per dependent column.
inline std::vector<SparseVector> kernel(const std::vector<SparseVector>& columns, std::size_t dim,
                                        const PrimeField& field) {
  const std::size_t n = columns.size();
  Echelon e(dim + n, field, dim);
  std::vector<SparseVector> out;
  for (std::size_t j = 0; j < n; ++j) {
    SparseVector v = columns[j];
    v.push(static_cast<std::uint32_t>(dim + j), 1);
    SparseVector res;
    if (!e.insert(v, &res)) {
      for (auto& i : res.idx) i -= static_cast<std::uint32_t>(dim);
      out.push_back(std::move(res));
    }
  }
  return out;
}

}  // namespace amdeg
