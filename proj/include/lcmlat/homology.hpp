#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcmlat/lattice.hpp"

namespace lcmlat {

/// A simplicial complex stored as all of its faces, graded by dimension.
/// faces[d + 1] holds the d-dimensional faces; faces[0] is {∅}. Each face is a
/// strictly increasing list of positions into `vertices`.
struct SimplicialComplex {
  std::vector<Element> vertices;
  std::vector<std::vector<std::vector<std::uint16_t>>> faces;

  /// Dimension of the largest face; -1 for {∅}.
  int dimension() const { return static_cast<int>(faces.size()) - 2; }
  std::size_t face_count(int dim) const {
    const auto idx = static_cast<std::size_t>(dim + 1);
    return idx < faces.size() ? faces[idx].size() : 0;
  }
};

/// Order complex of the open interval (lo, hi): vertices strictly between,
/// faces the chains.
inline SimplicialComplex order_complex(const Lattice& l, std::size_t lo, std::size_t hi) {
  if (!l.less(lo, hi)) throw std::invalid_argument("order complex needs lo < hi");
  SimplicialComplex c;
  for (auto x : l.linear_extension())
    if (l.less(lo, x) && l.less(x, hi)) c.vertices.push_back(x);
  const std::size_t nv = c.vertices.size();
  c.faces.push_back({{}});
  // Chains are increasing in linear-extension position, so extend by later vertices.
  std::vector<std::vector<std::uint16_t>> frontier = c.faces[0];
  while (true) {
    std::vector<std::vector<std::uint16_t>> next;
    for (const auto& f : frontier) {
      const std::size_t start = f.empty() ? 0 : f.back() + std::size_t{1};
      for (std::size_t j = start; j < nv; ++j) {
        if (!f.empty() && !l.less(c.vertices[f.back()], c.vertices[j])) continue;
        auto g = f;
        g.push_back(static_cast<std::uint16_t>(j));
        next.push_back(std::move(g));
      }
    }
    if (next.empty()) break;
    c.faces.push_back(next);
    frontier = std::move(next);
  }
  return c;
}

namespace detail {

struct ArithmeticOverflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}
inline boost::multiprecision::cpp_int checked_mul(const boost::multiprecision::cpp_int& a,
                                                  const boost::multiprecision::cpp_int& b) {
  return a * b;
}
inline boost::multiprecision::cpp_int checked_sub(const boost::multiprecision::cpp_int& a,
                                                  const boost::multiprecision::cpp_int& b) {
  return a - b;
}
inline std::int64_t abs_value(std::int64_t a) {
  if (a == INT64_MIN) throw ArithmeticOverflow{};
  return a < 0 ? -a : a;
}
inline boost::multiprecision::cpp_int abs_value(const boost::multiprecision::cpp_int& a) { return abs(a); }
inline std::int64_t gcd_value(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline boost::multiprecision::cpp_int gcd_value(const boost::multiprecision::cpp_int& a,
                                                const boost::multiprecision::cpp_int& b) {
  return gcd(a, b);
}

template <typename T>
using SparseRow = std::vector<std::pair<std::size_t, T>>;

// row := scale_row * row - scale_pivot * pivot, then divided by its content.
template <typename T>
SparseRow<T> combine(const SparseRow<T>& row, const T& scale_row, const SparseRow<T>& pivot, const T& scale_pivot) {
  SparseRow<T> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, checked_mul(row[i].second, scale_row));
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, checked_sub(T{0}, checked_mul(pivot[j].second, scale_pivot)));
      ++j;
    } else {
      T v = checked_sub(checked_mul(row[i].second, scale_row), checked_mul(pivot[j].second, scale_pivot));
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  T content{0};
  for (const auto& [c, v] : out) content = gcd_value(content, abs_value(v));
  if (content > 1)
    for (auto& e : out) e.second /= content;
  return out;
}

// Rank over the rationals by fraction-free elimination. Unit pivots are taken
// first (they never grow entries); otherwise the pivot of least magnitude.
template <typename T>
std::size_t sparse_rank(std::vector<SparseRow<T>> rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const auto& r) { return r.empty(); }), rows.end());
  std::size_t rank = 0;
  while (!rows.empty()) {
    std::size_t best_row = 0, best_pos = 0;
    T best_abs{-1};
    std::size_t best_len = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t p = 0; p < rows[r].size(); ++p) {
        const T a = abs_value(rows[r][p].second);
        if (best_abs < 0 || a < best_abs || (a == best_abs && rows[r].size() < best_len)) {
          best_abs = a;
          best_row = r;
          best_pos = p;
          best_len = rows[r].size();
        }
      }
      if (best_abs == 1 && best_len <= 2) break;
    }
    SparseRow<T> pivot = std::move(rows[best_row]);
    rows[best_row] = std::move(rows.back());
    rows.pop_back();
    const std::size_t col = pivot[best_pos].first;
    const T pv = pivot[best_pos].second;
    for (auto& r : rows) {
      auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
      if (it == r.end() || it->first != col) continue;
      const T w = it->second;
      r = combine(r, pv, pivot, w);
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(), [](const auto& r) { return r.empty(); }), rows.end());
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Rank over the rationals of an integer matrix given as sparse rows
/// (column-sorted). Runs in 64-bit arithmetic and redoes the computation with
/// arbitrary precision if an intermediate value overflows.
inline std::size_t rational_rank(const std::vector<detail::SparseRow<std::int64_t>>& rows) {
  try {
    return detail::sparse_rank(rows);
  } catch (const detail::ArithmeticOverflow&) {
    using Big = boost::multiprecision::cpp_int;
    std::vector<detail::SparseRow<Big>> big;
    big.reserve(rows.size());
    for (const auto& r : rows) {
      detail::SparseRow<Big> b;
      for (const auto& [c, v] : r) b.emplace_back(c, Big(v));
      big.push_back(std::move(b));
    }
    return detail::sparse_rank(std::move(big));
  }
}

/// Sparse rows of the boundary map from dim-faces to (dim-1)-faces.
inline std::vector<detail::SparseRow<std::int64_t>> boundary_rows(const SimplicialComplex& c, int dim) {
  std::vector<detail::SparseRow<std::int64_t>> rows;
  if (dim < 0 || c.face_count(dim) == 0) return rows;
  const auto& lower = c.faces[static_cast<std::size_t>(dim)];
  std::map<std::vector<std::uint16_t>, std::size_t> index;
  for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], i);
  for (const auto& f : c.faces[static_cast<std::size_t>(dim + 1)]) {
    detail::SparseRow<std::int64_t> row;
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto g = f;
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
      row.emplace_back(index.at(g), (i % 2 == 0) ? 1 : -1);
    }
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Ranks of reduced homology over the rationals; entry j + 1 is rank H̃_j for
/// j = -1 .. dimension().
inline std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& c) {
  const int top = c.dimension();
  // boundary_rank[d + 1] = rank of ∂_d : C_d -> C_{d-1}; ∂_{-1} = 0.
  std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(top + 3), 0);
  for (int d = 0; d <= top; ++d) boundary_rank[static_cast<std::size_t>(d + 1)] = rational_rank(boundary_rows(c, d));
  std::vector<std::size_t> out;
  for (int j = -1; j <= top; ++j) {
    const std::size_t f = c.face_count(j);
    out.push_back(f - boundary_rank[static_cast<std::size_t>(j + 1)] - boundary_rank[static_cast<std::size_t>(j + 2)]);
  }
  return out;
}

}  // namespace lcmlat
