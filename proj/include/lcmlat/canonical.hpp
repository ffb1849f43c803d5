#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lcmlat/lattice.hpp"

namespace lcmlat {

/// Byte string identifying a lattice up to isomorphism.
///
/// Layout: two bytes of size (little endian) followed by the order matrix
/// under the canonical labeling, row-major, packed eight entries per byte.
struct CanonicalForm {
  std::string key;

  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(key.size() * 2);
    for (unsigned char c : key) {
      out.push_back(kDigits[c >> 4]);
      out.push_back(kDigits[c & 15]);
    }
    return out;
  }

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

// Individualization-refinement search for the labeling whose serialized order
// matrix is lexicographically smallest. Colors are cell start positions of an
// ordered partition; refinement only ever splits cells, and cell order depends
// on isomorphism-invariant data, so the set of leaves is permuted along with
// the input and the minimum is a class invariant.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Lattice& l) : l_(l), n_(l.size()) {}

  void run() {
    std::vector<std::size_t> color(n_, 0);
    search(std::move(color));
  }

  const std::string& best_key() const { return best_; }
  const std::vector<std::size_t>& best_labeling() const { return best_labeling_; }

 private:
  using Signature = std::vector<std::uint32_t>;

  void refine(std::vector<std::size_t>& color) const {
    std::vector<std::size_t> order(n_);
    std::vector<Signature> sig(n_);
    std::size_t cells = count_cells(color);
    while (true) {
      for (std::size_t v = 0; v < n_; ++v) {
        Signature& s = sig[v];
        s.clear();
        s.push_back(static_cast<std::uint32_t>(color[v]));
        const std::size_t head = s.size();
        l_.up_set(v).for_each([&](std::size_t u) {
          if (u != v) s.push_back(static_cast<std::uint32_t>(color[u]));
        });
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(head), s.end());
        s.push_back(UINT32_MAX);
        const std::size_t mid = s.size();
        l_.down_set(v).for_each([&](std::size_t u) {
          if (u != v) s.push_back(static_cast<std::uint32_t>(color[u]));
        });
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(mid), s.end());
        s.push_back(UINT32_MAX);
        const std::size_t tail = s.size();
        for (auto u : l_.upper_covers(v)) s.push_back(static_cast<std::uint32_t>(color[u]));
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(tail), s.end());
      }
      for (std::size_t i = 0; i < n_; ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
      std::vector<std::size_t> next(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t v = order[i];
        next[v] = (i > 0 && sig[order[i - 1]] == sig[v]) ? next[order[i - 1]] : i;
      }
      color.swap(next);
      const std::size_t refined = count_cells(color);
      if (refined == cells) return;
      cells = refined;
    }
  }

  static std::size_t count_cells(const std::vector<std::size_t>& color) {
    std::vector<bool> used(color.size(), false);
    std::size_t c = 0;
    for (auto x : color)
      if (!used[x]) used[x] = true, ++c;
    return c;
  }

  void search(std::vector<std::size_t> color) {
    refine(color);
    std::vector<std::size_t> cell_size(n_, 0);
    for (auto c : color) ++cell_size[c];
    std::size_t target = n_;
    for (std::size_t c = 0; c < n_; ++c) {
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target == n_) {
      leaf(color);
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      std::vector<std::size_t> child = color;
      for (std::size_t u = 0; u < n_; ++u)
        if (u != v && color[u] == target) child[u] = target + 1;
      search(std::move(child));
    }
  }

  void leaf(const std::vector<std::size_t>& position) {
    std::vector<std::size_t> inverse(n_);
    for (std::size_t v = 0; v < n_; ++v) inverse[position[v]] = v;
    std::string key(2 + (n_ * n_ + 7) / 8, '\0');
    key[0] = static_cast<char>(n_ & 0xff);
    key[1] = static_cast<char>(n_ >> 8);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j, ++bit) {
        if (l_.leq(inverse[i], inverse[j])) key[2 + bit / 8] = static_cast<char>(key[2 + bit / 8] | (1 << (7 - bit % 8)));
      }
    }
    if (best_.empty() || key < best_) {
      best_ = std::move(key);
      best_labeling_ = position;
    }
  }

  const Lattice& l_;
  std::size_t n_;
  std::string best_;
  std::vector<std::size_t> best_labeling_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Lattice& l) {
  detail::CanonicalSearch s(l);
  s.run();
  return {s.best_key()};
}

/// Canonical form together with the lattice relabeled into canonical position.
struct CanonicalLattice {
  CanonicalForm form;
  Lattice lattice;
};

inline CanonicalLattice canonicalize(const Lattice& l) {
  detail::CanonicalSearch s(l);
  s.run();
  return {{s.best_key()}, l.relabeled(s.best_labeling())};
}

inline bool isomorphic(const Lattice& a, const Lattice& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace lcmlat
