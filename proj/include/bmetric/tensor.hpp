#pragma once

#include "bmetric/scalar.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmetric {

/// Number of contravariant (upper) and covariant (lower) slots.
struct Valence {
  int contravariant = 0;
  int covariant = 0;

  int rank() const { return contravariant + covariant; }
  friend bool operator==(const Valence&, const Valence&) = default;
};

using Vector = std::vector<Scalar>;
using MultiIndex = std::vector<std::size_t>;

/// Dense component array in the fixed basis e_1..e_dim.
///
/// Index convention, used everywhere in the library: contravariant slots
/// come first, then covariant slots in argument order, all zero-based.
/// So phi(k, i) is the e_k-component of phi(e_i), a connection coefficient
/// Gamma(k, i, j) is the e_k-component of D_{e_i} e_j, and a (0,3) tensor
/// T(i, j, k) is T(e_i, e_j, e_k).
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::size_t dim, Valence valence);

  std::size_t dim() const { return dim_; }
  Valence valence() const { return valence_; }
  std::size_t rank() const { return static_cast<std::size_t>(valence_.rank()); }
  std::size_t size() const { return components_.size(); }

  template <class... Index>
  Scalar& operator()(Index... index) {
    return components_[offset({static_cast<std::size_t>(index)...})];
  }
  template <class... Index>
  const Scalar& operator()(Index... index) const {
    return components_[offset({static_cast<std::size_t>(index)...})];
  }

  Scalar& at(std::span<const std::size_t> index) { return components_[offset(index)]; }
  const Scalar& at(std::span<const std::size_t> index) const {
    return components_[offset(index)];
  }

  std::span<const Scalar> components() const { return components_; }
  std::span<Scalar> components() { return components_; }

  /// Multi-index of the component stored at flat position `flat`.
  MultiIndex index_of(std::size_t flat) const;

  bool is_zero() const;

  /// First multi-index with a nonzero component, if any.
  std::optional<MultiIndex> first_nonzero() const;

  friend bool operator==(const Tensor& a, const Tensor& b);

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  Tensor& operator*=(const Scalar& factor);

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Scalar& s, Tensor t) { return t *= s; }

  /// Applies f to every component (e.g. substitution or evaluation).
  template <class F>
  Tensor map(F&& f) const {
    Tensor out(dim_, valence_);
    for (std::size_t i = 0; i < components_.size(); ++i) out.components_[i] = f(components_[i]);
    return out;
  }

 private:
  std::size_t offset(std::span<const std::size_t> index) const;
  std::size_t offset(std::initializer_list<std::size_t> index) const {
    return offset(std::span<const std::size_t>(index.begin(), index.size()));
  }

  std::size_t dim_ = 0;
  Valence valence_{};
  std::vector<Scalar> components_;
};

/// Calls f(index) for every multi-index of length `rank` over 0..dim-1,
/// last index varying fastest.
template <class F>
void for_each_index(std::size_t dim, std::size_t rank, F&& f) {
  MultiIndex index(rank, 0);
  if (dim == 0) return;
  for (;;) {
    f(static_cast<const MultiIndex&>(index));
    std::size_t slot = rank;
    while (slot > 0) {
      --slot;
      if (++index[slot] < dim) break;
      index[slot] = 0;
      if (slot == 0) return;
    }
    if (rank == 0) return;
  }
}

/// Basis vector e_i (zero-based).
Vector basis_vector(std::size_t dim, std::size_t i);

/// 1-based rendering such as "(1,2,5)".
std::string format_index(const MultiIndex& index);

}  // namespace bmetric
