#include "bmetric/tensor.hpp"

#include <sstream>

namespace bmetric {

Tensor::Tensor(std::size_t dim, Valence valence) : dim_(dim), valence_(valence) {
  if (valence.contravariant < 0 || valence.covariant < 0)
    throw std::invalid_argument("negative valence");
  std::size_t n = 1;
  for (int i = 0; i < valence.rank(); ++i) n *= dim;
  components_.resize(n);
}

std::size_t Tensor::offset(std::span<const std::size_t> index) const {
  if (index.size() != rank())
    throw std::out_of_range("tensor index has " + std::to_string(index.size()) +
                            " slots, expected " + std::to_string(rank()));
  std::size_t flat = 0;
  for (const auto i : index) {
    if (i >= dim_) throw std::out_of_range("tensor index out of range");
    flat = flat * dim_ + i;
  }
  return flat;
}

MultiIndex Tensor::index_of(std::size_t flat) const {
  MultiIndex index(rank());
  for (std::size_t slot = rank(); slot > 0; --slot) {
    index[slot - 1] = flat % dim_;
    flat /= dim_;
  }
  return index;
}

bool Tensor::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<MultiIndex> Tensor::first_nonzero() const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (!components_[i].is_zero()) return index_of(i);
  return std::nullopt;
}

bool operator==(const Tensor& a, const Tensor& b) {
  return a.dim_ == b.dim_ && a.valence_ == b.valence_ && a.components_ == b.components_;
}

Tensor& Tensor::operator+=(const Tensor& other) {
  if (dim_ != other.dim_ || !(valence_ == other.valence_))
    throw std::invalid_argument("adding tensors of different shape");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += other.components_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  if (dim_ != other.dim_ || !(valence_ == other.valence_))
    throw std::invalid_argument("subtracting tensors of different shape");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= other.components_[i];
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& factor) {
  for (auto& c : components_) c *= factor;
  return *this;
}

Vector basis_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = Scalar(1L);
  return v;
}

std::string format_index(const MultiIndex& index) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < index.size(); ++i) out << (i ? "," : "") << index[i] + 1;
  out << ')';
  return out.str();
}

}  // namespace bmetric
