#include "superleib/sparse_vector.hpp"

namespace superleib {

SparseVector SparseVector::unit(std::size_t ambient_dim, std::size_t index, const Scalar& coeff) {
  SparseVector v(ambient_dim);
  v.set(index, coeff);
  return v;
}

SparseVector SparseVector::from_dense(const std::vector<Scalar>& values) {
  SparseVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v.set(i, values[i]);
  return v;
}

void SparseVector::check_index(std::size_t index) const {
  if (index >= dim_)
    throw Error("dimension_mismatch", "index " + std::to_string(index) +
                                          " out of range for dimension " + std::to_string(dim_));
}

void SparseVector::check_same_dim(const SparseVector& other) const {
  if (other.dim_ != dim_)
    throw Error("dimension_mismatch", "vector dimensions differ: " + std::to_string(dim_) +
                                          " vs " + std::to_string(other.dim_));
}

Scalar SparseVector::at(std::size_t index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? Scalar(0) : it->second;
}

const Scalar* SparseVector::find(std::size_t index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? nullptr : &it->second;
}

void SparseVector::set(std::size_t index, const Scalar& value) {
  check_index(index);
  if (sgn(value) == 0) {
    entries_.erase(index);
  } else {
    entries_[index] = value;
  }
}

void SparseVector::add(std::size_t index, const Scalar& value) {
  if (sgn(value) == 0) return;
  check_index(index);
  auto [it, inserted] = entries_.try_emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) entries_.erase(it);
  }
}

void SparseVector::add_scaled(const SparseVector& other, const Scalar& factor) {
  check_same_dim(other);
  if (sgn(factor) == 0) return;
  for (const auto& [i, c] : other.entries_) add(i, c * factor);
}

SparseVector& SparseVector::operator+=(const SparseVector& other) {
  check_same_dim(other);
  for (const auto& [i, c] : other.entries_) add(i, c);
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& other) {
  check_same_dim(other);
  for (const auto& [i, c] : other.entries_) add(i, -c);
  return *this;
}

SparseVector& SparseVector::operator*=(const Scalar& factor) {
  if (sgn(factor) == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [i, c] : entries_) c *= factor;
  return *this;
}

bool operator<(const SparseVector& a, const SparseVector& b) {
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  for (; ia != a.entries_.end() && ib != b.entries_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.entries_.end() && ib != b.entries_.end();
}

std::vector<Scalar> SparseVector::to_dense() const {
  std::vector<Scalar> out(dim_);
  for (const auto& [i, c] : entries_) out[i] = c;
  return out;
}

std::string format_vector(const SparseVector& v, const std::vector<std::string>& labels) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : v) {
    std::string name = i < labels.size() ? labels[i] : "e" + std::to_string(i);
    Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += name;
    first = false;
  }
  return out;
}

}  // namespace superleib
