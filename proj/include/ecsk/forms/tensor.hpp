#pragma once
// Plain indexed tensors (no symmetry assumed) with per-slot index type, for
// component quantities such as Christoffel symbols or the Einstein tensor.

#include <array>
#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "ecsk/forms/forms.hpp"

namespace ecsk::forms {

enum class Slot { InternalUpper, InternalLower, SpacetimeUpper, SpacetimeLower };

template <class T>
using Matrix4 = std::array<std::array<T, 4>, 4>;

template <class T>
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<Slot> slots) : slots_(std::move(slots)) {
    if (slots_.size() > 6) throw FormError("tensor rank must not exceed 6");
    data_.assign(static_cast<std::size_t>(pow4(static_cast<int>(slots_.size()))), T{});
  }

  int rank() const { return static_cast<int>(slots_.size()); }
  const std::vector<Slot>& slots() const { return slots_; }

  T& operator()(std::initializer_list<int> idx) { return data_[flat(idx)]; }
  const T& operator()(std::initializer_list<int> idx) const { return data_[flat(idx)]; }
  T& at(int flat_index) { return data_[flat_index]; }
  const T& at(int flat_index) const { return data_[flat_index]; }

  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(value_of(v)));
    return m;
  }

  Tensor& operator+=(const Tensor& o) {
    require_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    require_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Tensor& operator*=(double s) {
    for (auto& v : data_) v = s * v;
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(double s, Tensor a) { return a *= s; }

 private:
  int flat(std::initializer_list<int> idx) const {
    if (static_cast<int>(idx.size()) != rank()) throw FormError("index count does not match tensor rank");
    int f = 0;
    for (int v : idx) {
      if (v < 0 || v > 3) throw FormError("tensor index out of range");
      f = f * 4 + v;
    }
    return f;
  }
  void require_same(const Tensor& o) const {
    if (slots_ != o.slots_) throw FormError("tensor slot mismatch");
  }

  std::vector<Slot> slots_;
  std::vector<T> data_;
};

inline Tensor<double> values(const Tensor<Jet>& t) {
  Tensor<double> out(t.slots());
  for (std::size_t i = 0; i < t.data().size(); ++i) out.data()[i] = t.data()[i].value();
  return out;
}
inline const Tensor<double>& values(const Tensor<double>& t) { return t; }

enum class Direction { Raise, Lower };

// Moves one slot with a metric. Internal slots always use eta. Spacetime
// slots use `metric`, which must be g^{-1} to raise and g to lower.
template <class T>
Tensor<T> raise_lower(const Tensor<T>& t, int slot, Direction dir, const Matrix4<T>* metric = nullptr) {
  if (slot < 0 || slot >= t.rank()) throw FormError("slot out of range");
  const Slot kind = t.slots()[slot];
  const bool internal = kind == Slot::InternalUpper || kind == Slot::InternalLower;
  const bool is_upper = kind == Slot::InternalUpper || kind == Slot::SpacetimeUpper;
  if ((dir == Direction::Raise) == is_upper) throw FormError("slot already has the requested position");
  if (!internal && metric == nullptr) throw FormError("spacetime slot needs a metric");

  std::vector<Slot> slots = t.slots();
  if (internal) slots[slot] = is_upper ? Slot::InternalLower : Slot::InternalUpper;
  else slots[slot] = is_upper ? Slot::SpacetimeLower : Slot::SpacetimeUpper;
  Tensor<T> out(slots);

  const int n = t.rank();
  const int stride = pow4(n - 1 - slot);
  for (int f = 0; f < pow4(n); ++f) {
    const int a = (f / stride) % 4;
    const int base = f - a * stride;
    T acc{};
    for (int c = 0; c < 4; ++c) {
      if (internal) {
        if (c == a) add_signed(acc, t.at(base + c * stride), static_cast<int>(eta_diag(a)));
      } else {
        mul_add(acc, (*metric)[a][c], t.at(base + c * stride));
      }
    }
    out.at(f) = acc;
  }
  return out;
}

}  // namespace ecsk::forms
