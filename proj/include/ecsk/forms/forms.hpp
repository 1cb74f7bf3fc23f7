#pragma once
// Differential forms with values in tensors over the Minkowski fiber.
//
// A MixedForm of degree k and internal rank r holds components
// x^{a_1..a_r}_{mu_1..mu_k}, densely, internal digits first. Spacetime indices
// are always antisymmetric; the internal block is antisymmetric unless the
// form was built as a plain tensor product. Components are the full
// antisymmetric ones, alpha = (1/k!) alpha_{mu..} dx^mu ^ ..., so
// (alpha ^ beta)_{01} = alpha_0 beta_1 - alpha_1 beta_0.
//
// Operations compute only sorted (canonical) index tuples and copy the rest
// with signs, so stored antisymmetry is exact.

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecsk/exprkit/jet.hpp"
#include "ecsk/forms/permutations.hpp"

namespace ecsk::forms {

using exprkit::Jet;

enum class Variance { Upper, Lower };

class FormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// eta = diag(1, 1, 1, -1)
constexpr double eta_diag(int a) { return a == 3 ? -1.0 : 1.0; }
constexpr double eta(int a, int b) { return a == b ? eta_diag(a) : 0.0; }

// Levi-Civita symbol with all indices down, epsilon_{0123} = +1.
constexpr int epsilon(int a, int b, int c, int d) {
  const int p[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) sign = -sign;
    }
  }
  return sign;
}

// All indices raised with eta: one factor of det(eta) = -1.
constexpr int epsilon_upper(int a, int b, int c, int d) { return -epsilon(a, b, c, d); }

inline double value_of(double x) { return x; }
inline double value_of(const Jet& j) { return j.value(); }

inline void mul_add(double& y, double a, double b) { y = y + a * b; }
inline void mul_add(Jet& y, const Jet& a, const Jet& b) { fma_into(y, a, b); }

template <class T>
T signed_copy(const T& v, int sign) {
  if (sign > 0) return v;
  if (sign < 0) return -v;
  return T{};
}

template <class T>
void add_signed(T& acc, const T& v, int sign) {
  if (sign > 0) acc += v;
  else if (sign < 0) acc -= v;
}

template <class T>
class MixedForm {
 public:
  MixedForm() : MixedForm(0, 0) {}
  MixedForm(int degree, int rank, Variance variance = Variance::Upper, bool internal_antisymmetric = true)
      : degree_(degree), rank_(rank), variance_(variance), antisym_(internal_antisymmetric || rank <= 1) {
    if (degree < 0 || degree > 4) throw FormError("form degree must lie in [0, 4]");
    if (rank < 0 || rank > 4) throw FormError("internal rank must lie in [0, 4]");
    data_.assign(static_cast<std::size_t>(pow4(degree + rank)), T{});
  }

  int degree() const { return degree_; }
  int rank() const { return rank_; }
  Variance variance() const { return variance_; }
  bool internal_antisymmetric() const { return antisym_; }
  int internal_size() const { return pow4(rank_); }
  int spacetime_size() const { return pow4(degree_); }

  T& at(int internal_flat, int st_flat) { return data_[internal_flat * pow4(degree_) + st_flat]; }
  const T& at(int internal_flat, int st_flat) const { return data_[internal_flat * pow4(degree_) + st_flat]; }

  const T& get(std::initializer_list<int> internal, std::initializer_list<int> st) const {
    check_lengths(internal, st);
    return at(flatten(internal.begin(), rank_), flatten(st.begin(), degree_));
  }

  // Writes the component and every image under the antisymmetries.
  void set(std::initializer_list<int> internal, std::initializer_list<int> st, const T& v) {
    check_lengths(internal, st);
    const int fi = flatten(internal.begin(), rank_);
    const int fm = flatten(st.begin(), degree_);
    const Image ii = antisym_ ? antisym_images(rank_)[fi] : Image{fi, 1};
    const Image im = antisym_images(degree_)[fm];
    if (ii.sign == 0 || im.sign == 0) {
      if (value_of(v) != 0.0) throw FormError("nonzero component on a repeated antisymmetric index");
      return;
    }
    at(ii.canonical, im.canonical) = signed_copy(v, ii.sign * im.sign);
    fill_images();
  }

  // Flat internal indices to compute: sorted tuples when antisymmetric.
  std::vector<int> canonical_internal() const {
    if (antisym_) return sorted_tuples(rank_);
    std::vector<int> all(pow4(rank_));
    for (int i = 0; i < pow4(rank_); ++i) all[i] = i;
    return all;
  }

  // Rebuilds every non-canonical component from the canonical ones.
  void fill_images() {
    const auto& st_img = antisym_images(degree_);
    for (int i = 0; i < pow4(rank_); ++i) {
      const Image ii = antisym_ ? antisym_images(rank_)[i] : Image{i, 1};
      for (int m = 0; m < pow4(degree_); ++m) {
        const Image im = st_img[m];
        if (i == ii.canonical && m == im.canonical) continue;
        at(i, m) = signed_copy(at(ii.canonical, im.canonical), ii.sign * im.sign);
      }
    }
  }

  // Builds a form from dense components, rejecting input that violates the
  // antisymmetries by more than `tol` (compared on values).
  static MixedForm from_dense(int degree, int rank, Variance variance, bool internal_antisymmetric,
                              std::vector<T> data, double tol = 0.0) {
    MixedForm f(degree, rank, variance, internal_antisymmetric);
    if (data.size() != f.data_.size()) throw FormError("dense component count mismatch");
    f.data_ = std::move(data);
    for (int i = 0; i < pow4(rank); ++i) {
      const Image ii = f.antisym_ ? antisym_images(rank)[i] : Image{i, 1};
      for (int m = 0; m < pow4(degree); ++m) {
        const Image im = antisym_images(degree)[m];
        const double expected = ii.sign * im.sign * value_of(f.at(ii.canonical, im.canonical));
        if (std::abs(value_of(f.at(i, m)) - expected) > tol) {
          throw FormError("components are not antisymmetric at internal " + std::to_string(i) + ", spacetime " +
                          std::to_string(m));
        }
      }
    }
    f.fill_images();
    return f;
  }

  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  bool same_shape(const MixedForm& o) const {
    return degree_ == o.degree_ && rank_ == o.rank_ && (rank_ == 0 || variance_ == o.variance_);
  }

  MixedForm& operator+=(const MixedForm& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    antisym_ = antisym_ && o.antisym_;
    return *this;
  }
  MixedForm& operator-=(const MixedForm& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    antisym_ = antisym_ && o.antisym_;
    return *this;
  }
  MixedForm& operator*=(double s) {
    for (auto& v : data_) v = s * v;
    return *this;
  }
  friend MixedForm operator+(MixedForm a, const MixedForm& b) { return a += b; }
  friend MixedForm operator-(MixedForm a, const MixedForm& b) { return a -= b; }
  friend MixedForm operator*(double s, MixedForm a) { return a *= s; }

  // Largest |component value|.
  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(value_of(v)));
    return m;
  }

  void set_internal_antisymmetric(bool flag) { antisym_ = flag || rank_ <= 1; }
  void set_variance(Variance v) { variance_ = v; }

 private:
  void check_lengths(std::initializer_list<int> internal, std::initializer_list<int> st) const {
    if (static_cast<int>(internal.size()) != rank_ || static_cast<int>(st.size()) != degree_) {
      throw FormError("index count does not match the form's shape");
    }
    for (int v : internal) {
      if (v < 0 || v > 3) throw FormError("internal index out of range");
    }
    for (int v : st) {
      if (v < 0 || v > 3) throw FormError("spacetime index out of range");
    }
  }
  void require_same_shape(const MixedForm& o) const {
    if (!same_shape(o)) throw FormError("shape mismatch in form arithmetic");
  }

  int degree_;
  int rank_;
  Variance variance_;
  bool antisym_;
  std::vector<T> data_;
};

// Values of a jet-valued form.
inline MixedForm<double> values(const MixedForm<Jet>& x) {
  MixedForm<double> out(x.degree(), x.rank(), x.variance(), x.internal_antisymmetric());
  for (std::size_t i = 0; i < x.data().size(); ++i) out.data()[i] = x.data()[i].value();
  return out;
}
inline const MixedForm<double>& values(const MixedForm<double>& x) { return x; }

namespace detail {

inline Variance combined_variance(int r1, Variance v1, int r2, Variance v2) {
  if (r1 == 0) return v2;
  if (r2 == 0) return v1;
  if (v1 != v2) throw FormError("internal blocks of different variance cannot be concatenated");
  return v1;
}

}  // namespace detail

// Wedge over spacetime indices, tensor product over internal ones: the
// result's internal indices are x's followed by y's.
template <class T>
MixedForm<T> tensor_wedge(const MixedForm<T>& x, const MixedForm<T>& y) {
  const int k = x.degree();
  const int l = y.degree();
  const int p = x.rank();
  const int q = y.rank();
  if (k + l > 4) throw FormError("wedge degree overflow");
  if (p + q > 4) throw FormError("wedge internal rank overflow");
  const bool antisym = p == 0 ? y.internal_antisymmetric() : (q == 0 ? x.internal_antisymmetric() : false);
  MixedForm<T> out(k + l, p + q, detail::combined_variance(p, x.variance(), q, y.variance()), antisym);
  const auto& sh = shuffles(k, l);
  for (int ci : out.canonical_internal()) {
    const int a = ci / pow4(q);
    const int b = ci % pow4(q);
    for (int m : sorted_tuples(k + l)) {
      const auto md = unflatten(m, k + l);
      T acc{};
      for (const Shuffle& s : sh) {
        int mx[4];
        int my[4];
        for (int i = 0; i < k; ++i) mx[i] = md[s.first[i]];
        for (int i = 0; i < l; ++i) my[i] = md[s.second[i]];
        const T term = x.at(a, flatten(mx, k)) * y.at(b, flatten(my, l));
        add_signed(acc, term, s.sign);
      }
      out.at(ci, m) = acc;
    }
  }
  out.fill_images();
  return out;
}

// Graded wedge over both index blocks. Internal and spacetime indices are
// each shuffle-antisymmetrized, and moving x's internal block past y's
// spacetime block costs (-1)^(p*l), so x^y = (-1)^((k+p)(l+q)) y^x.
template <class T>
MixedForm<T> internal_wedge(const MixedForm<T>& x, const MixedForm<T>& y) {
  const int k = x.degree();
  const int l = y.degree();
  const int p = x.rank();
  const int q = y.rank();
  if (k + l > 4) throw FormError("wedge degree overflow");
  if (p + q > 4) throw FormError("wedge internal rank overflow");
  if (!x.internal_antisymmetric() || !y.internal_antisymmetric()) {
    throw FormError("internal_wedge needs internally antisymmetric operands");
  }
  MixedForm<T> out(k + l, p + q, detail::combined_variance(p, x.variance(), q, y.variance()), true);
  const int graded = (p * l) % 2 == 0 ? 1 : -1;
  const auto& ish = shuffles(p, q);
  const auto& ssh = shuffles(k, l);
  for (int ci : sorted_tuples(p + q)) {
    const auto cd = unflatten(ci, p + q);
    for (int m : sorted_tuples(k + l)) {
      const auto md = unflatten(m, k + l);
      T acc{};
      for (const Shuffle& is : ish) {
        int ax[4];
        int ay[4];
        for (int i = 0; i < p; ++i) ax[i] = cd[is.first[i]];
        for (int i = 0; i < q; ++i) ay[i] = cd[is.second[i]];
        const int fa = flatten(ax, p);
        const int fb = flatten(ay, q);
        for (const Shuffle& ss : ssh) {
          int mx[4];
          int my[4];
          for (int i = 0; i < k; ++i) mx[i] = md[ss.first[i]];
          for (int i = 0; i < l; ++i) my[i] = md[ss.second[i]];
          add_signed(acc, x.at(fa, flatten(mx, k)) * y.at(fb, flatten(my, l)), graded * is.sign * ss.sign);
        }
      }
      out.at(ci, m) = acc;
    }
  }
  out.fill_images();
  return out;
}

// Sum over a fully contracted internal block, x^A ^ y_A. Blocks of equal
// variance are contracted through eta.
template <class T>
MixedForm<T> dot_wedge(const MixedForm<T>& x, const MixedForm<T>& y) {
  const int k = x.degree();
  const int l = y.degree();
  const int r = x.rank();
  if (y.rank() != r) throw FormError("dot_wedge needs equal internal ranks");
  if (k + l > 4) throw FormError("wedge degree overflow");
  const bool via_eta = r > 0 && x.variance() == y.variance();
  MixedForm<T> out(k + l, 0);
  const auto& sh = shuffles(k, l);
  for (int m : sorted_tuples(k + l)) {
    const auto md = unflatten(m, k + l);
    T acc{};
    for (int a = 0; a < pow4(r); ++a) {
      int sign = 1;
      if (via_eta) {
        const auto ad = unflatten(a, r);
        for (int i = 0; i < r; ++i) sign *= static_cast<int>(eta_diag(ad[i]));
      }
      for (const Shuffle& s : sh) {
        int mx[4];
        int my[4];
        for (int i = 0; i < k; ++i) mx[i] = md[s.first[i]];
        for (int i = 0; i < l; ++i) my[i] = md[s.second[i]];
        add_signed(acc, x.at(a, flatten(mx, k)) * y.at(a, flatten(my, l)), sign * s.sign);
      }
    }
    out.at(0, m) = acc;
  }
  out.fill_images();
  return out;
}

// y_{A} = epsilon_{A B} x^{B}, contracting all of x's internal indices into
// the trailing slots of epsilon. An upper block yields a lower one and vice
// versa (epsilon with raised indices carries the extra sign).
template <class T>
MixedForm<T> epsilon_contract(const MixedForm<T>& x) {
  const int n = x.rank();
  const int free = 4 - n;
  const int sign = x.variance() == Variance::Upper ? 1 : -1;
  MixedForm<T> out(x.degree(), free, x.variance() == Variance::Upper ? Variance::Lower : Variance::Upper, true);
  for (int ca : sorted_tuples(free)) {
    const auto ad = unflatten(ca, free);
    for (int m : sorted_tuples(x.degree())) {
      T acc{};
      for (int b = 0; b < pow4(n); ++b) {
        const auto bd = unflatten(b, n);
        int idx[4];
        for (int i = 0; i < free; ++i) idx[i] = ad[i];
        for (int i = 0; i < n; ++i) idx[free + i] = bd[i];
        const int e = epsilon(idx[0], idx[1], idx[2], idx[3]);
        if (e != 0) add_signed(acc, x.at(b, m), e * sign);
      }
      out.at(ca, m) = acc;
    }
  }
  out.fill_images();
  return out;
}

// Trace normalized so that the internal v0^v1^v2^v3 has trace 1:
// (1/4!) epsilon_{abcd} x^{abcd}.
template <class T>
MixedForm<T> epsilon_trace(const MixedForm<T>& x) {
  if (x.rank() != 4) throw FormError("epsilon_trace needs internal degree 4");
  return (1.0 / 24.0) * epsilon_contract(x);
}

// y^{A} = x^{A o perm}: slot i of the result reads slot perm[i] of x.
template <class T>
MixedForm<T> permute_internal(const MixedForm<T>& x, std::initializer_list<int> perm) {
  const int r = x.rank();
  if (static_cast<int>(perm.size()) != r) throw FormError("permutation length must equal the internal rank");
  MixedForm<T> out(x.degree(), r, x.variance(), x.internal_antisymmetric());
  const int* p = perm.begin();
  for (int a = 0; a < pow4(r); ++a) {
    const auto ad = unflatten(a, r);
    int src[4];
    for (int i = 0; i < r; ++i) src[p[i]] = ad[i];
    const int s = flatten(src, r);
    for (int m = 0; m < x.spacetime_size(); ++m) out.at(a, m) = x.at(s, m);
  }
  return out;
}

// Contracts internal slots i < j through eta.
template <class T>
MixedForm<T> contract_internal(const MixedForm<T>& x, int i, int j) {
  const int r = x.rank();
  if (i < 0 || j <= i || j >= r) throw FormError("contraction slots out of range");
  MixedForm<T> out(x.degree(), r - 2, x.variance(), false);
  for (int a = 0; a < out.internal_size(); ++a) {
    const auto ad = unflatten(a, r - 2);
    for (int c = 0; c < 4; ++c) {
      int full[4];
      for (int s = 0, n = 0; s < r; ++s) full[s] = (s == i || s == j) ? c : ad[n++];
      const int src = flatten(full, r);
      const int sign = static_cast<int>(eta_diag(c));
      for (int m = 0; m < x.spacetime_size(); ++m) add_signed(out.at(a, m), x.at(src, m), sign);
    }
  }
  return out;
}

// Moves every internal index with eta.
template <class T>
MixedForm<T> flip_internal(const MixedForm<T>& x) {
  MixedForm<T> out = x;
  out.set_variance(x.variance() == Variance::Upper ? Variance::Lower : Variance::Upper);
  for (int a = 0; a < x.internal_size(); ++a) {
    const auto ad = unflatten(a, x.rank());
    int sign = 1;
    for (int i = 0; i < x.rank(); ++i) sign *= static_cast<int>(eta_diag(ad[i]));
    if (sign < 0) {
      for (int m = 0; m < x.spacetime_size(); ++m) out.at(a, m) = -x.at(a, m);
    }
  }
  return out;
}

// (d x)_{mu_0..mu_k} = sum_i (-1)^i d_{mu_i} x_{..mu_i omitted..}. Lowers the
// jet order by one.
inline MixedForm<Jet> exterior_derivative(const MixedForm<Jet>& x) {
  const int k = x.degree();
  if (k >= 4) throw FormError("exterior derivative of a 4-form");
  MixedForm<Jet> out(k + 1, x.rank(), x.variance(), x.internal_antisymmetric());
  for (int ci : out.canonical_internal()) {
    for (int m : sorted_tuples(k + 1)) {
      const auto md = unflatten(m, k + 1);
      Jet acc{};
      for (int i = 0; i <= k; ++i) {
        int rest[4];
        for (int j = 0, n = 0; j <= k; ++j) {
          if (j != i) rest[n++] = md[j];
        }
        add_signed(acc, x.at(ci, flatten(rest, k)).derivative(md[i]), i % 2 == 0 ? 1 : -1);
      }
      out.at(ci, m) = acc;
    }
  }
  out.fill_images();
  return out;
}

namespace detail {

// (w^{s c} ^ x^{...})_M for a 1-form w at internal flat `wi`, accumulated
// with `sign` into acc.
template <class T>
void accumulate_one_form_wedge(T& acc, const MixedForm<T>& w, int wi, const MixedForm<T>& x, int xi,
                               const std::array<int, kMaxBlock>& md, int k, int sign) {
  for (int i = 0; i <= k; ++i) {
    int rest[4];
    for (int j = 0, n = 0; j <= k; ++j) {
      if (j != i) rest[n++] = md[j];
    }
    add_signed(acc, w.at(wi, md[i]) * x.at(xi, flatten(rest, k)), i % 2 == 0 ? sign : -sign);
  }
}

}  // namespace detail

// d_w x: each upper internal index a adds w^a_c ^ x^{..c..}, each lower one
// subtracts w^c_a ^ x_{..c..}, with w^a_c = w^{ab} eta_{bc}.
inline MixedForm<Jet> covariant_exterior_derivative(const MixedForm<Jet>& omega, const MixedForm<Jet>& x) {
  if (omega.degree() != 1 || omega.rank() != 2 || omega.variance() != Variance::Upper) {
    throw FormError("connection must be a 1-form with two upper internal indices");
  }
  const int k = x.degree();
  const int r = x.rank();
  MixedForm<Jet> out = exterior_derivative(x);
  const bool upper = x.variance() == Variance::Upper;
  for (int ci : out.canonical_internal()) {
    const auto ad = unflatten(ci, r);
    for (int m : sorted_tuples(k + 1)) {
      const auto md = unflatten(m, k + 1);
      Jet acc = out.at(ci, m);
      for (int s = 0; s < r; ++s) {
        for (int c = 0; c < 4; ++c) {
          auto sub = ad;
          sub[s] = c;
          const int xi = flatten(sub.data(), r);
          if (upper) {
            const int wi = ad[s] * 4 + c;
            detail::accumulate_one_form_wedge(acc, omega, wi, x, xi, md, k, static_cast<int>(eta_diag(c)));
          } else {
            const int wi = c * 4 + ad[s];
            detail::accumulate_one_form_wedge(acc, omega, wi, x, xi, md, k, -static_cast<int>(eta_diag(ad[s])));
          }
        }
      }
      out.at(ci, m) = acc;
    }
  }
  out.fill_images();
  return out;
}

// (i_xi x)_{mu_2..mu_k} = xi^mu x_{mu mu_2..mu_k}.
template <class T, class V>
MixedForm<T> interior_product(const std::array<V, 4>& xi, const MixedForm<T>& x) {
  const int k = x.degree();
  if (k == 0) throw FormError("interior product of a 0-form");
  MixedForm<T> out(k - 1, x.rank(), x.variance(), x.internal_antisymmetric());
  for (int ci : out.canonical_internal()) {
    for (int m : sorted_tuples(k - 1)) {
      const auto md = unflatten(m, k - 1);
      T acc{};
      for (int mu = 0; mu < 4; ++mu) {
        int full[4];
        full[0] = mu;
        for (int j = 0; j < k - 1; ++j) full[j + 1] = md[j];
        const T& comp = x.at(ci, flatten(full, k));
        if constexpr (std::is_same_v<T, V>) {
          mul_add(acc, xi[mu], comp);
        } else {
          acc += xi[mu] * comp;
        }
      }
      out.at(ci, m) = acc;
    }
  }
  out.fill_images();
  return out;
}

}  // namespace ecsk::forms
