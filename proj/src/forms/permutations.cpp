#include "ecsk/forms/permutations.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecsk::forms {
namespace {

int parity(const int* p, int n) {
  int inversions = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (p[i] > p[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

struct Tables {
  std::array<std::vector<int>, 5> sorted;
  std::array<std::vector<Image>, 5> images;
  std::array<std::array<std::vector<Shuffle>, 5>, 5> shuffles;
  std::array<std::vector<Permutation>, 5> perms;

  Tables() {
    for (int n = 0; n <= 4; ++n) {
      const int size = pow4(n);
      images[n].resize(size);
      for (int flat = 0; flat < size; ++flat) {
        const auto d = unflatten(flat, n);
        bool increasing = true;
        bool repeated = false;
        for (int i = 0; i + 1 < n; ++i) increasing = increasing && d[i] < d[i + 1];
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) repeated = repeated || d[i] == d[j];
        }
        if (increasing) sorted[n].push_back(flat);
        if (repeated) continue;
        std::array<int, 4> s{};
        std::copy_n(d.begin(), n, s.begin());
        std::sort(s.begin(), s.begin() + n);
        images[n][flat] = Image{flatten(s.data(), n), parity(d.data(), n)};
      }

      std::array<int, 4> p{0, 1, 2, 3};
      do {
        perms[n].push_back(Permutation{p, parity(p.data(), n)});
      } while (std::next_permutation(p.begin(), p.begin() + n));
    }

    for (int k = 0; k <= 4; ++k) {
      for (int l = 0; k + l <= 4; ++l) {
        const int n = k + l;
        for (int mask = 0; mask < (1 << n); ++mask) {
          if (__builtin_popcount(static_cast<unsigned>(mask)) != k) continue;
          Shuffle s;
          std::array<int, 4> order{};
          int a = 0;
          int b = 0;
          for (int i = 0; i < n; ++i) {
            if (mask & (1 << i)) s.first[a++] = i;
            else s.second[b++] = i;
          }
          std::copy_n(s.first.begin(), k, order.begin());
          std::copy_n(s.second.begin(), l, order.begin() + k);
          s.sign = parity(order.data(), n);
          shuffles[k][l].push_back(s);
        }
      }
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

void check_block(int n) {
  if (n < 0 || n > 4) throw std::out_of_range("antisymmetric block length must lie in [0, 4]");
}

}  // namespace

std::array<int, kMaxBlock> unflatten(int flat, int n) {
  std::array<int, kMaxBlock> d{};
  for (int i = n - 1; i >= 0; --i) {
    d[i] = flat % 4;
    flat /= 4;
  }
  return d;
}

int flatten(const int* digits, int n) {
  int flat = 0;
  for (int i = 0; i < n; ++i) flat = flat * 4 + digits[i];
  return flat;
}

const std::vector<int>& sorted_tuples(int n) {
  check_block(n);
  return tables().sorted[n];
}

const std::vector<Image>& antisym_images(int n) {
  check_block(n);
  return tables().images[n];
}

const std::vector<Shuffle>& shuffles(int k, int l) {
  check_block(k);
  check_block(l);
  check_block(k + l);
  return tables().shuffles[k][l];
}

const std::vector<Permutation>& permutations(int n) {
  check_block(n);
  return tables().perms[n];
}

}  // namespace ecsk::forms
