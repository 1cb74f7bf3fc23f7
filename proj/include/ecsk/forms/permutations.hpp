#pragma once
// Index bookkeeping for totally antisymmetric blocks of 4-valued indices.
// A block of n indices is flattened base 4, first index most significant.

#include <array>
#include <vector>

namespace ecsk::forms {

inline constexpr int kDim = 4;
inline constexpr int kMaxBlock = 8;

constexpr int pow4(int n) { return n == 0 ? 1 : 4 * pow4(n - 1); }

// Digits of a flat block index.
std::array<int, kMaxBlock> unflatten(int flat, int n);
int flatten(const int* digits, int n);

// Flat indices of the strictly increasing tuples of length n (n <= 4).
const std::vector<int>& sorted_tuples(int n);

struct Image {
  int canonical = 0;  // flat index of the sorted rearrangement
  int sign = 0;       // parity of the sorting permutation; 0 if an index repeats
};

// For every flat index of length n (n <= 4).
const std::vector<Image>& antisym_images(int n);

// A (k,l)-shuffle of k+l ordered slots: the first factor takes `first`
// (increasing), the second the complement `second` (increasing).
struct Shuffle {
  std::array<int, 4> first{};
  std::array<int, 4> second{};
  int sign = 1;
};

const std::vector<Shuffle>& shuffles(int k, int l);

// All permutations of n slots (n <= 4) with their parity.
struct Permutation {
  std::array<int, 4> p{};
  int sign = 1;
};
const std::vector<Permutation>& permutations(int n);

}  // namespace ecsk::forms
