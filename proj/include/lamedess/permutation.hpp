#ifndef LAMEDESS_PERMUTATION_HPP
#define LAMEDESS_PERMUTATION_HPP

#include <algorithm>
#include <vector>

namespace lamedess {

// Permutations are one-line vectors over 0..n-1: p[i] is the image of i.
using Perm = std::vector<int>;

bool is_permutation(const Perm& p);

inline Perm identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

// a after b: (a*b)(i) = a(b(i)).
inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

// t * p * t^-1.
inline Perm conjugate(const Perm& p, const Perm& t) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[t[i]] = t[p[i]];
  return r;
}

std::vector<std::vector<int>> cycles_of(const Perm& p);

// Sorted ascending multiset of cycle lengths (fixed points count as 1).
std::vector<int> cycle_type(const Perm& p);

int cycle_count(const Perm& p);

// Permutation from disjoint cycles over 0..n-1; unmentioned points are fixed.
Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

}  // namespace lamedess

#endif
