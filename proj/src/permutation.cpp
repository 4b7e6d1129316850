#include "lamedess/permutation.hpp"

#include "lamedess/errors.hpp"

namespace lamedess {

bool is_permutation(const Perm& p) {
  std::vector<char> hit(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

std::vector<std::vector<int>> cycles_of(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(p.size(), 0);
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      c.push_back(j);
      j = p[j];
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> t;
  std::vector<char> seen(p.size(), 0);
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      ++len;
      j = p[j];
    }
    t.push_back(len);
  }
  std::sort(t.begin(), t.end());
  return t;
}

int cycle_count(const Perm& p) {
  int n = 0;
  std::vector<char> seen(p.size(), 0);
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (seen[i]) continue;
    ++n;
    for (int j = i; !seen[j]; j = p[j]) seen[j] = 1;
  }
  return n;
}

Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(n);
  std::vector<char> used(n, 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i];
      int b = c[(i + 1) % c.size()];
      if (a < 0 || a >= n || used[a])
        throw Error(Errc::NotAPermutation, "bad cycle entry " + std::to_string(a));
      used[a] = 1;
      p[a] = b;
    }
  }
  return p;
}

}  // namespace lamedess
