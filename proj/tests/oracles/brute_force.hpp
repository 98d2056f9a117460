#pragma once

// Exact integer oracles: admissible-space dimension by enumeration and
// determinants by permutation expansion.

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using IntMatrix4 = std::array<std::array<long long, 4>, 4>;
using Q = boost::multiprecision::cpp_rational;

inline constexpr std::array<std::pair<int, int>, 6> kSlots{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Leibniz expansion over all 24 permutations.
template <class M>
auto determinant(const M& a) {
  using V = std::decay_t<decltype(a[0][0])>;
  std::array<int, 4> perm{0, 1, 2, 3};
  V det = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j];
    V prod = 1;
    for (int i = 0; i < 4; ++i) prod *= a[i][perm[i]];
    det += (inversions % 2 ? -prod : prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Rank of a list of rational vectors by exact Gaussian elimination.
inline int exact_rank(std::vector<std::vector<Q>> rows) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Q f = rows[r][c] / rows[rank][c];
      for (int k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Enumerates theta with the six free entries in {-1, 0, 1}, keeps those
/// with theta A + A^T theta == 0 exactly, and returns the rank of the
/// admissible set.
inline int admissible_dimension_by_enumeration(const IntMatrix4& a, int* count = nullptr) {
  std::vector<std::vector<Q>> hits;
  std::array<int, 6> v{};
  const int total = 729;
  for (int code = 0; code < total; ++code) {
    int rest = code;
    for (int k = 0; k < 6; ++k) {
      v[k] = rest % 3 - 1;
      rest /= 3;
    }
    IntMatrix4 t{};
    for (int k = 0; k < 6; ++k) {
      t[kSlots[k].first][kSlots[k].second] = v[k];
      t[kSlots[k].second][kSlots[k].first] = -v[k];
    }
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) {
      for (int j = 0; j < 4 && ok; ++j) {
        long long s = 0;
        for (int k = 0; k < 4; ++k) s += t[i][k] * a[k][j] + a[k][i] * t[k][j];
        ok = s == 0;
      }
    }
    if (ok) hits.push_back(std::vector<Q>(v.begin(), v.end()));
  }
  if (count) *count = static_cast<int>(hits.size());
  return exact_rank(hits);
}

}  // namespace oracle
