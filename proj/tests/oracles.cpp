#include "oracles.hpp"

#include <algorithm>

namespace cyctope::oracles {

namespace {

bool biconditional_holds(const CyclicOrder& source, const CyclicOrder& target,
                         const std::vector<int>& map) {
  const int m = source.size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (b == a) continue;
      for (int c = 0; c < m; ++c) {
        if (c == a || c == b) continue;
        const int fa = map[static_cast<std::size_t>(a)];
        const int fb = map[static_cast<std::size_t>(b)];
        const int fc = map[static_cast<std::size_t>(c)];
        // Images may repeat for non-injective candidates; R never holds on
        // a non-distinct triple.
        const bool dst = (fa != fb && fb != fc && fa != fc) && target.rel(fa, fb, fc);
        if (source.rel(a, b, c) != dst) return false;
      }
    }
  return true;
}

void enumerate_maps(int m, int n, bool injective_only, std::vector<int>& map,
                    std::vector<char>& used, const auto& emit) {
  const int depth = static_cast<int>(map.size());
  if (depth == m) {
    emit(map);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (injective_only && used[static_cast<std::size_t>(v)]) continue;
    used[static_cast<std::size_t>(v)] = 1;
    map.push_back(v);
    enumerate_maps(m, n, injective_only, map, used, emit);
    map.pop_back();
    used[static_cast<std::size_t>(v)] = 0;
  }
}

std::vector<std::vector<int>> filtered_maps(const CyclicOrder& source, const CyclicOrder& target,
                                            bool injective_only) {
  std::vector<std::vector<int>> out;
  std::vector<int> map;
  std::vector<char> used(static_cast<std::size_t>(target.size()), 0);
  enumerate_maps(source.size(), target.size(), injective_only, map, used,
                 [&](const std::vector<int>& candidate) {
                   if (biconditional_holds(source, target, candidate)) out.push_back(candidate);
                 });
  return out;  // lexicographic by construction
}

}  // namespace

std::vector<std::vector<int>> brute_force_embeddings(const CyclicOrder& source,
                                                     const CyclicOrder& target) {
  return filtered_maps(source, target, /*injective_only=*/true);
}

std::vector<std::vector<int>> brute_force_relation_maps(const CyclicOrder& source,
                                                        const CyclicOrder& target) {
  return filtered_maps(source, target, /*injective_only=*/false);
}

bool is_valid_embedding(const CyclicOrder& source, const CyclicOrder& target,
                        const std::vector<int>& map) {
  if (map.size() != static_cast<std::size_t>(source.size())) return false;
  std::vector<char> seen(static_cast<std::size_t>(target.size()), 0);
  for (int v : map) {
    if (v < 0 || v >= target.size() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return biconditional_holds(source, target, map);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t result = 1;
  for (int i = 0; i < k; ++i) result = result * static_cast<std::uint64_t>(n - i) / (i + 1);
  return result;
}

namespace {

BigInt cofactor_det(const IntMatrix& m, std::vector<std::size_t> rows,
                    std::vector<std::size_t> cols) {
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  if (k == 1) return m.at(rows[0], cols[0]);
  BigInt det = 0;
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < k; ++j) {
    if (m.at(rows[0], cols[j]) == 0) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t c = 0; c < k; ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    const BigInt minor = cofactor_det(m, sub_rows, sub_cols);
    det += (j % 2 == 0 ? 1 : -1) * m.at(rows[0], cols[j]) * minor;
  }
  return det;
}

BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void for_each_subset(std::size_t n, std::size_t k, const auto& visit) {
  if (k > n) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    visit(pick);
    bool advanced = false;
    std::size_t i = k;
    while (i-- > 0) {
      if (pick[i] < n - k + i) {
        ++pick[i];
        for (std::size_t l = i + 1; l < k; ++l) pick[l] = pick[l - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
  }
}

}  // namespace

std::vector<BigInt> snf_from_minors(const IntMatrix& m) {
  std::vector<BigInt> factors;
  const std::size_t bound = std::min(m.rows(), m.cols());
  BigInt previous = 1;
  for (std::size_t k = 1; k <= bound; ++k) {
    BigInt g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        g = big_gcd(g, cofactor_det(m, rows, cols));
      });
    });
    if (g == 0) break;  // rank reached
    factors.push_back(g / previous);
    previous = g;
  }
  return factors;
}

GroupHomologyLine cyclic_group_homology(int n, int degree) {
  if (degree == 0) return {1, {}};
  if (n == 1) return {0, {}};
  if (degree % 2 == 1) return {0, {n}};
  return {0, {}};
}

}  // namespace cyctope::oracles
