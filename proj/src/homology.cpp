#include "cyctope/homology.hpp"

#include <map>

#include "cyctope/errors.hpp"

namespace cyctope {

ChainComplex boundary_complex(const TruncatedNerve& nv) {
  ChainComplex cx;
  const int d = nv.max_dim;
  cx.ranks.reserve(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) cx.ranks.push_back(nv.count(k));

  cx.boundaries.resize(static_cast<std::size_t>(d) + 1);
  cx.boundaries[0] = IntMatrix(0, cx.ranks[0]);
  for (int k = 1; k <= d; ++k) {
    IntMatrix m(cx.ranks[static_cast<std::size_t>(k - 1)], cx.ranks[static_cast<std::size_t>(k)]);
    const auto& rows = nv.faces[static_cast<std::size_t>(k)];
    for (std::size_t s = 0; s < rows.size(); ++s)
      for (int i = 0; i <= k; ++i) {
        const int face = rows[s][static_cast<std::size_t>(i)];
        if (face == kDegenerateFace) continue;
        m.at(static_cast<std::size_t>(face), s) += (i % 2 == 0) ? 1 : -1;
      }
    cx.boundaries[static_cast<std::size_t>(k)] = std::move(m);
  }

  // d.d = 0, checked sparsely column by column
  for (int k = 1; k + 1 <= d; ++k) {
    const auto& outer = cx.boundaries[static_cast<std::size_t>(k)];
    const auto& inner = cx.boundaries[static_cast<std::size_t>(k + 1)];
    for (std::size_t s = 0; s < inner.cols(); ++s) {
      std::map<std::size_t, BigInt> accum;
      for (std::size_t mid = 0; mid < inner.rows(); ++mid) {
        const BigInt& coeff = inner.at(mid, s);
        if (coeff == 0) continue;
        for (std::size_t r = 0; r < outer.rows(); ++r)
          if (outer.at(r, mid) != 0) accum[r] += coeff * outer.at(r, mid);
      }
      for (const auto& [row, value] : accum)
        if (value != 0)
          throw InternalError("boundary of boundary is nonzero in degree " + std::to_string(k + 1));
    }
  }
  return cx;
}

namespace {

BigInt abs_val(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Position of the minimal-magnitude nonzero entry of the trailing
// submatrix, if any.
bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  BigInt best;
  for (std::size_t r = t; r < m.rows(); ++r)
    for (std::size_t c = t; c < m.cols(); ++c) {
      if (m.at(r, c) == 0) continue;
      const BigInt mag = abs_val(m.at(r, c));
      if (!found || mag < best) {
        found = true;
        best = mag;
        pr = r;
        pc = c;
      }
    }
  return found;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

bool row_col_cleared(const IntMatrix& m, std::size_t t) {
  for (std::size_t r = t + 1; r < m.rows(); ++r)
    if (m.at(r, t) != 0) return false;
  for (std::size_t c = t + 1; c < m.cols(); ++c)
    if (m.at(t, c) != 0) return false;
  return true;
}

}  // namespace

SnfResult smith_normal_form(IntMatrix m) {
  SnfResult result;
  const std::size_t bound = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < bound; ++t) {
    std::size_t pr = t, pc = t;
    if (!find_pivot(m, t, pr, pc)) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);

    while (true) {
      // Clear below and to the right of the pivot with division steps;
      // remainders shrink the pivot on the next pass.
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m.at(r, t) == 0) continue;
        const BigInt q = m.at(r, t) / m.at(t, t);
        if (q != 0)
          for (std::size_t c = t; c < m.cols(); ++c) m.at(r, c) -= q * m.at(t, c);
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m.at(t, c) == 0) continue;
        const BigInt q = m.at(t, c) / m.at(t, t);
        if (q != 0)
          for (std::size_t r = t; r < m.rows(); ++r) m.at(r, c) -= q * m.at(r, t);
      }

      if (!row_col_cleared(m, t)) {
        std::size_t pr2 = t, pc2 = t;
        find_pivot(m, t, pr2, pc2);
        swap_rows(m, t, pr2);
        swap_cols(m, t, pc2);
        continue;
      }

      // Divisibility sweep: the pivot must divide the whole remaining
      // submatrix for the invariant-factor chain.
      bool divides_all = true;
      for (std::size_t r = t + 1; r < m.rows() && divides_all; ++r)
        for (std::size_t c = t + 1; c < m.cols() && divides_all; ++c)
          if (m.at(r, c) % m.at(t, t) != 0) {
            for (std::size_t cc = t; cc < m.cols(); ++cc) m.at(t, cc) += m.at(r, cc);
            divides_all = false;
          }
      if (divides_all) break;
    }

    if (m.at(t, t) < 0) m.at(t, t) = -m.at(t, t);
    result.factors.push_back(m.at(t, t));
  }

  for (std::size_t i = 0; i + 1 < result.factors.size(); ++i)
    if (result.factors[i + 1] % result.factors[i] != 0)
      throw InternalError("Smith reduction produced a broken divisibility chain");
  return result;
}

HomologyGroup homology(const ChainComplex& cx, int k) {
  if (k < 0) throw InputError("homology degree must be nonnegative");
  if (k + 1 > cx.max_dim())
    throw TruncationError("H_" + std::to_string(k) + " needs the complex truncated at dimension >= " +
                          std::to_string(k + 1));

  const auto below = smith_normal_form(cx.boundaries[static_cast<std::size_t>(k)]);
  const auto above = smith_normal_form(cx.boundaries[static_cast<std::size_t>(k + 1)]);

  HomologyGroup h;
  h.betti = static_cast<long long>(cx.ranks[static_cast<std::size_t>(k)]) -
            static_cast<long long>(below.rank()) - static_cast<long long>(above.rank());
  if (h.betti < 0) throw InternalError("negative betti number");
  for (const auto& f : above.factors)
    if (f > 1) h.torsion.push_back(f);
  return h;
}

bool reduced_homology_vanishes(const ChainComplex& cx, int up_to_k) {
  if (up_to_k < 0) throw InputError("reduced_homology_vanishes needs up_to_k >= 0");
  if (up_to_k + 1 > cx.max_dim())
    throw TruncationError("vanishing through H_" + std::to_string(up_to_k) +
                          " needs the complex truncated at dimension >= " +
                          std::to_string(up_to_k + 1));
  if (cx.ranks.empty() || cx.ranks[0] == 0) return false;  // the empty space
  const auto h0 = homology(cx, 0);
  if (!h0.is_free_of_rank(1)) return false;
  for (int k = 1; k <= up_to_k; ++k)
    if (!homology(cx, k).is_trivial()) return false;
  return true;
}

}  // namespace cyctope
