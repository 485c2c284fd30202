#ifndef CYCTOPE_HOMOLOGY_HPP
#define CYCTOPE_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "cyctope/category.hpp"

namespace cyctope {

// Arbitrary precision throughout: Smith reduction can blow up intermediate
// entries even on small nerves, and torsion must be exact.
using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> cells_;
};

// Normalized chains of a truncated nerve: ranks r_0..r_d and the boundary
// matrices between them, entries from alternating face sums with degenerate
// faces contributing zero.
struct ChainComplex {
  std::vector<std::size_t> ranks;
  // boundaries[k] is d_k : C_k -> C_{k-1} with shape r_{k-1} x r_k, for
  // k >= 1; boundaries[0] is the empty map out of C_0.
  std::vector<IntMatrix> boundaries;

  int max_dim() const { return static_cast<int>(ranks.size()) - 1; }
};

// Builds the complex and verifies d.d = 0; a violation is an InternalError
// since it can only come from a nerve bug.
ChainComplex boundary_complex(const TruncatedNerve& nv);

// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix, all
// positive; r is the rank. d_1...d_k equals the gcd of the k x k minors.
struct SnfResult {
  std::vector<BigInt> factors;

  std::size_t rank() const { return factors.size(); }
};

SnfResult smith_normal_form(IntMatrix m);

struct HomologyGroup {
  long long betti = 0;
  std::vector<BigInt> torsion;  // invariant factors exceeding 1, a divisibility chain

  bool is_trivial() const { return betti == 0 && torsion.empty(); }
  bool is_free_of_rank(long long r) const { return betti == r && torsion.empty(); }
};

// H_k from the Smith forms of d_k and d_{k+1}. A truncated complex of
// dimension d only supports trusted H_k for k <= d-1; asking beyond that is
// a TruncationError, never a silently wrong group.
HomologyGroup homology(const ChainComplex& cx, int k);

// True iff reduced H_0 through H_{up_to_k} all vanish. The empty complex
// reports false.
bool reduced_homology_vanishes(const ChainComplex& cx, int up_to_k);

}  // namespace cyctope

#endif  // CYCTOPE_HOMOLOGY_HPP
