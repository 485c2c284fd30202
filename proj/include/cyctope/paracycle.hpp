#ifndef CYCTOPE_PARACYCLE_HPP
#define CYCTOPE_PARACYCLE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyctope/cyclic_order.hpp"
#include "cyctope/rational.hpp"

namespace cyctope {

// The graded poset (1/n)Z with the shift automorphism x -> x+1.
struct Paracycle {
  int order = 1;  // n >= 1
};

// Shift-equivariant poset embedding (1/m)Z -> (1/n)Z. Only the images of
// the fundamental window 0, 1/m, ..., (m-1)/m are stored; equivariance
// f(x+1) = f(x)+1 determines the rest and forces
//   f(0) < f(1/m) < ... < f((m-1)/m) < f(0) + 1.
class ParaEmbedding {
 public:
  // Validates monotonicity, the unit-window bound, and that every image
  // lies in (1/n)Z. Throws InputError otherwise.
  static ParaEmbedding make(int m, int n, std::vector<Rat> images);

  int source_order() const { return m_; }
  int target_order() const { return n_; }
  Paracycle source() const { return {m_}; }
  Paracycle target() const { return {n_}; }
  const std::vector<Rat>& images() const { return images_; }

  // Evaluation anywhere on (1/m)Z via equivariance. Throws InputError if t
  // is not a point of (1/m)Z.
  Rat eval(const Rat& t) const;

  bool operator==(const ParaEmbedding& other) const;
  bool operator<(const ParaEmbedding& other) const;  // by (m, n, images)

 private:
  ParaEmbedding(int m, int n, std::vector<Rat> images);
  int m_;
  int n_;
  std::vector<Rat> images_;
};

ParaEmbedding identity_para(int n);

// Post-composition with the k-th power of the shift: every image moves by k.
// The action is free.
ParaEmbedding shift_action(const ParaEmbedding& f, long long k);

// outer . inner; throws InputError unless inner lands in outer's source.
ParaEmbedding compose_para(const ParaEmbedding& outer, const ParaEmbedding& inner);

// Z-orbit of an equivariant embedding, held by its canonical representative
// with f(0) in [0,1).
struct ShiftOrbit {
  ParaEmbedding canonical;
};

ShiftOrbit orbit_of(const ParaEmbedding& f);

// One representative per Z-orbit of embeddings (1/m)Z -> (1/n)Z, in
// deterministic order (f(0) ascending, then remaining images). Empty when
// m > n: m distinct images cannot fit in a unit window with n slots.
std::vector<ShiftOrbit> enumerate_canonical(int m, int n);

// The quotient functor PCyc -> Cyc on morphisms: residue i of [m-1] goes to
// n * (f(i/m) mod 1) in [n-1]. Constant on shift orbits.
StructEmbedding project_to_cyclic(const ParaEmbedding& f);

// Checks that projection induces a bijection between shift orbits and the
// cyclic-order hom-set, with surjectivity and orbit-injectivity witnessed.
struct HorbReport {
  int m = 0;
  int n = 0;
  std::size_t orbit_count = 0;
  std::size_t embedding_count = 0;
  // orbit index -> index into enumerate_embeddings([m-1],[n-1])
  std::vector<std::pair<std::size_t, std::size_t>> matches;
  std::vector<std::string> problems;
  bool pass = false;
};

HorbReport verify_horb(int m, int n);

// Explicit finite poset: labels plus the full order relation.
struct FinitePoset {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;  // leq[i][j] iff element i <= element j

  int size() const { return static_cast<int>(labels.size()); }
  bool is_partial_order(std::string* witness = nullptr) const;
  // The element dominating all others, when one exists.
  std::optional<int> maximum() const;
};

// The slice category C_[lo,hi): equivariant embeddings (1/k)Z -> (1/n)Z,
// 1 <= k <= k_max, whose fundamental images lie in [lo,hi). There is at
// most one morphism f1 -> f2 (the unique g with f2 . g = f1, existing
// exactly when the fundamental image of f1 sits inside that of f2), so the
// result is a poset. Every related pair's g is reconstructed and
// re-validated rather than assumed.
struct SlicePoset {
  int n = 1;
  Rat lo;
  Rat hi;
  int k_max = 1;
  std::vector<ParaEmbedding> objects;  // parallel to poset.labels
  FinitePoset poset;
};

SlicePoset slice_poset(int n, const Rat& lo, const Rat& hi, int k_max);

// Set-level check of the decomposition used in the contractibility
// induction: with pieces A = C_[hi-1,hi), B = C_[lo,hi-1/n),
//   A  intersect  B = C_[hi-1, hi-1/n)   and   A union B = C_[lo,hi),
// on both objects and morphisms. Requires lo < hi - 1.
struct SquareReport {
  int n = 0;
  Rat lo;
  Rat hi;
  int k_max = 0;
  std::size_t objects_full = 0;
  std::size_t objects_intersection = 0;
  std::vector<std::string> discrepancies;
  bool pass = false;
};

SquareReport verify_square(int n, const Rat& lo, const Rat& hi, int k_max);

std::string para_label(const ParaEmbedding& f);  // e.g. "(0/1,1/2)"

}  // namespace cyctope

#endif  // CYCTOPE_PARACYCLE_HPP
