#ifndef CYCTOPE_CATEGORY_HPP
#define CYCTOPE_CATEGORY_HPP

#include <memory>
#include <string>
#include <vector>

#include "cyctope/cyclic_order.hpp"
#include "cyctope/paracycle.hpp"

namespace cyctope {

struct Morphism {
  std::string id;
  int src = 0;
  int dst = 0;
};

// Explicit finite category: interned objects and morphisms plus a dense
// composition table. Construction validates the category laws exhaustively
// (unit laws, associativity, composability bookkeeping); everything is
// immutable afterwards and copies share storage.
class FiniteCategory {
 public:
  // comp[g][f] is the index of g . f (g after f), or -1 exactly when the
  // pair is not composable. Throws InputError when the data is not a
  // category.
  static FiniteCategory make(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                             std::vector<int> identities, std::vector<std::vector<int>> comp);

  int object_count() const { return static_cast<int>(d_->objects.size()); }
  int morphism_count() const { return static_cast<int>(d_->morphisms.size()); }
  const std::vector<std::string>& objects() const { return d_->objects; }
  const std::vector<Morphism>& morphisms() const { return d_->morphisms; }
  const Morphism& morphism(int i) const { return d_->morphisms.at(static_cast<std::size_t>(i)); }
  int identity(int object) const { return d_->identities.at(static_cast<std::size_t>(object)); }
  bool is_identity(int mor) const;
  int compose(int g, int f) const;  // throws InputError if not composable
  const std::vector<int>& hom(int src, int dst) const;
  int object_index(const std::string& id) const;    // throws InputError when absent
  int morphism_index(const std::string& id) const;  // throws InputError when absent

 private:
  struct Data {
    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    std::vector<int> identities;
    std::vector<std::vector<int>> comp;
    std::vector<std::vector<int>> homs;  // [src * object_count + dst]
  };
  std::shared_ptr<const Data> d_;
};

// Full subcategory of finite nonempty cyclic orders on [0], ..., [N-1],
// with hom-sets taken from embedding enumeration.
FiniteCategory truncated_cyc(int max_size);

// Nonempty finite linear orders of size <= N and order embeddings.
FiniteCategory truncated_delta_inj(int max_size);

// The one-object full subcategory of Cyc on [n-1]; its endomorphisms are
// the n rotations, i.e. the cyclic group Z/n.
FiniteCategory single_object_aut(int n);

// At most one morphism between any two objects; input must be a partial
// order (InputError otherwise). The nerve of the result is the order
// complex of the poset.
FiniteCategory finite_poset_to_category(const FinitePoset& poset);

struct FiniteFunctor {
  FiniteCategory source;
  FiniteCategory target;
  std::vector<int> object_map;    // source object index -> target object index
  std::vector<int> morphism_map;  // source morphism index -> target morphism index
};

struct FiniteNatTrans {
  FiniteFunctor from;                // F
  FiniteFunctor to;                  // G, same source and target categories
  std::vector<int> components;       // object x -> morphism F(x) -> G(x) in the target
};

struct CheckResult {
  bool ok = true;
  std::string witness;  // first failing equation, empty when ok
};

// True iff sources/targets, identities, and composition are preserved;
// out-of-range ids are an InputError rather than a false verdict.
CheckResult check_functor(const FiniteFunctor& functor);
CheckResult check_nat_trans(const FiniteNatTrans& nat);

// Truncated nerve in the normalized (nondegenerate-chain) model: the
// k-simplices are chains of k composable non-identity morphisms. A face
// whose inner composite collapses to an identity is recorded as
// kDegenerateFace and contributes nothing to boundaries.
constexpr int kDegenerateFace = -1;

struct TruncatedNerve {
  FiniteCategory category;
  int max_dim = 0;
  // simplices[0][i] = {object index}; simplices[k][i] = the k morphism
  // indices of a chain, in composition order.
  std::vector<std::vector<std::vector<int>>> simplices;
  // faces[k][i][j] = index of the j-th face in simplices[k-1], or
  // kDegenerateFace.
  std::vector<std::vector<std::vector<int>>> faces;

  std::size_t count(int dim) const {
    return dim <= max_dim ? simplices[static_cast<std::size_t>(dim)].size() : 0;
  }
};

TruncatedNerve nerve(const FiniteCategory& category, int max_dim);

}  // namespace cyctope

#endif  // CYCTOPE_CATEGORY_HPP
