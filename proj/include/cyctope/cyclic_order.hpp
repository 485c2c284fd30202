#ifndef CYCTOPE_CYCLIC_ORDER_HPP
#define CYCTOPE_CYCLIC_ORDER_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace cyctope {

using ElemId = std::string;
using IdTriple = std::array<ElemId, 3>;

// Structure data as it arrives from files or ad-hoc constructions, before
// any axiom has been checked.
struct RawStructure {
  std::vector<ElemId> elements;
  std::vector<IdTriple> triples;
};

struct AxiomCheck {
  bool pass = true;
  std::vector<ElemId> witness;  // offending tuple; empty when pass
};

// Verdict of the four cyclic-order axioms on a raw structure:
//   Asymmetry:     R(x,y,z) excludes R(x,z,y)
//   Transitivity:  R(x,y,z) and R(x,z,w) imply R(x,y,w)   (w != y; the
//                  w == y case is charged to Asymmetry)
//   Connectedness: for distinct x,y,z, R(x,y,z) or R(z,y,x)
//   Cyclicity:     R(x,y,z) implies R(y,z,x)
struct AxiomReport {
  AxiomCheck asymmetry;
  AxiomCheck transitivity;
  AxiomCheck connectedness;
  AxiomCheck cyclicity;

  bool all_pass() const {
    return asymmetry.pass && transitivity.pass && connectedness.pass && cyclicity.pass;
  }
};

// Checks the four axioms; throws InputError on malformed data (duplicate or
// unknown element ids, non-distinct triples), which is a different failure
// mode than an axiom violation.
AxiomReport check_axioms(const RawStructure& raw);

// A finite set with a ternary betweenness relation R satisfying the four
// axioms above. Immutable; copies share storage. The full triple set is
// stored so the axioms stay directly assertable independent of how the
// structure was built.
class CyclicOrder {
 public:
  CyclicOrder();  // the empty structure

  // Validating constructor for untrusted data. Throws InputError when the
  // data is malformed or any axiom fails.
  static CyclicOrder validated(const RawStructure& raw);

  int size() const { return static_cast<int>(data_->elems.size()); }
  const std::vector<ElemId>& elements() const { return data_->elems; }
  bool has_element(const ElemId& id) const;
  int index_of(const ElemId& id) const;  // throws InputError when absent

  bool rel(int i, int j, int k) const;
  bool rel(const ElemId& a, const ElemId& b, const ElemId& c) const;
  std::size_t triple_count() const { return data_->packed.size(); }
  std::vector<IdTriple> sorted_triples() const;  // canonical, id-lexicographic

  // Element indices in cyclic order starting at the given basepoint. The
  // complement of the basepoint carries a strict total order under
  // rel(basepoint, x, y); this enumerates it.
  std::vector<int> linearization(int basepoint) const;

  // Triple-set equality after matching element ids; declared element order
  // is presentation, not identity.
  bool operator==(const CyclicOrder& other) const;
  bool operator!=(const CyclicOrder& other) const { return !(*this == other); }

 private:
  struct Data {
    std::vector<ElemId> elems;
    std::unordered_map<ElemId, int> index;
    std::vector<std::uint64_t> packed;  // sorted packed index triples
  };

  friend CyclicOrder make_unchecked(std::vector<ElemId> elems, std::vector<std::uint64_t> packed);
  std::shared_ptr<const Data> data_;
};

// Injective map preserving and reflecting R. Validated at construction.
class StructEmbedding {
 public:
  // Throws InputError when the map is not injective or breaks the
  // R-biconditional on any distinct source triple.
  static StructEmbedding make(CyclicOrder source, CyclicOrder target, std::vector<int> index_map);
  static StructEmbedding make_by_ids(CyclicOrder source, CyclicOrder target,
                                     const std::map<ElemId, ElemId>& id_map);

  const CyclicOrder& source() const { return source_; }
  const CyclicOrder& target() const { return target_; }
  int apply(int source_index) const { return map_.at(static_cast<std::size_t>(source_index)); }
  ElemId apply_id(const ElemId& id) const;
  const std::vector<int>& index_map() const { return map_; }
  std::map<ElemId, ElemId> id_map() const;

  bool operator==(const StructEmbedding& other) const;

 private:
  StructEmbedding(CyclicOrder source, CyclicOrder target, std::vector<int> map);
  CyclicOrder source_;
  CyclicOrder target_;
  std::vector<int> map_;
};

struct LinearOrder {
  std::vector<ElemId> elements;  // pairwise distinct, in order
};

// The cyclic order written [n-1]: elements "0".."n-1", R induced by
// 0 < 1 < ... < n-1. Throws InputError for n < 1.
CyclicOrder standard_cycle(int n);

// R(x,y,z) iff x<y<z or y<z<x or z<x<y in the list. Rotating the input
// list yields the identical structure. Empty input gives the empty
// structure; duplicates are an InputError.
CyclicOrder from_linear(const LinearOrder& order);

// All embeddings source -> target, sorted lexicographically by the image
// tuple read in the source's declared element order.
std::vector<StructEmbedding> enumerate_embeddings(const CyclicOrder& source,
                                                  const CyclicOrder& target);

// outer . inner; throws InputError unless inner.target equals outer.source.
StructEmbedding compose(const StructEmbedding& outer, const StructEmbedding& inner);
StructEmbedding identity_embedding(const CyclicOrder& c);

struct ChainUnion {
  CyclicOrder colimit;
  std::vector<StructEmbedding> stage_maps;  // composite stage -> colimit, one per stage
};

// Directed union of a finite chain of embeddings: the colimit is the final
// stage, and each stage's composite map into it is re-validated so the
// restriction to every stage recovers that stage's triples.
ChainUnion union_chain(const std::vector<CyclicOrder>& stages,
                       const std::vector<StructEmbedding>& links);

}  // namespace cyctope

#endif  // CYCTOPE_CYCLIC_ORDER_HPP
