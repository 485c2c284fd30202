// Test-only oracles, kept independent of the implementation paths they
// check. Everything here is definitional brute force.
#ifndef CYCTOPE_TESTS_ORACLES_HPP
#define CYCTOPE_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "cyctope/cyclic_order.hpp"

namespace cyctope::oracles {

// Every injective index map source -> target satisfying the R-biconditional
// on all distinct source triples, in lexicographic map order.
std::vector<std::vector<int>> brute_force_embeddings(const CyclicOrder& source,
                                                     const CyclicOrder& target);

// Same filter but over all maps, injective or not. Used to demonstrate the
// injectivity check is redundant once the source has >= 3 elements.
std::vector<std::vector<int>> brute_force_relation_maps(const CyclicOrder& source,
                                                        const CyclicOrder& target);

// Independent re-check of the StructEmbedding invariants.
bool is_valid_embedding(const CyclicOrder& source, const CyclicOrder& target,
                        const std::vector<int>& map);

std::uint64_t binomial(int n, int k);

}  // namespace cyctope::oracles

#include "cyctope/homology.hpp"

namespace cyctope::oracles {

// Invariant factors computed from gcds of k x k minors: d_1...d_k equals
// the k-th determinantal divisor. Cofactor determinants throughout, so this
// shares nothing with the Smith reduction it checks.
std::vector<BigInt> snf_from_minors(const IntMatrix& m);

// Group homology of Z/n in low degrees: Z, Z/n, 0, Z/n, ... evaluated from
// the standard periodic resolution by hand and frozen here as data.
struct GroupHomologyLine {
  long long betti;
  std::vector<long long> torsion;
};
GroupHomologyLine cyclic_group_homology(int n, int degree);  // degree <= 3

}  // namespace cyctope::oracles

#endif  // CYCTOPE_TESTS_ORACLES_HPP
