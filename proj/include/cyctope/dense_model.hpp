#ifndef CYCTOPE_DENSE_MODEL_HPP
#define CYCTOPE_DENSE_MODEL_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyctope/cyclic_order.hpp"
#include "cyctope/rational.hpp"

namespace cyctope {

inline constexpr std::size_t kDefaultMaxElements = 4096;

// A point of Q/Z, held as the exact representative in [0,1).
struct QZPoint {
  Rat value;

  static QZPoint make(const Rat& r);  // requires 0 <= r < 1
  static QZPoint wrap(const Rat& r);  // reduces mod 1

  bool operator==(const QZPoint& other) const { return value == other.value; }
};

// R on Q/Z: the three are distinct and b lies strictly inside the
// counterclockwise arc from a to c.
bool r_qz(const QZPoint& a, const QZPoint& b, const QZPoint& c);

// Midpoint of the counterclockwise arc from `from` to `to`; a full-circle
// arc when the endpoints coincide.
Rat qz_arc_midpoint(const Rat& from, const Rat& to);

// Child naming for the doubling: base "a" gets children "a|0", "a|1", and
// from then on bits append ("a|01", ...), so a stage element reads as
// base id + bit string.
ElemId child_id(const ElemId& base, int bit);

struct Doubling {
  CyclicOrder doubled;   // T(C) = C x {0,1}, (c,1) in the cut right after c
  StructEmbedding iota;  // c -> (c,0)
};

// T(C); the empty structure doubles to itself.
Doubling double_structure(const CyclicOrder& c);

// T(f) : T(C) -> T(D), (c,i) -> (f(c),i). Functorial, and iota is natural:
// iota_D . f = T(f) . iota_C.
StructEmbedding map_double(const StructEmbedding& f);

// T^k(C) together with the inclusion chain.
struct StageStructure {
  CyclicOrder base;
  int stage = 0;
  CyclicOrder structure;
  std::vector<StructEmbedding> inclusions;  // T^j(C) -> T^{j+1}(C) for j < stage
};

StageStructure t_stage(const CyclicOrder& base, int stage,
                       std::size_t max_elements = kDefaultMaxElements);

// Ordered pairs (x,z), x != z, with no y satisfying R(x,y,z); empty exactly
// when the density axiom holds in C.
std::vector<std::pair<ElemId, ElemId>> density_defect(const CyclicOrder& c);

// For every defect pair (x,z) of C, confirms R((x,0),(x,1),(z,0)) in T(C) --
// the explicit witness showing each defect resolves one stage up.
struct DensityStepReport {
  std::vector<std::pair<ElemId, ElemId>> defects;
  std::vector<std::array<ElemId, 3>> witnesses;  // parallel to defects
  bool pass = false;
};

DensityStepReport verify_density_step(const CyclicOrder& c);

// Quantifier-free type of a tuple: by quantifier elimination this is the
// equality pattern plus the induced cyclic order on the distinct values.
struct QfType {
  std::vector<int> pattern;  // position -> class, classes numbered by first occurrence
  CyclicOrder induced;       // on class labels "0", "1", ...

  bool operator==(const QfType& other) const {
    return pattern == other.pattern && induced == other.induced;
  }
};

QfType qf_type(const CyclicOrder& m, const std::vector<ElemId>& tuple);
QfType qf_type_qz(const std::vector<QZPoint>& tuple);
bool same_type(const QfType& a, const QfType& b);

// ---------------------------------------------------------------------------
// Back-and-forth sessions

enum class Side { Left, Right };

// One ambient of a back-and-forth run: the countable dense model Q/Z, a
// stage tower T^k(base) that can be raised on demand, or a fixed finite
// structure with raising disabled.
class BfSide {
 public:
  enum class Kind { QZ, Stage, Fixed };

  static BfSide qz();
  static BfSide stage_tower(CyclicOrder base, std::size_t max_elements = kDefaultMaxElements);
  static BfSide fixed(CyclicOrder structure);

  Kind kind() const { return kind_; }
  int stage() const { return stage_; }  // -1 for Q/Z
  const CyclicOrder& structure() const;  // finite kinds only
  const CyclicOrder& base() const;       // stage kind only

  bool has_element(const std::string& elem) const;
  bool rel(const std::string& a, const std::string& b, const std::string& c) const;

 private:
  friend class BfSession;
  BfSide() = default;
  Kind kind_ = Kind::QZ;
  CyclicOrder base_;
  CyclicOrder current_;
  int stage_ = -1;
  std::size_t max_elements_ = kDefaultMaxElements;
};

struct BfPair {
  std::string left;
  std::string right;
};

struct BfOp {
  enum class Kind { Raise, Extend, Pair };
  Kind kind = Kind::Extend;
  std::string side;     // "left" / "right"
  std::string element;  // Extend/Pair: the element on `side`
  std::string image;    // Extend/Pair: the matched element opposite
};

// Grows a finite partial isomorphism between the two sides. Every mutation
// re-verifies the PartialIso invariants (two-way injectivity and the
// R-biconditional on matched triples) and is appended to a replayable log.
//
// Canonical witness rule: on Q/Z the arc midpoint of the target cut; on
// finite sides the lexicographically least admissible element, raising the
// opposite stage when the cut is empty. Chosen for determinism.
class BfSession {
 public:
  BfSession(BfSide left, BfSide right);

  const BfSide& side(Side which) const;
  const std::vector<BfPair>& pairs() const { return pairs_; }
  const std::vector<BfOp>& log() const { return log_; }

  // Raises a stage side one doubling (renames its matched elements by
  // appending bit 0). InputError on non-stage sides; TruncationError past
  // the element cap.
  void raise(Side which);

  // Matches `elem` (which must exist and be unmatched on `which`) against a
  // canonically chosen image opposite. Returns the image.
  std::string extend(Side which, const std::string& elem);

  // Injects an explicit pair and re-verifies; logged as a Pair op.
  void add_pair(const std::string& left_elem, const std::string& right_elem);

  // Least unmatched element on the side, if any: the canonical rational
  // stream for Q/Z (never exhausted), id order for finite sides.
  std::optional<std::string> next_unmatched(Side which) const;

  // Full invariant re-check; throws InternalError when violated.
  void verify() const;

  // Runs `steps` canonical alternating extensions starting from the left,
  // raising an exhausted side to expose fresh elements.
  void run_alternating(int steps);

 private:
  std::string witness_opposite(Side which, const std::string& elem);
  void raise_unlogged(Side which);
  std::vector<std::string> matched_on(Side which) const;
  std::string paired_with(Side which, const std::string& elem) const;

  BfSide left_;
  BfSide right_;
  std::vector<BfPair> pairs_;
  std::vector<BfOp> log_;
};

// Re-executes a log against fresh sides; used for replay verification.
BfSession replay(BfSide left, BfSide right, const std::vector<BfOp>& log);

}  // namespace cyctope

#endif  // CYCTOPE_DENSE_MODEL_HPP
