#include "cyctope/dense_model.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cyctope/errors.hpp"

namespace cyctope {

QZPoint QZPoint::make(const Rat& r) {
  if (r < 0 || r >= 1) throw InputError("Q/Z point " + format_rat(r) + " is not in [0,1)");
  return QZPoint{r};
}

QZPoint QZPoint::wrap(const Rat& r) { return QZPoint{rat_mod1(r)}; }

bool r_qz(const QZPoint& a, const QZPoint& b, const QZPoint& c) {
  const Rat& x = a.value;
  const Rat& y = b.value;
  const Rat& z = c.value;
  if (x == y || y == z || x == z) return false;
  return (x < y && y < z) || (y < z && z < x) || (z < x && x < y);
}

Rat qz_arc_midpoint(const Rat& from, const Rat& to) {
  Rat len = rat_mod1(to - from);
  if (len == 0) len = 1;  // full circle
  return rat_mod1(from + len / 2);
}

ElemId child_id(const ElemId& base, int bit) {
  const char c = bit ? '1' : '0';
  if (base.find('|') == std::string::npos) return base + '|' + c;
  return base + c;
}

Doubling double_structure(const CyclicOrder& c) {
  if (c.size() == 0) {
    CyclicOrder empty;
    return Doubling{empty, StructEmbedding::make(c, empty, {})};
  }
  std::vector<ElemId> interleaved;
  interleaved.reserve(static_cast<std::size_t>(2 * c.size()));
  for (int idx : c.linearization(0)) {
    const ElemId& base = c.elements()[static_cast<std::size_t>(idx)];
    interleaved.push_back(child_id(base, 0));
    interleaved.push_back(child_id(base, 1));
  }
  CyclicOrder doubled = from_linear({std::move(interleaved)});

  std::map<ElemId, ElemId> inclusion;
  for (const auto& base : c.elements()) inclusion[base] = child_id(base, 0);
  return Doubling{doubled, StructEmbedding::make_by_ids(c, doubled, inclusion)};
}

StructEmbedding map_double(const StructEmbedding& f) {
  const CyclicOrder tc = double_structure(f.source()).doubled;
  const CyclicOrder td = double_structure(f.target()).doubled;
  std::map<ElemId, ElemId> id_map;
  for (const auto& c : f.source().elements())
    for (int bit : {0, 1}) id_map[child_id(c, bit)] = child_id(f.apply_id(c), bit);
  return StructEmbedding::make_by_ids(tc, td, id_map);
}

StageStructure t_stage(const CyclicOrder& base, int stage, std::size_t max_elements) {
  if (stage < 0) throw InputError("t_stage requires stage >= 0");
  std::size_t cells = static_cast<std::size_t>(base.size());
  for (int j = 0; j < stage; ++j) {
    if (cells > max_elements / 2)
      throw TruncationError("t_stage would exceed the element cap of " +
                            std::to_string(max_elements));
    cells *= 2;
  }

  StageStructure result{base, stage, base, {}};
  for (int j = 0; j < stage; ++j) {
    Doubling d = double_structure(result.structure);
    result.inclusions.push_back(d.iota);
    result.structure = std::move(d.doubled);
  }
  return result;
}

std::vector<std::pair<ElemId, ElemId>> density_defect(const CyclicOrder& c) {
  std::vector<std::pair<ElemId, ElemId>> defects;
  const int n = c.size();
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      if (z == x) continue;
      bool witnessed = false;
      for (int y = 0; y < n && !witnessed; ++y)
        witnessed = y != x && y != z && c.rel(x, y, z);
      if (!witnessed)
        defects.emplace_back(c.elements()[static_cast<std::size_t>(x)],
                             c.elements()[static_cast<std::size_t>(z)]);
    }
  return defects;
}

DensityStepReport verify_density_step(const CyclicOrder& c) {
  if (c.size() == 0) throw InputError("verify_density_step requires a nonempty structure");
  DensityStepReport report;
  report.defects = density_defect(c);
  const Doubling d = double_structure(c);
  report.pass = true;
  for (const auto& [x, z] : report.defects) {
    const std::array<ElemId, 3> witness{child_id(x, 0), child_id(x, 1), child_id(z, 0)};
    if (!d.doubled.rel(witness[0], witness[1], witness[2])) report.pass = false;
    report.witnesses.push_back(witness);
  }
  return report;
}

namespace {

QfType type_from_values(std::size_t len, const auto& equal_at, const auto& rel_at) {
  QfType type;
  std::vector<std::size_t> representatives;  // first position of each class
  for (std::size_t p = 0; p < len; ++p) {
    int cls = -1;
    for (std::size_t r = 0; r < representatives.size(); ++r)
      if (equal_at(representatives[r], p)) {
        cls = static_cast<int>(r);
        break;
      }
    if (cls == -1) {
      cls = static_cast<int>(representatives.size());
      representatives.push_back(p);
    }
    type.pattern.push_back(cls);
  }

  RawStructure raw;
  for (std::size_t r = 0; r < representatives.size(); ++r)
    raw.elements.push_back(std::to_string(r));
  for (std::size_t i = 0; i < representatives.size(); ++i)
    for (std::size_t j = 0; j < representatives.size(); ++j)
      for (std::size_t k = 0; k < representatives.size(); ++k) {
        if (i == j || j == k || i == k) continue;
        if (rel_at(representatives[i], representatives[j], representatives[k]))
          raw.triples.push_back({std::to_string(i), std::to_string(j), std::to_string(k)});
      }
  type.induced = CyclicOrder::validated(raw);
  return type;
}

}  // namespace

QfType qf_type(const CyclicOrder& m, const std::vector<ElemId>& tuple) {
  std::vector<int> indices;
  indices.reserve(tuple.size());
  for (const auto& id : tuple) indices.push_back(m.index_of(id));  // InputError when absent
  return type_from_values(
      tuple.size(), [&](std::size_t a, std::size_t b) { return indices[a] == indices[b]; },
      [&](std::size_t a, std::size_t b, std::size_t c) {
        return m.rel(indices[a], indices[b], indices[c]);
      });
}

QfType qf_type_qz(const std::vector<QZPoint>& tuple) {
  return type_from_values(
      tuple.size(), [&](std::size_t a, std::size_t b) { return tuple[a] == tuple[b]; },
      [&](std::size_t a, std::size_t b, std::size_t c) {
        return r_qz(tuple[a], tuple[b], tuple[c]);
      });
}

bool same_type(const QfType& a, const QfType& b) { return a == b; }

// ---------------------------------------------------------------------------

BfSide BfSide::qz() {
  BfSide side;
  side.kind_ = Kind::QZ;
  return side;
}

BfSide BfSide::stage_tower(CyclicOrder base, std::size_t max_elements) {
  BfSide side;
  side.kind_ = Kind::Stage;
  side.base_ = base;
  side.current_ = std::move(base);
  side.stage_ = 0;
  side.max_elements_ = max_elements;
  return side;
}

BfSide BfSide::fixed(CyclicOrder structure) {
  BfSide side;
  side.kind_ = Kind::Fixed;
  side.current_ = std::move(structure);
  side.stage_ = 0;
  return side;
}

const CyclicOrder& BfSide::structure() const {
  if (kind_ == Kind::QZ) throw InputError("Q/Z has no finite structure to expose");
  return current_;
}

const CyclicOrder& BfSide::base() const {
  if (kind_ != Kind::Stage) throw InputError("only stage towers have a base");
  return base_;
}

bool BfSide::has_element(const std::string& elem) const {
  if (kind_ == Kind::QZ) {
    try {
      const Rat r = parse_rat(elem);
      return r >= 0 && r < 1 && format_rat(r) == elem;
    } catch (const InputError&) {
      return false;
    }
  }
  return current_.has_element(elem);
}

bool BfSide::rel(const std::string& a, const std::string& b, const std::string& c) const {
  if (kind_ == Kind::QZ)
    return r_qz(QZPoint::make(parse_rat(a)), QZPoint::make(parse_rat(b)),
                QZPoint::make(parse_rat(c)));
  return current_.rel(a, b, c);
}

BfSession::BfSession(BfSide left, BfSide right) : left_(std::move(left)), right_(std::move(right)) {}

const BfSide& BfSession::side(Side which) const { return which == Side::Left ? left_ : right_; }

namespace {
Side other(Side which) { return which == Side::Left ? Side::Right : Side::Left; }
const char* side_name(Side which) { return which == Side::Left ? "left" : "right"; }
}  // namespace

std::vector<std::string> BfSession::matched_on(Side which) const {
  std::vector<std::string> out;
  out.reserve(pairs_.size());
  for (const auto& p : pairs_) out.push_back(which == Side::Left ? p.left : p.right);
  return out;
}

std::string BfSession::paired_with(Side which, const std::string& elem) const {
  for (const auto& p : pairs_) {
    const auto& key = which == Side::Left ? p.left : p.right;
    if (key == elem) return which == Side::Left ? p.right : p.left;
  }
  throw InternalError("element '" + elem + "' is not matched");
}

void BfSession::raise_unlogged(Side which) {
  BfSide& side = which == Side::Left ? left_ : right_;
  if (side.kind_ != BfSide::Kind::Stage)
    throw InputError("stage raising is only available on stage towers");
  const std::size_t size = static_cast<std::size_t>(side.current_.size());
  if (size > side.max_elements_ / 2)
    throw TruncationError("raising the " + std::string(side_name(which)) +
                          " side would exceed its element cap");
  side.current_ = double_structure(side.current_).doubled;
  ++side.stage_;
  for (auto& p : pairs_) {
    auto& mine = which == Side::Left ? p.left : p.right;
    mine = child_id(mine, 0);
  }
}

void BfSession::raise(Side which) {
  raise_unlogged(which);
  log_.push_back(BfOp{BfOp::Kind::Raise, side_name(which), "", ""});
  verify();
}

std::string BfSession::witness_opposite(Side which, const std::string& elem) {
  const Side opp = other(which);

  // Locate the cut of `elem` among the matched elements on its own side:
  // the cyclically adjacent matched predecessor and successor.
  std::string pred;
  std::string succ;
  const auto matched = matched_on(which);
  if (matched.size() >= 2) {
    const BfSide& mine = side(which);
    if (mine.kind() == BfSide::Kind::QZ) {
      std::vector<std::pair<Rat, std::string>> ordered;
      for (const auto& s : matched) ordered.emplace_back(parse_rat(s), s);
      std::sort(ordered.begin(), ordered.end());
      const Rat e = parse_rat(elem);
      pred = ordered.back().second;
      succ = ordered.front().second;
      for (const auto& [v, s] : ordered)
        if (v < e) pred = s;
      for (auto it = ordered.rbegin(); it != ordered.rend(); ++it)
        if (it->first > e) succ = it->second;
    } else {
      const auto& structure = mine.structure();
      std::vector<int> rank(static_cast<std::size_t>(structure.size()));
      const auto lin = structure.linearization(0);
      for (int p = 0; p < structure.size(); ++p)
        rank[static_cast<std::size_t>(lin[static_cast<std::size_t>(p)])] = p;
      const auto rank_of = [&](const std::string& id) {
        return rank[static_cast<std::size_t>(structure.index_of(id))];
      };
      std::vector<std::pair<int, std::string>> ordered;
      for (const auto& s : matched) ordered.emplace_back(rank_of(s), s);
      std::sort(ordered.begin(), ordered.end());
      const int e = rank_of(elem);
      pred = ordered.back().second;
      succ = ordered.front().second;
      for (const auto& [v, s] : ordered)
        if (v < e) pred = s;
      for (auto it = ordered.rbegin(); it != ordered.rend(); ++it)
        if (it->first > e) succ = it->second;
    }
  }

  while (true) {
    const BfSide& target = side(opp);
    if (target.kind() == BfSide::Kind::QZ) {
      if (matched.empty()) return "0/1";
      if (matched.size() == 1) {
        const Rat b = parse_rat(paired_with(which, matched.front()));
        return format_rat(qz_arc_midpoint(b, b));
      }
      const Rat lo = parse_rat(paired_with(which, pred));
      const Rat hi = parse_rat(paired_with(which, succ));
      return format_rat(qz_arc_midpoint(lo, hi));
    }

    // finite side: lexicographically least admissible element
    const auto& structure = target.structure();
    const auto opp_matched = matched_on(opp);
    std::optional<std::string> best;
    for (const auto& y : structure.elements()) {
      if (std::find(opp_matched.begin(), opp_matched.end(), y) != opp_matched.end()) continue;
      if (matched.size() >= 2) {
        const auto lo = paired_with(which, pred);
        const auto hi = paired_with(which, succ);
        if (!structure.rel(lo, y, hi)) continue;
      }
      if (!best || y < *best) best = y;
    }
    if (best) return *best;

    if (target.kind() != BfSide::Kind::Stage)
      throw NoWitnessError("no admissible image for '" + elem +
                           "' and stage raising is disabled on the " + side_name(opp) + " side");
    if (structure.size() == 0)
      throw NoWitnessError("the " + std::string(side_name(opp)) +
                           " side is empty and doubling keeps it empty");
    raise_unlogged(opp);
    log_.push_back(BfOp{BfOp::Kind::Raise, side_name(opp), "", ""});
  }
}

std::string BfSession::extend(Side which, const std::string& elem) {
  if (!side(which).has_element(elem))
    throw InputError("'" + elem + "' is not an element of the " + side_name(which) + " side");
  const auto matched = matched_on(which);
  if (std::find(matched.begin(), matched.end(), elem) != matched.end())
    throw InputError("'" + elem + "' is already matched");

  const std::string image = witness_opposite(which, elem);
  log_.push_back(BfOp{BfOp::Kind::Extend, side_name(which), elem, image});
  if (which == Side::Left)
    pairs_.push_back(BfPair{elem, image});
  else
    pairs_.push_back(BfPair{image, elem});
  verify();
  return image;
}

void BfSession::add_pair(const std::string& left_elem, const std::string& right_elem) {
  log_.push_back(BfOp{BfOp::Kind::Pair, "left", left_elem, right_elem});
  pairs_.push_back(BfPair{left_elem, right_elem});
  verify();
}

std::optional<std::string> BfSession::next_unmatched(Side which) const {
  const BfSide& mine = side(which);
  const auto matched = matched_on(which);
  const auto is_matched = [&](const std::string& s) {
    return std::find(matched.begin(), matched.end(), s) != matched.end();
  };

  if (mine.kind() == BfSide::Kind::QZ) {
    // 0/1, then fractions by denominator: 1/2, 1/3, 2/3, 1/4, 3/4, ...
    if (!is_matched("0/1")) return "0/1";
    for (long long q = 2;; ++q)
      for (long long p = 1; p < q; ++p) {
        const Rat r(p, q);
        if (r.denominator() != q) continue;  // not in lowest terms
        const std::string s = format_rat(r);
        if (!is_matched(s)) return s;
      }
  }

  std::optional<std::string> best;
  for (const auto& y : mine.structure().elements())
    if (!is_matched(y) && (!best || y < *best)) best = y;
  return best;
}

void BfSession::verify() const {
  std::set<std::string> lefts;
  std::set<std::string> rights;
  for (const auto& p : pairs_) {
    if (!left_.has_element(p.left))
      throw InternalError("matched element '" + p.left + "' missing on the left");
    if (!right_.has_element(p.right))
      throw InternalError("matched element '" + p.right + "' missing on the right");
    if (!lefts.insert(p.left).second)
      throw InternalError("left element '" + p.left + "' matched twice");
    if (!rights.insert(p.right).second)
      throw InternalError("right element '" + p.right + "' matched twice");
  }
  const std::size_t t = pairs_.size();
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < t; ++k) {
        if (k == i || k == j) continue;
        const bool lhs = left_.rel(pairs_[i].left, pairs_[j].left, pairs_[k].left);
        const bool rhs = right_.rel(pairs_[i].right, pairs_[j].right, pairs_[k].right);
        if (lhs != rhs)
          throw InternalError("R-biconditional fails on matched triple (" + pairs_[i].left + "," +
                              pairs_[j].left + "," + pairs_[k].left + ")");
      }
    }
}

void BfSession::run_alternating(int steps) {
  Side which = Side::Left;
  for (int i = 0; i < steps; ++i) {
    auto elem = next_unmatched(which);
    while (!elem) {
      if (side(which).kind() != BfSide::Kind::Stage)
        throw NoWitnessError(std::string("the ") + side_name(which) + " side is exhausted");
      raise(which);
      elem = next_unmatched(which);
    }
    extend(which, *elem);
    which = other(which);
  }
}

BfSession replay(BfSide left, BfSide right, const std::vector<BfOp>& log) {
  BfSession session(std::move(left), std::move(right));
  for (const auto& op : log) {
    const Side which = op.side == "left" ? Side::Left : Side::Right;
    switch (op.kind) {
      case BfOp::Kind::Raise:
        session.raise(which);
        break;
      case BfOp::Kind::Extend: {
        const std::string image = session.extend(which, op.element);
        if (image != op.image)
          throw InternalError("replay drifted: expected image '" + op.image + "', got '" + image +
                              "'");
        break;
      }
      case BfOp::Kind::Pair:
        session.add_pair(op.element, op.image);
        break;
    }
  }
  return session;
}

}  // namespace cyctope
