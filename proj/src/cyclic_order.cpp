#include "cyctope/cyclic_order.hpp"

#include <algorithm>
#include <set>

#include "cyctope/errors.hpp"

namespace cyctope {

namespace {

constexpr int kIndexBits = 21;
constexpr std::uint64_t kIndexMask = (1ull << kIndexBits) - 1;

std::uint64_t pack(int i, int j, int k) {
  return (static_cast<std::uint64_t>(i) << (2 * kIndexBits)) |
         (static_cast<std::uint64_t>(j) << kIndexBits) | static_cast<std::uint64_t>(k);
}

std::array<int, 3> unpack(std::uint64_t t) {
  return {static_cast<int>(t >> (2 * kIndexBits)), static_cast<int>((t >> kIndexBits) & kIndexMask),
          static_cast<int>(t & kIndexMask)};
}

bool contains(const std::vector<std::uint64_t>& sorted, std::uint64_t key) {
  return std::binary_search(sorted.begin(), sorted.end(), key);
}

std::unordered_map<ElemId, int> build_index(const std::vector<ElemId>& elems) {
  std::unordered_map<ElemId, int> index;
  index.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto [it, fresh] = index.emplace(elems[i], static_cast<int>(i));
    if (!fresh) throw InputError("duplicate element id '" + elems[i] + "'");
  }
  return index;
}

// Packs raw id triples against an element index, rejecting unknown ids and
// non-distinct entries. Result is sorted and deduplicated.
std::vector<std::uint64_t> pack_triples(const std::vector<IdTriple>& triples,
                                        const std::unordered_map<ElemId, int>& index) {
  std::vector<std::uint64_t> packed;
  packed.reserve(triples.size());
  for (const auto& t : triples) {
    int idx[3];
    for (int p = 0; p < 3; ++p) {
      auto it = index.find(t[p]);
      if (it == index.end()) throw InputError("triple references unknown element id '" + t[p] + "'");
      idx[p] = it->second;
    }
    if (idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2])
      throw InputError("non-distinct triple (" + t[0] + "," + t[1] + "," + t[2] + ")");
    packed.push_back(pack(idx[0], idx[1], idx[2]));
  }
  std::sort(packed.begin(), packed.end());
  packed.erase(std::unique(packed.begin(), packed.end()), packed.end());
  return packed;
}

}  // namespace

CyclicOrder make_unchecked(std::vector<ElemId> elems, std::vector<std::uint64_t> packed) {
  if (elems.size() >= (1ull << kIndexBits))
    throw TruncationError("structure exceeds the supported element count");
  auto data = std::make_shared<CyclicOrder::Data>();
  data->index = build_index(elems);
  data->elems = std::move(elems);
  data->packed = std::move(packed);
  CyclicOrder c;
  c.data_ = std::move(data);
  return c;
}

CyclicOrder::CyclicOrder() : data_(std::make_shared<Data>()) {}

AxiomReport check_axioms(const RawStructure& raw) {
  const auto index = build_index(raw.elements);
  const auto packed = pack_triples(raw.triples, index);
  const int n = static_cast<int>(raw.elements.size());
  const auto id = [&raw](int i) { return raw.elements[static_cast<std::size_t>(i)]; };

  AxiomReport report;

  for (auto t : packed) {
    auto [x, y, z] = unpack(t);
    if (report.asymmetry.pass && contains(packed, pack(x, z, y)))
      report.asymmetry = {false, {id(x), id(y), id(z)}};
    if (report.cyclicity.pass && !contains(packed, pack(y, z, x)))
      report.cyclicity = {false, {id(x), id(y), id(z)}};
    if (!report.asymmetry.pass && !report.cyclicity.pass) break;
  }

  // Successor lists keyed by the (x,z) prefix, for the transitivity scan.
  std::unordered_map<std::uint64_t, std::vector<int>> succ;
  for (auto t : packed) {
    auto [x, z, w] = unpack(t);
    succ[pack(x, z, 0)].push_back(w);
  }
  for (auto t : packed) {
    if (!report.transitivity.pass) break;
    auto [x, y, z] = unpack(t);
    auto it = succ.find(pack(x, z, 0));
    if (it == succ.end()) continue;
    for (int w : it->second) {
      if (w == y || w == x) continue;
      if (!contains(packed, pack(x, y, w))) {
        report.transitivity = {false, {id(x), id(y), id(z), id(w)}};
        break;
      }
    }
  }

  for (int x = 0; x < n && report.connectedness.pass; ++x)
    for (int y = 0; y < n && report.connectedness.pass; ++y) {
      if (y == x) continue;
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (!contains(packed, pack(x, y, z)) && !contains(packed, pack(z, y, x))) {
          report.connectedness = {false, {id(x), id(y), id(z)}};
          break;
        }
      }
    }

  return report;
}

CyclicOrder CyclicOrder::validated(const RawStructure& raw) {
  const auto report = check_axioms(raw);  // throws InputError on malformed data
  if (!report.all_pass()) {
    std::string which;
    const auto note = [&which](const char* name, const AxiomCheck& c) {
      if (!c.pass) which += which.empty() ? name : std::string(", ") + name;
    };
    note("asymmetry", report.asymmetry);
    note("transitivity", report.transitivity);
    note("connectedness", report.connectedness);
    note("cyclicity", report.cyclicity);
    throw InputError("structure violates cyclic-order axioms: " + which);
  }
  const auto index = build_index(raw.elements);
  return make_unchecked(raw.elements, pack_triples(raw.triples, index));
}

bool CyclicOrder::has_element(const ElemId& id) const { return data_->index.count(id) > 0; }

int CyclicOrder::index_of(const ElemId& id) const {
  auto it = data_->index.find(id);
  if (it == data_->index.end()) throw InputError("unknown element id '" + id + "'");
  return it->second;
}

bool CyclicOrder::rel(int i, int j, int k) const { return contains(data_->packed, pack(i, j, k)); }

bool CyclicOrder::rel(const ElemId& a, const ElemId& b, const ElemId& c) const {
  return rel(index_of(a), index_of(b), index_of(c));
}

std::vector<IdTriple> CyclicOrder::sorted_triples() const {
  std::vector<IdTriple> out;
  out.reserve(data_->packed.size());
  for (auto t : data_->packed) {
    auto [i, j, k] = unpack(t);
    out.push_back({data_->elems[static_cast<std::size_t>(i)], data_->elems[static_cast<std::size_t>(j)],
                   data_->elems[static_cast<std::size_t>(k)]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> CyclicOrder::linearization(int basepoint) const {
  if (basepoint < 0 || basepoint >= size()) throw InputError("linearization basepoint out of range");
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(size()));
  order.push_back(basepoint);
  for (int i = 0; i < size(); ++i)
    if (i != basepoint) order.push_back(i);
  std::sort(order.begin() + 1, order.end(),
            [&](int a, int b) { return rel(basepoint, a, b); });
  return order;
}

bool CyclicOrder::operator==(const CyclicOrder& other) const {
  if (data_ == other.data_) return true;
  if (size() != other.size() || triple_count() != other.triple_count()) return false;
  auto mine = elements();
  auto theirs = other.elements();
  std::sort(mine.begin(), mine.end());
  std::sort(theirs.begin(), theirs.end());
  if (mine != theirs) return false;
  return sorted_triples() == other.sorted_triples();
}

StructEmbedding::StructEmbedding(CyclicOrder source, CyclicOrder target, std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

StructEmbedding StructEmbedding::make(CyclicOrder source, CyclicOrder target,
                                      std::vector<int> index_map) {
  const int m = source.size();
  const int n = target.size();
  if (static_cast<int>(index_map.size()) != m)
    throw InputError("embedding map arity does not match the source");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : index_map) {
    if (v < 0 || v >= n) throw InputError("embedding image index out of range");
    if (seen[static_cast<std::size_t>(v)]) throw InputError("embedding map is not injective");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (b == a) continue;
      for (int c = 0; c < m; ++c) {
        if (c == a || c == b) continue;
        const bool src = source.rel(a, b, c);
        const bool dst = target.rel(index_map[static_cast<std::size_t>(a)],
                                    index_map[static_cast<std::size_t>(b)],
                                    index_map[static_cast<std::size_t>(c)]);
        if (src != dst)
          throw InputError("map breaks the R-biconditional on (" + source.elements()[a] + "," +
                           source.elements()[b] + "," + source.elements()[c] + ")");
      }
    }
  return StructEmbedding(std::move(source), std::move(target), std::move(index_map));
}

StructEmbedding StructEmbedding::make_by_ids(CyclicOrder source, CyclicOrder target,
                                             const std::map<ElemId, ElemId>& id_map) {
  std::vector<int> map(static_cast<std::size_t>(source.size()), -1);
  if (id_map.size() != static_cast<std::size_t>(source.size()))
    throw InputError("embedding map arity does not match the source");
  for (const auto& [from, to] : id_map)
    map[static_cast<std::size_t>(source.index_of(from))] = target.index_of(to);
  return make(std::move(source), std::move(target), std::move(map));
}

ElemId StructEmbedding::apply_id(const ElemId& id) const {
  return target_.elements()[static_cast<std::size_t>(apply(source_.index_of(id)))];
}

std::map<ElemId, ElemId> StructEmbedding::id_map() const {
  std::map<ElemId, ElemId> out;
  for (int i = 0; i < source_.size(); ++i)
    out[source_.elements()[static_cast<std::size_t>(i)]] =
        target_.elements()[static_cast<std::size_t>(apply(i))];
  return out;
}

bool StructEmbedding::operator==(const StructEmbedding& other) const {
  return source_ == other.source_ && target_ == other.target_ && id_map() == other.id_map();
}

CyclicOrder standard_cycle(int n) {
  if (n < 1) throw InputError("standard_cycle requires n >= 1");
  std::vector<ElemId> elems;
  elems.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) elems.push_back(std::to_string(i));
  return from_linear(LinearOrder{std::move(elems)});
}

CyclicOrder from_linear(const LinearOrder& order) {
  const int n = static_cast<int>(order.elements.size());
  std::vector<std::uint64_t> packed;
  packed.reserve(static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 2);
  // One orientation per distinct triple: the rotations of every i<j<k.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        packed.push_back(pack(i, j, k));
        packed.push_back(pack(j, k, i));
        packed.push_back(pack(k, i, j));
      }
  std::sort(packed.begin(), packed.end());
  return make_unchecked(order.elements, std::move(packed));
}

std::vector<StructEmbedding> enumerate_embeddings(const CyclicOrder& source,
                                                  const CyclicOrder& target) {
  const int m = source.size();
  const int n = target.size();
  std::vector<StructEmbedding> out;
  if (m == 0) {
    out.push_back(StructEmbedding::make(source, target, {}));
    return out;
  }
  if (m > n) return out;

  // An embedding is exactly: a choice of image for the source basepoint,
  // then an increasing choice of images for the rest of the source
  // linearization inside the target linearization at that image.
  const std::vector<int> lin_src = source.linearization(0);
  const std::vector<int> lin_tgt0 = target.linearization(0);
  std::vector<int> pos_in_lin(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) pos_in_lin[static_cast<std::size_t>(lin_tgt0[static_cast<std::size_t>(p)])] = p;

  for (int base_image = 0; base_image < n; ++base_image) {
    // Rotation of the basepoint-0 linearization starting at base_image.
    const int start = pos_in_lin[static_cast<std::size_t>(base_image)];
    std::vector<int> rot(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
      rot[static_cast<std::size_t>(p)] = lin_tgt0[static_cast<std::size_t>((start + p) % n)];

    // All increasing (m-1)-subsets of positions 1..n-1.
    std::vector<int> pick(static_cast<std::size_t>(m - 1));
    for (int i = 0; i < m - 1; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      std::vector<int> map(static_cast<std::size_t>(m));
      map[static_cast<std::size_t>(lin_src[0])] = rot[0];
      for (int i = 1; i < m; ++i)
        map[static_cast<std::size_t>(lin_src[static_cast<std::size_t>(i)])] =
            rot[static_cast<std::size_t>(pick[static_cast<std::size_t>(i - 1)])];
      out.push_back(StructEmbedding::make(source, target, std::move(map)));

      if (m == 1) break;
      int i = m - 2;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - 1 - (m - 2 - i)) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m - 1; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }

  std::sort(out.begin(), out.end(), [](const StructEmbedding& a, const StructEmbedding& b) {
    return a.index_map() < b.index_map();
  });
  return out;
}

StructEmbedding compose(const StructEmbedding& outer, const StructEmbedding& inner) {
  if (inner.target() != outer.source())
    throw InputError("compose: inner target does not match outer source");
  std::vector<int> map;
  map.reserve(static_cast<std::size_t>(inner.source().size()));
  for (int i = 0; i < inner.source().size(); ++i) {
    const ElemId mid = inner.target().elements()[static_cast<std::size_t>(inner.apply(i))];
    map.push_back(outer.apply(outer.source().index_of(mid)));
  }
  return StructEmbedding::make(inner.source(), outer.target(), std::move(map));
}

StructEmbedding identity_embedding(const CyclicOrder& c) {
  std::vector<int> map(static_cast<std::size_t>(c.size()));
  for (int i = 0; i < c.size(); ++i) map[static_cast<std::size_t>(i)] = i;
  return StructEmbedding::make(c, c, std::move(map));
}

ChainUnion union_chain(const std::vector<CyclicOrder>& stages,
                       const std::vector<StructEmbedding>& links) {
  if (stages.empty()) throw InputError("union_chain requires at least one stage");
  if (links.size() + 1 != stages.size())
    throw InputError("union_chain expects one link per adjacent stage pair");
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (links[i].source() != stages[i] || links[i].target() != stages[i + 1])
      throw InputError("union_chain link " + std::to_string(i) + " does not connect its stages");
  }

  ChainUnion result{stages.back(), {}};
  StructEmbedding into = identity_embedding(stages.back());
  std::vector<StructEmbedding> maps;
  maps.push_back(into);
  for (std::size_t i = links.size(); i-- > 0;) {
    into = compose(into, links[i]);  // re-validates: each stage restricts exactly
    maps.push_back(into);
  }
  std::reverse(maps.begin(), maps.end());
  result.stage_maps = std::move(maps);
  return result;
}

}  // namespace cyctope
