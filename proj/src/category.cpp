#include "cyctope/category.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "cyctope/errors.hpp"

namespace cyctope {

FiniteCategory FiniteCategory::make(std::vector<std::string> objects,
                                    std::vector<Morphism> morphisms, std::vector<int> identities,
                                    std::vector<std::vector<int>> comp) {
  const int nobj = static_cast<int>(objects.size());
  const int nmor = static_cast<int>(morphisms.size());

  {
    auto sorted = objects;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("duplicate object id");
    std::vector<std::string> mids;
    for (const auto& m : morphisms) mids.push_back(m.id);
    std::sort(mids.begin(), mids.end());
    if (std::adjacent_find(mids.begin(), mids.end()) != mids.end())
      throw InputError("duplicate morphism id");
  }
  for (const auto& m : morphisms)
    if (m.src < 0 || m.src >= nobj || m.dst < 0 || m.dst >= nobj)
      throw InputError("morphism '" + m.id + "' has a dangling endpoint");
  if (static_cast<int>(identities.size()) != nobj)
    throw InputError("one identity per object required");
  for (int x = 0; x < nobj; ++x) {
    const int e = identities[static_cast<std::size_t>(x)];
    if (e < 0 || e >= nmor) throw InputError("identity index out of range");
    const auto& m = morphisms[static_cast<std::size_t>(e)];
    if (m.src != x || m.dst != x) throw InputError("identity of '" + objects[static_cast<std::size_t>(x)] + "' is not an endomorphism");
  }
  if (static_cast<int>(comp.size()) != nmor)
    throw InputError("composition table must be morphisms x morphisms");
  for (const auto& row : comp)
    if (static_cast<int>(row.size()) != nmor)
      throw InputError("composition table must be morphisms x morphisms");

  const auto src = [&](int f) { return morphisms[static_cast<std::size_t>(f)].src; };
  const auto dst = [&](int f) { return morphisms[static_cast<std::size_t>(f)].dst; };
  const auto name = [&](int f) { return morphisms[static_cast<std::size_t>(f)].id; };

  // comp defined exactly on composable pairs, with matching endpoints
  for (int g = 0; g < nmor; ++g)
    for (int f = 0; f < nmor; ++f) {
      const int gf = comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
      const bool composable = dst(f) == src(g);
      if (!composable) {
        if (gf != -1) throw InputError("composite defined on non-composable pair (" + name(g) + "," + name(f) + ")");
        continue;
      }
      if (gf < 0 || gf >= nmor)
        throw InputError("missing composite for (" + name(g) + "," + name(f) + ")");
      if (src(gf) != src(f) || dst(gf) != dst(g))
        throw InputError("composite endpoints wrong for (" + name(g) + "," + name(f) + ")");
    }

  // unit laws
  for (int f = 0; f < nmor; ++f) {
    const int left = comp[static_cast<std::size_t>(identities[static_cast<std::size_t>(dst(f))])][static_cast<std::size_t>(f)];
    const int right = comp[static_cast<std::size_t>(f)][static_cast<std::size_t>(identities[static_cast<std::size_t>(src(f))])];
    if (left != f || right != f) throw InputError("unit law fails at '" + name(f) + "'");
  }

  // associativity over all composable triples
  std::vector<std::vector<int>> out_of(static_cast<std::size_t>(nobj));
  for (int f = 0; f < nmor; ++f) out_of[static_cast<std::size_t>(src(f))].push_back(f);
  for (int f = 0; f < nmor; ++f)
    for (int g : out_of[static_cast<std::size_t>(dst(f))]) {
      const int gf = comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
      for (int h : out_of[static_cast<std::size_t>(dst(g))]) {
        const int hg = comp[static_cast<std::size_t>(h)][static_cast<std::size_t>(g)];
        if (comp[static_cast<std::size_t>(h)][static_cast<std::size_t>(gf)] !=
            comp[static_cast<std::size_t>(hg)][static_cast<std::size_t>(f)])
          throw InputError("associativity fails on (" + name(h) + "," + name(g) + "," + name(f) + ")");
      }
    }

  auto data = std::make_shared<Data>();
  data->homs.assign(static_cast<std::size_t>(nobj) * static_cast<std::size_t>(nobj), {});
  for (int f = 0; f < nmor; ++f)
    data->homs[static_cast<std::size_t>(src(f)) * static_cast<std::size_t>(nobj) +
               static_cast<std::size_t>(dst(f))]
        .push_back(f);
  data->objects = std::move(objects);
  data->morphisms = std::move(morphisms);
  data->identities = std::move(identities);
  data->comp = std::move(comp);

  FiniteCategory cat;
  cat.d_ = std::move(data);
  return cat;
}

bool FiniteCategory::is_identity(int mor) const {
  const auto& m = morphism(mor);
  return m.src == m.dst && identity(m.src) == mor;
}

int FiniteCategory::compose(int g, int f) const {
  const int gf = d_->comp.at(static_cast<std::size_t>(g)).at(static_cast<std::size_t>(f));
  if (gf == -1) throw InputError("morphisms are not composable");
  return gf;
}

const std::vector<int>& FiniteCategory::hom(int src, int dst) const {
  return d_->homs.at(static_cast<std::size_t>(src) * static_cast<std::size_t>(object_count()) +
                     static_cast<std::size_t>(dst));
}

int FiniteCategory::object_index(const std::string& id) const {
  for (int i = 0; i < object_count(); ++i)
    if (d_->objects[static_cast<std::size_t>(i)] == id) return i;
  throw InputError("unknown object id '" + id + "'");
}

int FiniteCategory::morphism_index(const std::string& id) const {
  for (int i = 0; i < morphism_count(); ++i)
    if (d_->morphisms[static_cast<std::size_t>(i)].id == id) return i;
  throw InputError("unknown morphism id '" + id + "'");
}

namespace {

// Assembles a category whose morphisms carry an arbitrary payload (an
// embedding map, a monotone map...) composed by a caller-supplied rule.
// Composites are located by payload lookup.
template <typename Payload, typename ComposeFn>
FiniteCategory assemble(std::vector<std::string> objects,
                        std::vector<std::pair<Morphism, Payload>> arrows,
                        const std::vector<Payload>& identity_payloads, ComposeFn&& compose_payload) {
  const int nmor = static_cast<int>(arrows.size());
  std::map<std::pair<std::pair<int, int>, Payload>, int> locate;
  for (int i = 0; i < nmor; ++i)
    locate[{{arrows[static_cast<std::size_t>(i)].first.src,
             arrows[static_cast<std::size_t>(i)].first.dst},
            arrows[static_cast<std::size_t>(i)].second}] = i;

  std::vector<int> identities;
  for (int x = 0; x < static_cast<int>(objects.size()); ++x) {
    auto it = locate.find({{x, x}, identity_payloads[static_cast<std::size_t>(x)]});
    if (it == locate.end()) throw InternalError("identity arrow missing from enumeration");
    identities.push_back(it->second);
  }

  std::vector<std::vector<int>> comp(static_cast<std::size_t>(nmor),
                                     std::vector<int>(static_cast<std::size_t>(nmor), -1));
  for (int g = 0; g < nmor; ++g)
    for (int f = 0; f < nmor; ++f) {
      const auto& mg = arrows[static_cast<std::size_t>(g)].first;
      const auto& mf = arrows[static_cast<std::size_t>(f)].first;
      if (mf.dst != mg.src) continue;
      Payload gf = compose_payload(arrows[static_cast<std::size_t>(g)].second,
                                   arrows[static_cast<std::size_t>(f)].second);
      auto it = locate.find({{mf.src, mg.dst}, gf});
      if (it == locate.end()) throw InternalError("composite arrow missing from enumeration");
      comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = it->second;
    }

  std::vector<Morphism> morphisms;
  morphisms.reserve(arrows.size());
  for (auto& [m, payload] : arrows) morphisms.push_back(std::move(m));
  return FiniteCategory::make(std::move(objects), std::move(morphisms), std::move(identities),
                              std::move(comp));
}

std::string cyc_object_id(int size) { return "[" + std::to_string(size - 1) + "]"; }

FiniteCategory cyc_subcategory(const std::vector<int>& sizes) {
  std::vector<std::string> objects;
  for (int s : sizes) objects.push_back(cyc_object_id(s));

  std::vector<std::pair<Morphism, std::vector<int>>> arrows;
  for (int a = 0; a < static_cast<int>(sizes.size()); ++a)
    for (int b = 0; b < static_cast<int>(sizes.size()); ++b) {
      const auto homset = enumerate_embeddings(standard_cycle(sizes[static_cast<std::size_t>(a)]),
                                               standard_cycle(sizes[static_cast<std::size_t>(b)]));
      for (std::size_t i = 0; i < homset.size(); ++i) {
        Morphism m{objects[static_cast<std::size_t>(a)] + "->" + objects[static_cast<std::size_t>(b)] +
                       "#" + std::to_string(i),
                   a, b};
        arrows.emplace_back(std::move(m), homset[i].index_map());
      }
    }

  std::vector<std::vector<int>> id_payloads;
  for (int s : sizes) {
    std::vector<int> ident(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) ident[static_cast<std::size_t>(i)] = i;
    id_payloads.push_back(std::move(ident));
  }

  return assemble(std::move(objects), std::move(arrows), id_payloads,
                  [](const std::vector<int>& g, const std::vector<int>& f) {
                    std::vector<int> gf(f.size());
                    for (std::size_t i = 0; i < f.size(); ++i)
                      gf[i] = g[static_cast<std::size_t>(f[i])];
                    return gf;
                  });
}

}  // namespace

FiniteCategory truncated_cyc(int max_size) {
  if (max_size < 1) throw InputError("truncated_cyc requires N >= 1");
  std::vector<int> sizes;
  for (int s = 1; s <= max_size; ++s) sizes.push_back(s);
  return cyc_subcategory(sizes);
}

FiniteCategory single_object_aut(int n) {
  if (n < 1) throw InputError("single_object_aut requires n >= 1");
  return cyc_subcategory({n});
}

FiniteCategory truncated_delta_inj(int max_size) {
  if (max_size < 1) throw InputError("truncated_delta_inj requires N >= 1");
  std::vector<std::string> objects;
  for (int s = 1; s <= max_size; ++s) objects.push_back("L" + std::to_string(s));

  // strictly increasing maps {0..m-1} -> {0..n-1}, i.e. m-subsets in lex order
  const auto increasing_maps = [](int m, int n) {
    std::vector<std::vector<int>> maps;
    if (m > n) return maps;
    std::vector<int> pick(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      maps.push_back(pick);
      int i = m - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - 1 - (m - 1 - i)) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return maps;
  };

  std::vector<std::pair<Morphism, std::vector<int>>> arrows;
  for (int a = 1; a <= max_size; ++a)
    for (int b = 1; b <= max_size; ++b) {
      const auto maps = increasing_maps(a, b);
      for (std::size_t i = 0; i < maps.size(); ++i) {
        Morphism m{"L" + std::to_string(a) + "->L" + std::to_string(b) + "#" + std::to_string(i),
                   a - 1, b - 1};
        arrows.emplace_back(std::move(m), maps[i]);
      }
    }

  std::vector<std::vector<int>> id_payloads;
  for (int s = 1; s <= max_size; ++s) {
    std::vector<int> ident(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) ident[static_cast<std::size_t>(i)] = i;
    id_payloads.push_back(std::move(ident));
  }

  return assemble(std::move(objects), std::move(arrows), id_payloads,
                  [](const std::vector<int>& g, const std::vector<int>& f) {
                    std::vector<int> gf(f.size());
                    for (std::size_t i = 0; i < f.size(); ++i)
                      gf[i] = g[static_cast<std::size_t>(f[i])];
                    return gf;
                  });
}

FiniteCategory finite_poset_to_category(const FinitePoset& poset) {
  std::string witness;
  if (!poset.is_partial_order(&witness))
    throw InputError("relation is not a partial order: " + witness);

  const int n = poset.size();
  std::vector<std::string> objects = poset.labels;
  std::vector<std::pair<Morphism, std::pair<int, int>>> arrows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (poset.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        Morphism m{"p" + std::to_string(i) + "->" + std::to_string(j), i, j};
        arrows.emplace_back(std::move(m), std::pair{i, j});
      }

  std::vector<std::pair<int, int>> id_payloads;
  for (int i = 0; i < n; ++i) id_payloads.emplace_back(i, i);

  return assemble(std::move(objects), std::move(arrows), id_payloads,
                  [](const std::pair<int, int>& g, const std::pair<int, int>& f) {
                    return std::pair{f.first, g.second};
                  });
}

CheckResult check_functor(const FiniteFunctor& functor) {
  const auto& src = functor.source;
  const auto& dst = functor.target;
  if (functor.object_map.size() != static_cast<std::size_t>(src.object_count()) ||
      functor.morphism_map.size() != static_cast<std::size_t>(src.morphism_count()))
    throw InputError("functor maps have the wrong arity");
  for (int x : functor.object_map)
    if (x < 0 || x >= dst.object_count()) throw InputError("functor object map is dangling");
  for (int f : functor.morphism_map)
    if (f < 0 || f >= dst.morphism_count()) throw InputError("functor morphism map is dangling");

  const auto obj = [&](int x) { return functor.object_map[static_cast<std::size_t>(x)]; };
  const auto mor = [&](int f) { return functor.morphism_map[static_cast<std::size_t>(f)]; };

  for (int f = 0; f < src.morphism_count(); ++f) {
    const auto& m = src.morphism(f);
    const auto& image = dst.morphism(mor(f));
    if (image.src != obj(m.src) || image.dst != obj(m.dst))
      return {false, "endpoints not preserved at '" + m.id + "'"};
  }
  for (int x = 0; x < src.object_count(); ++x)
    if (mor(src.identity(x)) != dst.identity(obj(x)))
      return {false, "identity not preserved at '" + src.objects()[static_cast<std::size_t>(x)] + "'"};
  for (int f = 0; f < src.morphism_count(); ++f)
    for (int g = 0; g < src.morphism_count(); ++g) {
      if (src.morphism(f).dst != src.morphism(g).src) continue;
      if (mor(src.compose(g, f)) != dst.compose(mor(g), mor(f)))
        return {false, "composition not preserved on ('" + src.morphism(g).id + "','" +
                           src.morphism(f).id + "')"};
    }
  return {};
}

CheckResult check_nat_trans(const FiniteNatTrans& nat) {
  const auto& src = nat.from.source;
  const auto& dst = nat.from.target;
  if (nat.components.size() != static_cast<std::size_t>(src.object_count()))
    throw InputError("one component per source object required");
  for (int c : nat.components)
    if (c < 0 || c >= dst.morphism_count()) throw InputError("component index is dangling");

  for (int x = 0; x < src.object_count(); ++x) {
    const auto& c = dst.morphism(nat.components[static_cast<std::size_t>(x)]);
    if (c.src != nat.from.object_map[static_cast<std::size_t>(x)] ||
        c.dst != nat.to.object_map[static_cast<std::size_t>(x)])
      return {false, "component at '" + src.objects()[static_cast<std::size_t>(x)] +
                         "' has wrong endpoints"};
  }
  for (int f = 0; f < src.morphism_count(); ++f) {
    const auto& m = src.morphism(f);
    const int lhs = dst.compose(nat.components[static_cast<std::size_t>(m.dst)],
                                nat.from.morphism_map[static_cast<std::size_t>(f)]);
    const int rhs = dst.compose(nat.to.morphism_map[static_cast<std::size_t>(f)],
                                nat.components[static_cast<std::size_t>(m.src)]);
    if (lhs != rhs) return {false, "naturality square fails at '" + m.id + "'"};
  }
  return {};
}

TruncatedNerve nerve(const FiniteCategory& category, int max_dim) {
  if (max_dim < 0) throw InputError("nerve requires max_dim >= 0");

  TruncatedNerve nv{category, max_dim, {}, {}};
  nv.simplices.resize(static_cast<std::size_t>(max_dim) + 1);
  nv.faces.resize(static_cast<std::size_t>(max_dim) + 1);

  for (int x = 0; x < category.object_count(); ++x) nv.simplices[0].push_back({x});

  std::vector<int> non_identity;
  for (int f = 0; f < category.morphism_count(); ++f)
    if (!category.is_identity(f)) non_identity.push_back(f);

  std::map<std::vector<int>, int> index_of_chain;  // within the previous dimension
  for (int k = 1; k <= max_dim; ++k) {
    auto& chains = nv.simplices[static_cast<std::size_t>(k)];
    if (k == 1) {
      for (int f : non_identity) chains.push_back({f});
    } else {
      for (const auto& chain : nv.simplices[static_cast<std::size_t>(k - 1)]) {
        const int tail_dst = category.morphism(chain.back()).dst;
        for (int f : non_identity) {
          if (category.morphism(f).src != tail_dst) continue;
          auto extended = chain;
          extended.push_back(f);
          chains.push_back(std::move(extended));
        }
      }
    }

    index_of_chain.clear();
    const auto& below = nv.simplices[static_cast<std::size_t>(k - 1)];
    for (int i = 0; i < static_cast<int>(below.size()); ++i)
      index_of_chain[below[static_cast<std::size_t>(i)]] = i;

    auto& face_rows = nv.faces[static_cast<std::size_t>(k)];
    face_rows.reserve(chains.size());
    for (const auto& chain : chains) {
      std::vector<int> row(static_cast<std::size_t>(k) + 1, kDegenerateFace);
      if (k == 1) {
        row[0] = category.morphism(chain[0]).dst;  // d_0 drops the leading object
        row[1] = category.morphism(chain[0]).src;
      } else {
        {
          std::vector<int> f0(chain.begin() + 1, chain.end());
          row[0] = index_of_chain.at(f0);
          std::vector<int> fk(chain.begin(), chain.end() - 1);
          row[static_cast<std::size_t>(k)] = index_of_chain.at(fk);
        }
        for (int i = 1; i < k; ++i) {
          const int composite = category.compose(chain[static_cast<std::size_t>(i)],
                                                 chain[static_cast<std::size_t>(i - 1)]);
          if (category.is_identity(composite)) continue;  // normalized: counts as zero
          std::vector<int> inner;
          inner.reserve(chain.size() - 1);
          inner.insert(inner.end(), chain.begin(), chain.begin() + (i - 1));
          inner.push_back(composite);
          inner.insert(inner.end(), chain.begin() + (i + 1), chain.end());
          row[static_cast<std::size_t>(i)] = index_of_chain.at(inner);
        }
      }
      face_rows.push_back(std::move(row));
    }
  }
  return nv;
}

}  // namespace cyctope
