#include "cyctope/paracycle.hpp"

#include <algorithm>
#include <set>

#include "cyctope/errors.hpp"

namespace cyctope {

namespace {

bool in_lattice(const Rat& x, int n) { return n % x.denominator() == 0; }

// Strictly increasing lattice points of (1/n)Z in [lo, hi).
std::vector<Rat> lattice_window(int n, const Rat& lo, const Rat& hi) {
  std::vector<Rat> slots;
  for (Rat x = lo; x < hi; x += Rat(1, n)) slots.push_back(x);
  return slots;
}

}  // namespace

ParaEmbedding::ParaEmbedding(int m, int n, std::vector<Rat> images)
    : m_(m), n_(n), images_(std::move(images)) {}

ParaEmbedding ParaEmbedding::make(int m, int n, std::vector<Rat> images) {
  if (m < 1 || n < 1) throw InputError("paracycle orders must be >= 1");
  if (images.size() != static_cast<std::size_t>(m))
    throw InputError("paracycle embedding needs exactly m fundamental images");
  for (const auto& x : images)
    if (!in_lattice(x, n))
      throw InputError("image " + format_rat(x) + " is not a point of (1/" + std::to_string(n) + ")Z");
  for (std::size_t i = 0; i + 1 < images.size(); ++i)
    if (!(images[i] < images[i + 1]))
      throw InputError("fundamental images must be strictly increasing");
  if (!(images.back() < images.front() + 1))
    throw InputError("fundamental images must fit in a half-open unit window");
  return ParaEmbedding(m, n, std::move(images));
}

Rat ParaEmbedding::eval(const Rat& t) const {
  const Rat scaled = t * m_;
  if (scaled.denominator() != 1)
    throw InputError(format_rat(t) + " is not a point of (1/" + std::to_string(m_) + ")Z");
  long long s = scaled.numerator();
  long long i = ((s % m_) + m_) % m_;
  long long q = (s - i) / m_;
  return images_[static_cast<std::size_t>(i)] + q;
}

bool ParaEmbedding::operator==(const ParaEmbedding& other) const {
  return m_ == other.m_ && n_ == other.n_ && images_ == other.images_;
}

bool ParaEmbedding::operator<(const ParaEmbedding& other) const {
  if (m_ != other.m_) return m_ < other.m_;
  if (n_ != other.n_) return n_ < other.n_;
  return std::lexicographical_compare(images_.begin(), images_.end(), other.images_.begin(),
                                      other.images_.end());
}

ParaEmbedding identity_para(int n) {
  std::vector<Rat> images;
  for (int i = 0; i < n; ++i) images.emplace_back(i, n);
  return ParaEmbedding::make(n, n, std::move(images));
}

ParaEmbedding shift_action(const ParaEmbedding& f, long long k) {
  std::vector<Rat> images = f.images();
  for (auto& x : images) x += k;
  return ParaEmbedding::make(f.source_order(), f.target_order(), std::move(images));
}

ParaEmbedding compose_para(const ParaEmbedding& outer, const ParaEmbedding& inner) {
  if (inner.target_order() != outer.source_order())
    throw InputError("compose_para: inner target does not match outer source");
  std::vector<Rat> images;
  images.reserve(inner.images().size());
  for (const auto& x : inner.images()) images.push_back(outer.eval(x));
  return ParaEmbedding::make(inner.source_order(), outer.target_order(), std::move(images));
}

ShiftOrbit orbit_of(const ParaEmbedding& f) {
  return ShiftOrbit{shift_action(f, -rat_floor(f.images().front()))};
}

std::vector<ShiftOrbit> enumerate_canonical(int m, int n) {
  if (m < 1 || n < 1) throw InputError("paracycle orders must be >= 1");
  std::vector<ShiftOrbit> out;
  for (int b = 0; b < n; ++b) {
    const Rat f0(b, n);
    // remaining images come from the n-1 lattice points strictly inside
    // the open unit window above f0
    if (m == 1) {
      out.push_back(ShiftOrbit{ParaEmbedding::make(1, n, {f0})});
      continue;
    }
    if (m > n) break;
    std::vector<int> pick(static_cast<std::size_t>(m - 1));
    for (int i = 0; i < m - 1; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      std::vector<Rat> images{f0};
      for (int j : pick) images.push_back(f0 + Rat(j, n));
      out.push_back(ShiftOrbit{ParaEmbedding::make(m, n, std::move(images))});

      int i = m - 2;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - 1 - (m - 2 - i)) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m - 1; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

StructEmbedding project_to_cyclic(const ParaEmbedding& f) {
  const int m = f.source_order();
  const int n = f.target_order();
  std::vector<int> map;
  map.reserve(static_cast<std::size_t>(m));
  for (const auto& x : f.images()) {
    const Rat residue = rat_mod1(x) * n;
    if (residue.denominator() != 1) throw InternalError("projection landed off-lattice");
    map.push_back(static_cast<int>(residue.numerator()));
  }
  return StructEmbedding::make(standard_cycle(m), standard_cycle(n), std::move(map));
}

HorbReport verify_horb(int m, int n) {
  HorbReport report;
  report.m = m;
  report.n = n;

  const auto orbits = enumerate_canonical(m, n);
  const auto embeddings = enumerate_embeddings(standard_cycle(m), standard_cycle(n));
  report.orbit_count = orbits.size();
  report.embedding_count = embeddings.size();

  std::vector<std::optional<std::size_t>> hit_by(embeddings.size());
  for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
    const auto& f = orbits[oi].canonical;
    // projection must be constant along the orbit
    for (long long k : {-2ll, 1ll, 3ll}) {
      if (!(project_to_cyclic(shift_action(f, k)) == project_to_cyclic(f))) {
        report.problems.push_back("projection not shift-invariant on orbit " + para_label(f));
        break;
      }
    }
    const auto proj = project_to_cyclic(f).index_map();
    bool found = false;
    for (std::size_t ei = 0; ei < embeddings.size(); ++ei) {
      if (embeddings[ei].index_map() != proj) continue;
      found = true;
      if (hit_by[ei]) {
        report.problems.push_back("orbits " + para_label(orbits[*hit_by[ei]].canonical) + " and " +
                                  para_label(f) + " project to the same embedding");
      } else {
        hit_by[ei] = oi;
        report.matches.emplace_back(oi, ei);
      }
      break;
    }
    if (!found)
      report.problems.push_back("orbit " + para_label(f) + " projects outside the hom-set");
  }
  for (std::size_t ei = 0; ei < embeddings.size(); ++ei)
    if (!hit_by[ei]) report.problems.push_back("embedding #" + std::to_string(ei) + " not hit");

  report.pass = report.problems.empty() && report.orbit_count == report.embedding_count;
  return report;
}

bool FinitePoset::is_partial_order(std::string* witness) const {
  const int n = size();
  const auto blame = [&](const std::string& text) {
    if (witness) *witness = text;
    return false;
  };
  for (int i = 0; i < n; ++i)
    if (!leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)])
      return blame("not reflexive at " + labels[static_cast<std::size_t>(i)]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
          leq[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        return blame("antisymmetry fails on " + labels[static_cast<std::size_t>(i)] + ", " +
                     labels[static_cast<std::size_t>(j)]);
      for (int k = 0; k < n; ++k)
        if (leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
            leq[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] &&
            !leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
          return blame("transitivity fails through " + labels[static_cast<std::size_t>(j)]);
    }
  return true;
}

std::optional<int> FinitePoset::maximum() const {
  for (int t = 0; t < size(); ++t) {
    bool top = true;
    for (int x = 0; x < size() && top; ++x)
      top = leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(t)];
    if (top) return t;
  }
  return std::nullopt;
}

std::string para_label(const ParaEmbedding& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.images().size(); ++i) {
    if (i) out += ",";
    out += format_rat(f.images()[i]);
  }
  return out + ")";
}

namespace {

// Fundamental image of f1 contained in that of f2, both strictly increasing.
bool image_subset(const std::vector<Rat>& sub, const std::vector<Rat>& super) {
  std::size_t j = 0;
  for (const auto& x : sub) {
    while (j < super.size() && super[j] < x) ++j;
    if (j == super.size() || !(super[j] == x)) return false;
    ++j;
  }
  return true;
}

// Reconstructs the unique g with f2 . g = f1 and re-validates it; the
// under-category morphism must take fundamental window into fundamental
// window, which pins g completely.
void verify_unique_factorization(const ParaEmbedding& f1, const ParaEmbedding& f2) {
  std::vector<Rat> g_images;
  for (const auto& x : f1.images()) {
    const auto& sup = f2.images();
    const auto it = std::find(sup.begin(), sup.end(), x);
    if (it == sup.end()) throw InternalError("slice morphism without image containment");
    g_images.emplace_back(static_cast<long long>(it - sup.begin()), f2.source_order());
  }
  const auto g = ParaEmbedding::make(f1.source_order(), f2.source_order(), std::move(g_images));
  if (!(compose_para(f2, g) == f1)) throw InternalError("slice factorization failed to compose");
}

}  // namespace

namespace {

// Shared by slice_poset and verify_square; the latter's intersection piece
// can have an empty window, which is a legal (empty) slice here.
SlicePoset build_slice(int n, const Rat& lo, const Rat& hi, int k_max) {
  SlicePoset slice{n, lo, hi, k_max, {}, {}};
  for (int k = 1; k <= k_max; ++k) {
    for (const Rat& f0 : lattice_window(n, lo, hi)) {
      const Rat cap = std::min(f0 + 1, hi);
      const auto tail_slots = lattice_window(n, f0 + Rat(1, n), cap);
      const int avail = static_cast<int>(tail_slots.size());
      if (k - 1 > avail) continue;
      if (k == 1) {
        slice.objects.push_back(ParaEmbedding::make(1, n, {f0}));
        continue;
      }
      std::vector<int> pick(static_cast<std::size_t>(k - 1));
      for (int i = 0; i < k - 1; ++i) pick[static_cast<std::size_t>(i)] = i;
      while (true) {
        std::vector<Rat> images{f0};
        for (int j : pick) images.push_back(tail_slots[static_cast<std::size_t>(j)]);
        slice.objects.push_back(ParaEmbedding::make(k, n, std::move(images)));

        int i = k - 2;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == avail - 1 - (k - 2 - i)) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k - 1; ++j)
          pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }

  const std::size_t count = slice.objects.size();
  slice.poset.labels.reserve(count);
  for (const auto& f : slice.objects) slice.poset.labels.push_back(para_label(f));
  slice.poset.leq.assign(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      if (!image_subset(slice.objects[i].images(), slice.objects[j].images())) continue;
      verify_unique_factorization(slice.objects[i], slice.objects[j]);
      slice.poset.leq[i][j] = true;
    }
  return slice;
}

}  // namespace

SlicePoset slice_poset(int n, const Rat& lo, const Rat& hi, int k_max) {
  if (n < 1) throw InputError("slice_poset requires n >= 1");
  if (k_max < 1) throw InputError("slice_poset requires k_max >= 1");
  if (!(lo < hi)) throw InputError("slice window requires lo < hi");
  if (!in_lattice(lo, n) || !in_lattice(hi, n))
    throw InputError("slice window bounds must lie in (1/n)Z");
  return build_slice(n, lo, hi, k_max);
}

SquareReport verify_square(int n, const Rat& lo, const Rat& hi, int k_max) {
  if (n < 1) throw InputError("verify_square requires n >= 1");
  if (k_max < 1) throw InputError("verify_square requires k_max >= 1");
  if (!in_lattice(lo, n) || !in_lattice(hi, n))
    throw InputError("window bounds must lie in (1/n)Z");
  if (!(lo < hi - 1)) throw InputError("verify_square requires lo < hi - 1");

  SquareReport report;
  report.n = n;
  report.lo = lo;
  report.hi = hi;
  report.k_max = k_max;

  const Rat step(1, n);
  const auto top_left = build_slice(n, hi - 1, hi - step, k_max);
  const auto top_right = build_slice(n, hi - 1, hi, k_max);
  const auto bottom_left = build_slice(n, lo, hi - step, k_max);
  const auto bottom_right = build_slice(n, lo, hi, k_max);

  const auto key_set = [](const SlicePoset& s) {
    return std::set<ParaEmbedding>(s.objects.begin(), s.objects.end());
  };
  const auto tl = key_set(top_left);
  const auto tr = key_set(top_right);
  const auto bl = key_set(bottom_left);
  const auto br = key_set(bottom_right);

  std::set<ParaEmbedding> meet;
  std::set_intersection(tr.begin(), tr.end(), bl.begin(), bl.end(),
                        std::inserter(meet, meet.begin()));
  std::set<ParaEmbedding> join;
  std::set_union(tr.begin(), tr.end(), bl.begin(), bl.end(), std::inserter(join, join.begin()));

  report.objects_full = br.size();
  report.objects_intersection = tl.size();

  if (tl != meet) report.discrepancies.push_back("objects: intersection piece mismatch");
  if (br != join) report.discrepancies.push_back("objects: union piece mismatch");

  const auto relation_pairs = [](const SlicePoset& s) {
    std::set<std::pair<ParaEmbedding, ParaEmbedding>> pairs;
    for (std::size_t i = 0; i < s.objects.size(); ++i)
      for (std::size_t j = 0; j < s.objects.size(); ++j)
        if (s.poset.leq[i][j]) pairs.emplace(s.objects[i], s.objects[j]);
    return pairs;
  };
  const auto mor_tl = relation_pairs(top_left);
  const auto mor_tr = relation_pairs(top_right);
  const auto mor_bl = relation_pairs(bottom_left);
  const auto mor_br = relation_pairs(bottom_right);

  std::set<std::pair<ParaEmbedding, ParaEmbedding>> mor_meet;
  std::set_intersection(mor_tr.begin(), mor_tr.end(), mor_bl.begin(), mor_bl.end(),
                        std::inserter(mor_meet, mor_meet.begin()));
  std::set<std::pair<ParaEmbedding, ParaEmbedding>> mor_join;
  std::set_union(mor_tr.begin(), mor_tr.end(), mor_bl.begin(), mor_bl.end(),
                 std::inserter(mor_join, mor_join.begin()));

  if (mor_tl != mor_meet) report.discrepancies.push_back("morphisms: intersection piece mismatch");
  if (mor_br != mor_join) report.discrepancies.push_back("morphisms: union piece mismatch");

  for (const auto* piece : {&top_left, &top_right, &bottom_left, &bottom_right}) {
    std::string witness;
    if (!piece->poset.is_partial_order(&witness))
      report.discrepancies.push_back("piece is not a poset: " + witness);
  }

  report.pass = report.discrepancies.empty();
  return report;
}

}  // namespace cyctope
