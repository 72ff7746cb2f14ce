#include "pgd/structure.hpp"

#include "pgd/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace pgd {

std::uint64_t pack_tuple(std::span<const int> tuple) {
  std::uint64_t key = 0;
  for (int e : tuple)
    key = (key << 8) | static_cast<std::uint64_t>(e);
  return key;
}

RelationalStructure::RelationalStructure(int size, std::vector<Relation> relations)
    : size_(size), relations_(std::move(relations)) {
  if (size < 0 || size > 256)
    throw DomainError("structure size must be in [0, 256]");
  for (auto& rel : relations_) {
    if (rel.arity < 1 || rel.arity > 8)
      throw DomainError("relation '" + rel.name + "' has unsupported arity");
    for (const auto& t : rel.tuples) {
      if (static_cast<int>(t.size()) != rel.arity)
        throw DomainError("tuple of wrong arity in relation '" + rel.name + "'");
      for (int e : t)
        if (e < 0 || e >= size)
          throw DomainError("tuple element out of range in relation '" + rel.name + "'");
    }
    std::sort(rel.tuples.begin(), rel.tuples.end());
    rel.tuples.erase(std::unique(rel.tuples.begin(), rel.tuples.end()), rel.tuples.end());
    auto& set = lookup_.emplace_back();
    for (const auto& t : rel.tuples)
      set.insert(pack_tuple(t));
  }
}

std::vector<int> RelationalStructure::signature() const {
  std::vector<int> sig;
  for (const auto& rel : relations_)
    sig.push_back(rel.arity);
  return sig;
}

bool RelationalStructure::holds(std::size_t relation, std::span<const int> tuple) const {
  return lookup_.at(relation).count(pack_tuple(tuple)) != 0;
}

RelationalStructure induced(const RelationalStructure& r, std::span<const int> subset) {
  std::vector<int> index(r.size(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i)
    index.at(subset[i]) = static_cast<int>(i);
  std::vector<Relation> rels;
  for (const auto& rel : r.relations()) {
    Relation out{rel.name, rel.arity, {}};
    for (const auto& t : rel.tuples) {
      Tuple mapped(t.size());
      bool inside = true;
      for (std::size_t i = 0; i < t.size() && inside; ++i) {
        mapped[i] = index[t[i]];
        inside = mapped[i] >= 0;
      }
      if (inside)
        out.tuples.push_back(std::move(mapped));
    }
    rels.push_back(std::move(out));
  }
  return RelationalStructure(static_cast<int>(subset.size()), std::move(rels));
}

RelationalStructure induced(const RelationalStructure& r, ElementSet subset) {
  std::vector<int> elems;
  for (ElementSet b = subset; b; b &= b - 1)
    elems.push_back(std::countr_zero(b));
  return induced(r, elems);
}

bool are_twins(const RelationalStructure& r, int x, int y) {
  if (x == y)
    return true;
  for (std::size_t ri = 0; ri < r.relations().size(); ++ri)
    for (const auto& t : r.relations()[ri].tuples) {
      Tuple s = t;
      for (int& e : s)
        e = e == x ? y : (e == y ? x : e);
      if (!r.holds(ri, s))
        return false;
    }
  return true;
}

bool is_local_isomorphism(const RelationalStructure& r, const LocalBijection& f) {
  if (f.ground_size() != r.size())
    throw DomainError("local bijection lives on a different ground set");
  for (std::size_t ri = 0; ri < r.relations().size(); ++ri) {
    long inside_dom = 0, inside_im = 0;
    for (const auto& t : r.relations()[ri].tuples) {
      bool in_dom = std::all_of(t.begin(), t.end(), [&](int e) { return f.defined_at(e); });
      bool in_im = std::all_of(t.begin(), t.end(), [&](int e) { return f.image().contains(e); });
      inside_im += in_im;
      if (!in_dom)
        continue;
      ++inside_dom;
      Tuple image(t.size());
      for (std::size_t i = 0; i < t.size(); ++i)
        image[i] = f(t[i]);
      if (!r.holds(ri, image))
        return false;
    }
    // Forward images are distinct, so equal counts give reflection.
    if (inside_dom != inside_im)
      return false;
  }
  return true;
}

namespace {

struct Incidence {
  std::size_t relation;
  std::size_t tuple;
};

std::vector<std::vector<Incidence>> incidences(const RelationalStructure& r) {
  std::vector<std::vector<Incidence>> out(r.size());
  for (std::size_t ri = 0; ri < r.relations().size(); ++ri) {
    const auto& tuples = r.relations()[ri].tuples;
    for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
      const auto& t = tuples[ti];
      for (std::size_t i = 0; i < t.size(); ++i)
        if (std::find(t.begin(), t.begin() + i, t[i]) == t.begin() + i)
          out[t[i]].push_back({ri, ti});
    }
  }
  return out;
}

/// Per element: counts by (relation, position), then loop counts.
std::vector<std::vector<int>> element_profiles(const RelationalStructure& r) {
  std::size_t width = 0;
  for (const auto& rel : r.relations())
    width += rel.arity + 1;
  std::vector<std::vector<int>> prof(r.size(), std::vector<int>(width, 0));
  std::size_t base = 0;
  for (const auto& rel : r.relations()) {
    for (const auto& t : rel.tuples) {
      for (int i = 0; i < rel.arity; ++i)
        ++prof[t[i]][base + i];
      std::vector<int> sorted = t;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        for (int e : t)
          ++prof[e][base + rel.arity];
    }
    base += rel.arity + 1;
  }
  return prof;
}

class IsoSearch {
public:
  IsoSearch(const RelationalStructure& a, const RelationalStructure& b)
      : a_(a), b_(b), n_(a.size()), inc_a_(incidences(a)), inc_b_(incidences(b)),
        prof_a_(element_profiles(a)), prof_b_(element_profiles(b)), fwd_(n_, -1), bwd_(n_, -1),
        twin_(n_) {
    std::iota(twin_.begin(), twin_.end(), 0);
    for (int y = 0; y < n_; ++y)
      for (int z = 0; z < y; ++z)
        if (twin_[z] == z && prof_b_[y] == prof_b_[z] && are_twins(b_, y, z)) {
          twin_[y] = z;
          break;
        }
  }

  bool run() { return extend(0); }

private:
  bool consistent(int x, int y) const {
    for (const auto& inc : inc_a_[x]) {
      const auto& t = a_.relations()[inc.relation].tuples[inc.tuple];
      Tuple image(t.size());
      bool complete = true;
      for (std::size_t i = 0; i < t.size() && complete; ++i) {
        image[i] = fwd_[t[i]];
        complete = image[i] >= 0;
      }
      if (complete && !b_.holds(inc.relation, image))
        return false;
    }
    for (const auto& inc : inc_b_[y]) {
      const auto& t = b_.relations()[inc.relation].tuples[inc.tuple];
      Tuple pre(t.size());
      bool complete = true;
      for (std::size_t i = 0; i < t.size() && complete; ++i) {
        pre[i] = bwd_[t[i]];
        complete = pre[i] >= 0;
      }
      if (complete && !a_.holds(inc.relation, pre))
        return false;
    }
    return true;
  }

  bool extend(int x) {
    if (x == n_)
      return true;
    std::vector<int> failed_classes;
    for (int y = 0; y < n_; ++y) {
      if (bwd_[y] >= 0 || prof_a_[x] != prof_b_[y])
        continue;
      // An unused twin of a failed candidate fails as well.
      if (std::find(failed_classes.begin(), failed_classes.end(), twin_[y]) != failed_classes.end())
        continue;
      fwd_[x] = y;
      bwd_[y] = x;
      if (consistent(x, y) && extend(x + 1))
        return true;
      fwd_[x] = -1;
      bwd_[y] = -1;
      failed_classes.push_back(twin_[y]);
    }
    return false;
  }

  const RelationalStructure& a_;
  const RelationalStructure& b_;
  int n_;
  std::vector<std::vector<Incidence>> inc_a_, inc_b_;
  std::vector<std::vector<int>> prof_a_, prof_b_;
  std::vector<int> fwd_, bwd_;
  std::vector<int> twin_;
};

} // namespace

bool isomorphic(const RelationalStructure& a, const RelationalStructure& b, int guard) {
  if (a.signature() != b.signature())
    throw DomainError("isomorphism test between structures of different signatures");
  if (a.size() != b.size())
    return false;
  if (a.size() > guard)
    throw GuardExceeded("isomorphism test refused above " + std::to_string(guard) + " elements");
  for (std::size_t i = 0; i < a.relations().size(); ++i)
    if (a.relations()[i].tuples.size() != b.relations()[i].tuples.size())
      return false;
  auto pa = element_profiles(a), pb = element_profiles(b);
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  if (pa != pb)
    return false;
  return IsoSearch(a, b).run();
}

std::vector<std::int64_t> IsoClassifier::invariant(const RelationalStructure& s) const {
  std::vector<std::int64_t> inv{s.size()};
  for (const auto& rel : s.relations())
    inv.push_back(static_cast<std::int64_t>(rel.tuples.size()));
  auto prof = element_profiles(s);
  std::sort(prof.begin(), prof.end());
  for (const auto& p : prof)
    inv.insert(inv.end(), p.begin(), p.end());
  return inv;
}

int IsoClassifier::classify(const RelationalStructure& s) {
  auto& bucket = buckets_[invariant(s)];
  for (int id : bucket)
    if (isomorphic(reps_[id], s, guard_))
      return id;
  int id = static_cast<int>(reps_.size());
  reps_.push_back(s);
  bucket.push_back(id);
  return id;
}

long profile(const RelationalStructure& r, int n, int guard) {
  if (n < 0 || n > r.size())
    return 0;
  if (n > guard)
    throw GuardExceeded("profile refused above " + std::to_string(guard) + " elements");
  IsoClassifier classes(guard);
  std::vector<int> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    classes.classify(induced(r, pick));
    int i = n - 1;
    while (i >= 0 && pick[i] == r.size() - n + i)
      --i;
    if (i < 0)
      break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j)
      pick[j] = pick[j - 1] + 1;
  }
  return classes.class_count();
}

std::vector<int> subset_iso_classes(const RelationalStructure& r, int guard) {
  if (r.size() > 20)
    throw GuardExceeded("subset classification needs at most 20 elements");
  if (r.size() > guard)
    throw GuardExceeded("subset classification refused above " + std::to_string(guard) + " elements");
  IsoClassifier classes(guard);
  std::vector<int> labels(std::size_t{1} << r.size());
  for (std::size_t s = 0; s < labels.size(); ++s)
    labels[s] = classes.classify(induced(r, static_cast<ElementSet>(s)));
  return labels;
}

namespace {

bool monomorphic_part_from_labels(const std::vector<int>& labels, int n, ElementSet part) {
  ElementSet all = n == 64 ? ~ElementSet{0} : ((ElementSet{1} << n) - 1);
  ElementSet outside = all & ~part;
  // For each fixed trace C outside the part, every size class inside it must be uniform.
  ElementSet c = 0;
  do {
    std::vector<int> seen(std::popcount(part) + 1, -1);
    ElementSet d = 0;
    do {
      int k = std::popcount(d);
      int label = labels[c | d];
      if (seen[k] < 0)
        seen[k] = label;
      else if (seen[k] != label)
        return false;
      d = (d - part) & part;
    } while (d != 0);
    c = (c - outside) & outside;
  } while (c != 0);
  return true;
}

ElementSet largest_part_from_labels(const std::vector<int>& labels, int n, int x) {
  ElementSet part = ElementSet{1} << x;
  for (int y = 0; y < n; ++y)
    if (y != x && monomorphic_part_from_labels(labels, n, (ElementSet{1} << x) | (ElementSet{1} << y)))
      part |= ElementSet{1} << y;
  if (!monomorphic_part_from_labels(labels, n, part))
    throw DomainError("pairwise monomorphic parts do not assemble into a monomorphic part");
  return part;
}

} // namespace

bool is_monomorphic_part(const RelationalStructure& r, ElementSet part, int guard) {
  return monomorphic_part_from_labels(subset_iso_classes(r, guard), r.size(), part);
}

ElementSet largest_monomorphic_part(const RelationalStructure& r, int x, int guard) {
  if (x < 0 || x >= r.size())
    throw DomainError("element out of range");
  return largest_part_from_labels(subset_iso_classes(r, guard), r.size(), x);
}

std::vector<ElementSet> canonical_decomposition(const RelationalStructure& r, int guard) {
  auto labels = subset_iso_classes(r, guard);
  std::vector<ElementSet> blocks;
  ElementSet covered = 0;
  for (int x = 0; x < r.size(); ++x) {
    if (covered >> x & 1)
      continue;
    ElementSet block = largest_part_from_labels(labels, r.size(), x);
    covered |= block;
    blocks.push_back(block);
  }
  return blocks;
}

bool is_monomorphic_decomposition(const RelationalStructure& r, std::span<const ElementSet> blocks,
                                  int guard) {
  ElementSet all = r.size() == 64 ? ~ElementSet{0} : ((ElementSet{1} << r.size()) - 1);
  ElementSet covered = 0;
  for (ElementSet b : blocks) {
    if (b == 0 || (covered & b) || (b & ~all))
      return false;
    covered |= b;
  }
  if (covered != all)
    return false;
  auto labels = subset_iso_classes(r, guard);
  return std::all_of(blocks.begin(), blocks.end(),
                     [&](ElementSet b) { return monomorphic_part_from_labels(labels, r.size(), b); });
}

} // namespace pgd
