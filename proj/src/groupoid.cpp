#include "pgd/groupoid.hpp"

#include "pgd/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace pgd {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i)
    out.push_back(std::to_string(i + 1));
  return out;
}

PermutationGroupoid PermutationGroupoid::from_closed(int n, std::vector<LocalBijection> elements,
                                                     std::vector<std::string> labels) {
  PermutationGroupoid g;
  g.n_ = n;
  g.labels_ = labels.empty() ? default_labels(n) : std::move(labels);
  if (static_cast<int>(g.labels_.size()) != n)
    throw DomainError("label count does not match ground set size");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  g.elements_ = std::move(elements);
  g.members_.insert(g.elements_.begin(), g.elements_.end());

  g.by_domain_ = g.elements_;
  std::stable_sort(g.by_domain_.begin(), g.by_domain_.end(),
                   [](const LocalBijection& a, const LocalBijection& b) { return a.domain() < b.domain(); });
  for (std::size_t i = 0; i < g.by_domain_.size();) {
    std::size_t j = i;
    while (j < g.by_domain_.size() && g.by_domain_[j].domain() == g.by_domain_[i].domain())
      ++j;
    g.domain_ranges_[g.by_domain_[i].domain().bits()] = {i, j};
    i = j;
  }
  return g;
}

std::span<const LocalBijection> PermutationGroupoid::with_domain(PointSet domain) const {
  auto it = domain_ranges_.find(domain.bits());
  if (it == domain_ranges_.end())
    return {};
  return std::span<const LocalBijection>(by_domain_).subspan(it->second.first,
                                                             it->second.second - it->second.first);
}

PermutationGroupoid close(std::span<const LocalBijection> generators, int n, std::vector<std::string> labels) {
  if (n < 0 || n > LocalBijection::kMaxPoints)
    throw DomainError("ground set too large");
  for (const auto& f : generators)
    if (f.ground_size() != n)
      throw DomainError("generator lives on a different ground set");

  std::vector<LocalBijection> list;
  std::unordered_set<LocalBijection, LocalBijectionHash> seen;
  std::unordered_map<std::uint32_t, std::vector<std::size_t>> by_dom, by_im;
  std::deque<std::size_t> work;

  auto add = [&](const LocalBijection& f) {
    if (!seen.insert(f).second)
      return;
    list.push_back(f);
    std::size_t idx = list.size() - 1;
    by_dom[f.domain().bits()].push_back(idx);
    by_im[f.image().bits()].push_back(idx);
    work.push_back(idx);
  };

  add(LocalBijection::identity(n));
  for (const auto& f : generators)
    add(f);

  while (!work.empty()) {
    LocalBijection f = list[work.front()];
    work.pop_front();
    add(f.inverse());
    f.domain().for_each([&](int p) { add(f.restricted_to(f.domain().without(p))); });
    // f∘g for im g = dom f, and g∘f for im f = dom g.
    if (auto it = by_im.find(f.domain().bits()); it != by_im.end()) {
      auto idxs = it->second;
      for (std::size_t gi : idxs)
        add(compose(f, list[gi]));
    }
    if (auto it = by_dom.find(f.image().bits()); it != by_dom.end()) {
      auto idxs = it->second;
      for (std::size_t gi : idxs)
        add(compose(list[gi], f));
    }
  }
  return PermutationGroupoid::from_closed(n, std::move(list), std::move(labels));
}

bool satisfies_groupoid_axioms(std::span<const LocalBijection> elements, int n) {
  std::unordered_set<LocalBijection, LocalBijectionHash> set(elements.begin(), elements.end());
  if (!set.count(LocalBijection::identity(n)))
    return false;
  for (const auto& f : elements) {
    if (!set.count(f.inverse()))
      return false;
    bool ok = true;
    f.domain().for_each([&](int p) { ok = ok && set.count(f.restricted_to(f.domain().without(p))); });
    if (!ok)
      return false;
    for (const auto& g : elements)
      if (g.image() == f.domain() && !set.count(compose(f, g)))
        return false;
  }
  return true;
}

std::vector<LocalBijection> underlying_group(const PermutationGroupoid& g) {
  auto span = g.with_domain(PointSet::full(g.ground_size()));
  std::vector<LocalBijection> out(span.begin(), span.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool comes_from_group(const PermutationGroupoid& g) {
  auto group = underlying_group(g);
  return close(group, g.ground_size()) == g;
}

PermutationGroupoid restrict(const PermutationGroupoid& g, PointSet subset) {
  std::vector<int> new_index(g.ground_size(), -1);
  std::vector<std::string> labels;
  int m = 0;
  for (int p : subset.points()) {
    if (p >= g.ground_size())
      throw DomainError("restriction subset is not contained in the ground set");
    new_index[p] = m++;
    labels.push_back(g.labels()[p]);
  }
  std::vector<LocalBijection> kept;
  for (const auto& f : g.elements()) {
    if (!f.domain().subset_of(subset) || !f.image().subset_of(subset))
      continue;
    std::vector<std::pair<int, int>> pairs;
    for (auto [a, b] : f.pairs())
      pairs.emplace_back(new_index[a], new_index[b]);
    kept.push_back(LocalBijection::from_pairs(m, pairs));
  }
  return PermutationGroupoid::from_closed(m, std::move(kept), std::move(labels));
}

namespace {

bool is_transposition(const LocalBijection& f) {
  int moved = 0;
  f.domain().for_each([&](int p) { moved += f(p) != p; });
  return moved == 2;
}

} // namespace

bool reflection_criterion(const PermutationGroupoid& g) {
  if (!comes_from_group(g))
    return false;
  auto group = underlying_group(g);
  std::vector<LocalBijection> reflections;
  for (const auto& f : group)
    if (is_transposition(f))
      reflections.push_back(f);
  // Subgroup generated by the transpositions.
  std::unordered_set<LocalBijection, LocalBijectionHash> generated{LocalBijection::identity(g.ground_size())};
  std::deque<LocalBijection> work(generated.begin(), generated.end());
  while (!work.empty()) {
    auto f = work.front();
    work.pop_front();
    for (const auto& t : reflections) {
      auto h = compose(t, f);
      if (generated.insert(h).second)
        work.push_back(h);
    }
  }
  return generated.size() == group.size();
}

std::vector<PointSet> transitive_components(const PermutationGroupoid& g) {
  int n = g.ground_size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : g.elements())
    for (auto [a, b] : f.pairs())
      parent[find(a)] = find(b);
  std::vector<PointSet> comps;
  std::vector<int> slot(n, -1);
  for (int p = 0; p < n; ++p) {
    int r = find(p);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[r]] = comps[slot[r]].with(p);
  }
  return comps;
}

namespace {

/// Calls f on every local bijection of {0..n-1} with rank <= max_rank.
template <class F> void for_each_local_bijection(int n, int max_rank, F&& f) {
  for (std::uint32_t dom = 0; dom < (1u << n); ++dom) {
    PointSet d(dom);
    if (d.size() > max_rank)
      continue;
    auto pts = d.points();
    std::vector<std::pair<int, int>> pairs(pts.size());
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == pts.size()) {
        f(LocalBijection::from_pairs(n, pairs));
        return;
      }
      for (int y = 0; y < n; ++y) {
        if (used[y])
          continue;
        used[y] = true;
        pairs[i] = {pts[i], y};
        self(self, i + 1);
        used[y] = false;
      }
    };
    rec(rec, 0);
  }
}

} // namespace

PermutationGroupoid full_local_bijections(int n) {
  std::vector<LocalBijection> all;
  for_each_local_bijection(n, n, [&](const LocalBijection& f) { all.push_back(f); });
  return PermutationGroupoid::from_closed(n, std::move(all));
}

PermutationGroupoid increasing_groupoid(int n) {
  std::vector<LocalBijection> all;
  for (std::uint32_t a = 0; a < (1u << n); ++a)
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
      PointSet da(a), ib(b);
      if (da.size() != ib.size())
        continue;
      auto from = da.points(), to = ib.points();
      std::vector<std::pair<int, int>> pairs;
      for (std::size_t i = 0; i < from.size(); ++i)
        pairs.emplace_back(from[i], to[i]);
      all.push_back(LocalBijection::from_pairs(n, pairs));
    }
  return PermutationGroupoid::from_closed(n, std::move(all));
}

PermutationGroupoid staircase_groupoid(int n) {
  std::vector<LocalBijection> all{LocalBijection::identity(n)};
  for_each_local_bijection(n, n - 1, [&](const LocalBijection& f) { all.push_back(f); });
  return PermutationGroupoid::from_closed(n, std::move(all));
}

PermutationGroupoid from_permutations(std::span<const std::vector<int>> generators, int n) {
  std::vector<LocalBijection> gens;
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != n)
      throw DomainError("permutation has the wrong length");
    gens.push_back(LocalBijection::permutation(p));
  }
  return close(gens, n);
}

std::vector<LocalBijection> local_isomorphisms(const RelationalStructure& r, int guard) {
  if (r.size() > guard)
    throw GuardExceeded("local isomorphism enumeration refused above " + std::to_string(guard) + " points");
  if (r.size() > LocalBijection::kMaxPoints)
    throw GuardExceeded("structure too large for local bijections");
  std::vector<LocalBijection> out;
  for_each_local_bijection(r.size(), r.size(), [&](const LocalBijection& f) {
    if (is_local_isomorphism(r, f))
      out.push_back(f);
  });
  std::sort(out.begin(), out.end());
  return out;
}

RelationalStructure to_relational_structure(const PermutationGroupoid& g, int guard) {
  int n = g.ground_size();
  if (n > guard)
    throw GuardExceeded("to_relational_structure refused above " + std::to_string(guard) + " points");
  std::vector<Relation> relations;
  for (int k = 1; k <= n; ++k) {
    // Injective k-tuples in lexicographic order.
    std::vector<Tuple> tuples;
    Tuple t(k);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == k) {
        tuples.push_back(t);
        return;
      }
      for (int p = 0; p < n; ++p) {
        if (used[p])
          continue;
        used[p] = true;
        t[i] = p;
        self(self, i + 1);
        used[p] = false;
      }
    };
    rec(rec, 0);

    std::unordered_set<std::uint64_t> assigned;
    int orbit_index = 0;
    for (const auto& base : tuples) {
      if (assigned.count(pack_tuple(base)))
        continue;
      PointSet support;
      for (int p : base)
        support = support.with(p);
      Relation rel{"orbit" + std::to_string(k) + "_" + std::to_string(orbit_index++), k, {}};
      for (const auto& f : g.with_domain(support)) {
        Tuple image(k);
        for (int i = 0; i < k; ++i)
          image[i] = f(base[i]);
        if (assigned.insert(pack_tuple(image)).second)
          rel.tuples.push_back(image);
      }
      relations.push_back(std::move(rel));
    }
  }
  return RelationalStructure(n, std::move(relations));
}

} // namespace pgd
