#include "pgd/layered.hpp"

#include "pgd/errors.hpp"
#include "pgd/monomial.hpp"
#include "pgd/term_order.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace pgd {

int LayeredStructure::unbounded_count() const {
  return static_cast<int>(std::count(multiplicities.begin(), multiplicities.end(), std::nullopt));
}

void LayeredStructure::validate() const {
  if (static_cast<int>(multiplicities.size()) != quotient.size())
    throw DomainError("one multiplicity per quotient element is required");
  for (const auto& m : multiplicities)
    if (m && *m < 1)
      throw DomainError("finite multiplicities must be positive");
}

RelationalStructure realize(const LayeredStructure& l, std::span<const int> sizes) {
  int k = l.component_count();
  if (static_cast<int>(sizes.size()) != k)
    throw DomainError("one size per component is required");
  std::vector<int> offset(k + 1, 0);
  for (int i = 0; i < k; ++i) {
    if (sizes[i] < 0 || (l.multiplicities[i] && sizes[i] > *l.multiplicities[i]))
      throw DomainError("component size exceeds its multiplicity");
    offset[i + 1] = offset[i] + sizes[i];
  }
  int total = offset[k];

  std::vector<Relation> rels;
  for (const auto& qrel : l.quotient.relations()) {
    Relation rel{qrel.name, qrel.arity, {}};
    for (const auto& qt : qrel.tuples) {
      Tuple t(qt.size());
      std::vector<bool> used(total, false);
      auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == qt.size()) {
          rel.tuples.push_back(t);
          return;
        }
        int c = qt[i];
        for (int e = offset[c]; e < offset[c + 1]; ++e) {
          if (used[e])
            continue;
          used[e] = true;
          t[i] = e;
          self(self, i + 1);
          used[e] = false;
        }
      };
      rec(rec, 0);
    }
    rels.push_back(std::move(rel));
  }
  if (l.block_equivalence) {
    Relation eq{"equiv", 2, {}};
    for (int i = 0; i < k; ++i)
      for (int a = offset[i]; a < offset[i + 1]; ++a)
        for (int b = offset[i]; b < offset[i + 1]; ++b)
          if (a != b)
            eq.tuples.push_back({a, b});
    rels.push_back(std::move(eq));
  }
  return RelationalStructure(total, std::move(rels));
}

std::vector<std::int64_t> twin_canonical_form(const RelationalStructure& r, std::span<const int> block_of) {
  int n = r.size();
  if (static_cast<int>(block_of.size()) != n)
    throw DomainError("one block label per element is required");
  // Merge blocks whose representatives are twins.
  std::map<int, int> rep;
  for (int x = 0; x < n; ++x)
    rep.try_emplace(block_of[x], x);
  std::vector<int> reps;
  for (auto [b, x] : rep)
    reps.push_back(x);
  std::vector<int> cls(reps.size());
  std::iota(cls.begin(), cls.end(), 0);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (cls[j] == static_cast<int>(j) && are_twins(r, reps[i], reps[j])) {
        cls[i] = cls[j];
        break;
      }
  std::map<int, int> dense;
  for (int c : cls)
    dense.try_emplace(c, static_cast<int>(dense.size()));
  std::map<int, int> block_index;
  for (std::size_t i = 0; i < reps.size(); ++i)
    block_index[block_of[reps[i]]] = dense[cls[i]];
  int c = static_cast<int>(dense.size());
  std::vector<int> class_of(n);
  std::vector<std::int64_t> sizes(c, 0);
  for (int x = 0; x < n; ++x) {
    class_of[x] = block_index[block_of[x]];
    ++sizes[class_of[x]];
  }

  // Per relation: set of (class tuple, equality pattern).
  std::vector<std::set<std::vector<int>>> patterns;
  for (const auto& rel : r.relations()) {
    std::set<std::vector<int>> ps;
    for (const auto& t : rel.tuples) {
      std::vector<int> key;
      for (int e : t)
        key.push_back(class_of[e]);
      for (std::size_t i = 0; i < t.size(); ++i)
        key.push_back(static_cast<int>(std::find(t.begin(), t.end(), t[i]) - t.begin()));
      ps.insert(std::move(key));
    }
    patterns.push_back(std::move(ps));
  }

  std::vector<int> perm(c);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::int64_t> best;
  do {
    std::vector<std::int64_t> enc{c};
    std::vector<std::int64_t> permuted_sizes(c);
    for (int i = 0; i < c; ++i)
      permuted_sizes[perm[i]] = sizes[i];
    enc.insert(enc.end(), permuted_sizes.begin(), permuted_sizes.end());
    for (std::size_t ri = 0; ri < patterns.size(); ++ri) {
      int arity = r.relations()[ri].arity;
      std::vector<std::vector<int>> mapped;
      for (auto key : patterns[ri]) {
        for (int i = 0; i < arity; ++i)
          key[i] = perm[key[i]];
        mapped.push_back(std::move(key));
      }
      std::sort(mapped.begin(), mapped.end());
      enc.push_back(static_cast<std::int64_t>(mapped.size()));
      for (const auto& key : mapped)
        enc.insert(enc.end(), key.begin(), key.end());
    }
    if (best.empty() || enc < best)
      best = std::move(enc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::vector<int>> trace_vectors(const LayeredStructure& l, int n) {
  int k = l.component_count();
  std::vector<std::vector<int>> out;
  if (k == 0) {
    if (n == 0)
      out.emplace_back();
    return out;
  }
  std::vector<int> d(k, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    int cap = l.multiplicities[i] ? std::min(left, *l.multiplicities[i]) : left;
    if (i == k - 1) {
      if (left <= cap) {
        d[i] = left;
        out.push_back(d);
      }
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      d[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

std::vector<std::int64_t> trace_form(const LayeredStructure& l, std::span<const int> d) {
  auto r = realize(l, d);
  std::vector<int> block_of;
  for (std::size_t i = 0; i < d.size(); ++i)
    block_of.insert(block_of.end(), d[i], static_cast<int>(i));
  return twin_canonical_form(r, block_of);
}

namespace {

std::vector<std::vector<std::int64_t>> forms_for(const LayeredStructure& l, const std::vector<std::vector<int>>& ds,
                                                 int jobs) {
  std::vector<std::vector<std::int64_t>> forms(ds.size());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(ds.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < ds.size(); ++i)
      forms[i] = trace_form(l, ds[i]);
    return forms;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < ds.size(); i += jobs)
          forms[i] = trace_form(l, ds[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : workers)
    t.join();
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
  return forms;
}

} // namespace

std::vector<long> profile_layered_values(const LayeredStructure& l, int upto, int jobs) {
  l.validate();
  std::vector<long> out;
  for (int n = 0; n <= upto; ++n) {
    auto forms = forms_for(l, trace_vectors(l, n), jobs);
    std::set<std::vector<std::int64_t>> distinct(forms.begin(), forms.end());
    out.push_back(static_cast<long>(distinct.size()));
  }
  return out;
}

long profile_layered(const LayeredStructure& l, int n, int jobs) {
  if (n < 0)
    return 0;
  l.validate();
  auto forms = forms_for(l, trace_vectors(l, n), jobs);
  return static_cast<long>(std::set<std::vector<std::int64_t>>(forms.begin(), forms.end()).size());
}

RationalSeries profile_series(const LayeredStructure& l, int margin, int jobs) {
  l.validate();
  int k = l.unbounded_count();
  if (k < 1)
    throw DomainError("profile series needs at least one unbounded component");
  std::vector<int> den(k);
  std::iota(den.begin(), den.end(), 1);
  // Finite components and components holding fewer points than the largest
  // arity both contribute exceptional low-degree terms to the numerator.
  int arity = l.block_equivalence ? 2 : 1;
  for (const auto& rel : l.quotient.relations())
    arity = std::max(arity, rel.arity);
  int extra = (arity - 1) * k;
  for (const auto& m : l.multiplicities)
    extra += m.value_or(0);
  int top = k * (k + 1) / 2 + extra;
  auto values = profile_layered_values(l, top + margin, jobs);
  std::vector<Integer> big(values.begin(), values.end());
  return fit_series(big, std::move(den), margin, extra);
}

AddLayerReport check_addlayer(const LayeredStructure& l, int dmax) {
  l.validate();
  int k = l.component_count();
  auto order = TermOrder::shape_then_lex();
  // Leading monomial of every trace class up to degree dmax + k.
  std::map<std::vector<std::int64_t>, Monomial> leading;
  std::map<std::vector<int>, std::vector<std::int64_t>> form_of;
  for (int n = 0; n <= dmax + k; ++n)
    for (const auto& d : trace_vectors(l, n)) {
      auto form = trace_form(l, d);
      Monomial m = Monomial::from_exponents(d);
      auto [it, inserted] = leading.try_emplace(form, m);
      if (!inserted && order.less(it->second, m))
        it->second = m;
      form_of.emplace(d, std::move(form));
    }
  AddLayerReport report;
  for (const auto& [form, m] : leading) {
    if (m.degree() > dmax)
      continue;
    auto d = m.exponents(k);
    for (const auto& layer : chain_decompose(m).layers) {
      bool exhausted = false;
      layer.set.for_each([&](int i) { exhausted = exhausted || (l.multiplicities[i] && d[i] == *l.multiplicities[i]); });
      if (exhausted)
        continue;
      ++report.checked;
      Monomial grown = m * Monomial::square_free(layer.set);
      const auto& grown_form = form_of.at(grown.exponents(k));
      if (leading.at(grown_form) != grown) {
        report.ok = false;
        report.violation = to_string(m) + " is leading but " + to_string(grown) + " is not";
        return report;
      }
    }
  }
  return report;
}

} // namespace pgd
