#include "pgd/local_bijection.hpp"

#include "pgd/errors.hpp"

#include <sstream>

namespace pgd {

LocalBijection::LocalBijection(int ground_size) {
  if (ground_size < 0 || ground_size > kMaxPoints)
    throw DomainError("ground set size " + std::to_string(ground_size) + " outside [0, " +
                      std::to_string(kMaxPoints) + "]");
  n_ = static_cast<std::uint8_t>(ground_size);
  img_.fill(-1);
}

LocalBijection LocalBijection::from_pairs(int ground_size, std::span<const std::pair<int, int>> pairs) {
  LocalBijection f(ground_size);
  for (auto [from, to] : pairs) {
    if (from < 0 || from >= ground_size || to < 0 || to >= ground_size)
      throw DomainError("point outside the ground set in local bijection");
    if (f.dom_.contains(from)) {
      if (f.img_[from] == to)
        continue;
      throw DomainError("point " + std::to_string(from) + " mapped twice");
    }
    if (f.im_.contains(to))
      throw DomainError("local bijection is not injective");
    f.img_[from] = static_cast<std::int8_t>(to);
    f.dom_ = f.dom_.with(from);
    f.im_ = f.im_.with(to);
  }
  return f;
}

LocalBijection LocalBijection::identity(int ground_size, PointSet on) {
  LocalBijection f(ground_size);
  on.for_each([&](int p) { f.img_[p] = static_cast<std::int8_t>(p); });
  f.dom_ = f.im_ = on;
  return f;
}

LocalBijection LocalBijection::permutation(std::span<const int> perm) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < perm.size(); ++i)
    pairs.emplace_back(static_cast<int>(i), perm[i]);
  return from_pairs(static_cast<int>(perm.size()), pairs);
}

bool LocalBijection::is_identity() const {
  bool id = true;
  dom_.for_each([&](int p) { id = id && img_[p] == p; });
  return id;
}

LocalBijection LocalBijection::inverse() const {
  LocalBijection g(n_);
  dom_.for_each([&](int p) { g.img_[img_[p]] = static_cast<std::int8_t>(p); });
  g.dom_ = im_;
  g.im_ = dom_;
  return g;
}

LocalBijection LocalBijection::restricted_to(PointSet subset) const {
  LocalBijection g(n_);
  PointSet keep = subset & dom_;
  keep.for_each([&](int p) {
    g.img_[p] = img_[p];
    g.im_ = g.im_.with(img_[p]);
  });
  g.dom_ = keep;
  return g;
}

PointSet LocalBijection::apply(PointSet s) const {
  PointSet out;
  (s & dom_).for_each([&](int p) { out = out.with(img_[p]); });
  return out;
}

std::vector<std::pair<int, int>> LocalBijection::pairs() const {
  std::vector<std::pair<int, int>> out;
  dom_.for_each([&](int p) { out.emplace_back(p, img_[p]); });
  return out;
}

std::strong_ordering operator<=>(const LocalBijection& a, const LocalBijection& b) {
  if (auto c = a.n_ <=> b.n_; c != 0)
    return c;
  if (auto c = a.rank() <=> b.rank(); c != 0)
    return c;
  if (a.dom_ != b.dom_) {
    // Lexicographic comparison of sorted point lists: the first point in the
    // symmetric difference decides, and the set containing it is smaller.
    std::uint32_t diff = a.dom_.bits() ^ b.dom_.bits();
    int first = std::countr_zero(diff);
    return a.dom_.contains(first) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  for (int p : a.dom_.points())
    if (auto c = a.img_[p] <=> b.img_[p]; c != 0)
      return c;
  return std::strong_ordering::equal;
}

std::size_t LocalBijection::hash() const {
  std::size_t h = 1469598103934665603ull ^ n_;
  for (int i = 0; i < n_; ++i)
    h = (h ^ static_cast<std::uint8_t>(img_[i])) * 1099511628211ull;
  return h;
}

LocalBijection compose(const LocalBijection& f, const LocalBijection& g) {
  if (g.image() != f.domain())
    throw DomainError("groupoid composition requires im g = dom f");
  return compose_monoid(f, g);
}

LocalBijection compose_monoid(const LocalBijection& f, const LocalBijection& g) {
  std::vector<std::pair<int, int>> pairs;
  g.domain().for_each([&](int x) {
    int y = g(x);
    if (f.defined_at(y))
      pairs.emplace_back(x, f(y));
  });
  return LocalBijection::from_pairs(f.ground_size(), pairs);
}

std::string to_string(const LocalBijection& f, std::span<const std::string> labels) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [a, b] : f.pairs()) {
    if (!first)
      os << ", ";
    first = false;
    os << labels[a] << "->" << labels[b];
  }
  os << '}';
  return os.str();
}

std::string to_string(const LocalBijection& f) {
  std::vector<std::string> labels;
  for (int i = 0; i < f.ground_size(); ++i)
    labels.push_back(std::to_string(i + 1));
  return to_string(f, labels);
}

} // namespace pgd
