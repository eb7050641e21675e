#pragma once

#include <map>
#include <vector>

#include "hiicheck/rootdata.hpp"
#include "hiicheck/torus.hpp"

namespace hii {

inline constexpr size_t kDefaultWeylLimit = 51840;

struct WeylElement {
  std::vector<size_t> perm;  // root index -> image root index
  Vec matrix;                // n x n, row major, acting on column vectors of X*
  std::vector<size_t> word;  // reduced word in simple reflections (positions in rd.simple())
};

/// Weyl group enumerated breadth first by right multiplication with simple
/// reflections, so each stored word is reduced. Element 0 is the identity.
class WeylGroup {
 public:
  static WeylGroup enumerate(const RootDatum& rd, size_t limit = kDefaultWeylLimit);

  size_t order() const noexcept { return elements_.size(); }
  size_t rank() const noexcept { return rank_; }
  const WeylElement& element(size_t i) const { return elements_.at(i); }
  const std::vector<WeylElement>& elements() const noexcept { return elements_; }

  /// Index of the element with the given root permutation.
  size_t index_of(const std::vector<size_t>& perm) const;
  size_t multiply(size_t a, size_t b) const;  // a * b
  size_t inverse(size_t a) const;

  Vec act(size_t w, const Vec& x) const;                         // on X*
  Vec act_dual(size_t w, const Vec& lambda) const;               // on X_*
  TorsionPoint act(size_t w, const TorsionPoint& t) const;       // on X* (x) Q/Z
  TorusElement act(size_t w, const TorusElement& s) const;       // on X* (x) C^x

 private:
  std::vector<size_t> key(const std::vector<size_t>& perm) const;

  size_t rank_ = 0;
  std::vector<size_t> simple_;
  std::vector<WeylElement> elements_;
  std::map<std::vector<size_t>, size_t> lookup_;
};

/// Indices of w that fix each given torsion point.
std::vector<size_t> pointwise_stabilizer(const WeylGroup& W, const std::vector<TorsionPoint>& points);
/// Indices of w (from `among`) with w(subset) = subset as sets of root indices.
std::vector<size_t> preserving(const WeylGroup& W, const std::vector<size_t>& among, const std::vector<size_t>& subset);
/// Elements of W that lie in the reflection subgroup generated by `roots`.
std::vector<size_t> reflection_subgroup(const WeylGroup& W, const RootDatum& rd, const std::vector<size_t>& roots);

bool is_abelian(const WeylGroup& W, const std::vector<size_t>& subgroup);

}  // namespace hii
