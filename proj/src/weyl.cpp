#include "hiicheck/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hiicheck/errors.hpp"

namespace hii {

std::vector<size_t> WeylGroup::key(const std::vector<size_t>& perm) const {
  std::vector<size_t> k(simple_.size());
  for (size_t i = 0; i < simple_.size(); ++i) k[i] = perm[simple_[i]];
  return k;
}

WeylGroup WeylGroup::enumerate(const RootDatum& rd, size_t limit) {
  WeylGroup W;
  const size_t n = rd.rank();
  const size_t nroots = rd.num_roots();
  W.rank_ = n;
  W.simple_ = rd.simple();

  std::vector<std::vector<size_t>> refl(W.simple_.size(), std::vector<size_t>(nroots));
  std::vector<Vec> refl_matrix(W.simple_.size(), Vec(n * n, 0));
  for (size_t s = 0; s < W.simple_.size(); ++s) {
    const Vec& a = rd.root(W.simple_[s]);
    const Vec& av = rd.coroot(W.simple_[s]);
    for (size_t b = 0; b < nroots; ++b) {
      long k = dot(rd.root(b), av);
      Vec img = rd.root(b);
      for (size_t i = 0; i < n; ++i) img[i] -= k * a[i];
      auto idx = rd.find_root(img);
      if (!idx) throw InvalidDatum("simple reflection does not preserve the roots");
      refl[s][b] = *idx;
    }
    Vec& m = refl_matrix[s];
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) m[i * n + j] = (i == j ? 1 : 0) - a[i] * av[j];
    }
  }

  WeylElement id;
  id.perm.resize(nroots);
  for (size_t i = 0; i < nroots; ++i) id.perm[i] = i;
  id.matrix.assign(n * n, 0);
  for (size_t i = 0; i < n; ++i) id.matrix[i * n + i] = 1;
  W.lookup_.emplace(W.key(id.perm), 0);
  W.elements_.push_back(std::move(id));

  for (size_t cur = 0; cur < W.elements_.size(); ++cur) {
    for (size_t s = 0; s < W.simple_.size(); ++s) {
      const WeylElement& w = W.elements_[cur];
      std::vector<size_t> perm(nroots);
      for (size_t b = 0; b < nroots; ++b) perm[b] = w.perm[refl[s][b]];
      auto k = W.key(perm);
      if (W.lookup_.count(k)) continue;
      if (W.elements_.size() >= limit) {
        throw SizeLimitExceeded("Weyl group exceeds " + std::to_string(limit) + " elements");
      }
      WeylElement next;
      next.perm = std::move(perm);
      next.matrix.assign(n * n, 0);
      for (size_t i = 0; i < n; ++i) {
        for (size_t k2 = 0; k2 < n; ++k2) {
          long a = w.matrix[i * n + k2];
          if (a == 0) continue;
          for (size_t j = 0; j < n; ++j) next.matrix[i * n + j] += a * refl_matrix[s][k2 * n + j];
        }
      }
      next.word = w.word;
      next.word.push_back(s);
      W.lookup_.emplace(std::move(k), W.elements_.size());
      W.elements_.push_back(std::move(next));
    }
  }
  return W;
}

size_t WeylGroup::index_of(const std::vector<size_t>& perm) const {
  auto it = lookup_.find(key(perm));
  if (it == lookup_.end()) throw InvalidInput("root permutation is not a Weyl group element");
  return it->second;
}

size_t WeylGroup::multiply(size_t a, size_t b) const {
  const auto& pa = elements_.at(a).perm;
  const auto& pb = elements_.at(b).perm;
  std::vector<size_t> perm(pa.size());
  for (size_t i = 0; i < pa.size(); ++i) perm[i] = pa[pb[i]];
  return index_of(perm);
}

size_t WeylGroup::inverse(size_t a) const {
  const auto& pa = elements_.at(a).perm;
  std::vector<size_t> perm(pa.size());
  for (size_t i = 0; i < pa.size(); ++i) perm[pa[i]] = i;
  return index_of(perm);
}

Vec WeylGroup::act(size_t w, const Vec& x) const {
  const Vec& m = elements_.at(w).matrix;
  Vec out(rank_, 0);
  for (size_t i = 0; i < rank_; ++i) {
    for (size_t j = 0; j < rank_; ++j) out[i] += m[i * rank_ + j] * x[j];
  }
  return out;
}

Vec WeylGroup::act_dual(size_t w, const Vec& lambda) const {
  // contragredient: the inverse transpose
  const Vec& m = elements_.at(inverse(w)).matrix;
  Vec out(rank_, 0);
  for (size_t i = 0; i < rank_; ++i) {
    for (size_t j = 0; j < rank_; ++j) out[i] += m[j * rank_ + i] * lambda[j];
  }
  return out;
}

TorsionPoint WeylGroup::act(size_t w, const TorsionPoint& t) const {
  const Vec& m = elements_.at(w).matrix;
  std::vector<Rational> out(rank_, Rational(0));
  for (size_t i = 0; i < rank_; ++i) {
    for (size_t j = 0; j < rank_; ++j) out[i] += Rational(m[i * rank_ + j]) * t.coords[j];
  }
  return TorsionPoint(std::move(out));
}

TorusElement WeylGroup::act(size_t w, const TorusElement& s) const {
  const Vec& m = elements_.at(w).matrix;
  std::vector<Monomial> out(rank_);
  for (size_t i = 0; i < rank_; ++i) {
    for (size_t j = 0; j < rank_; ++j) out[i] = out[i] * s.coords[j].pow(m[i * rank_ + j]);
  }
  return TorusElement(std::move(out));
}

std::vector<size_t> pointwise_stabilizer(const WeylGroup& W, const std::vector<TorsionPoint>& points) {
  std::vector<size_t> out;
  for (size_t w = 0; w < W.order(); ++w) {
    bool fixes = std::all_of(points.begin(), points.end(), [&](const TorsionPoint& t) { return W.act(w, t) == t; });
    if (fixes) out.push_back(w);
  }
  return out;
}

std::vector<size_t> preserving(const WeylGroup& W, const std::vector<size_t>& among, const std::vector<size_t>& subset) {
  std::set<size_t> target(subset.begin(), subset.end());
  std::vector<size_t> out;
  for (size_t w : among) {
    const auto& perm = W.element(w).perm;
    bool ok = std::all_of(subset.begin(), subset.end(), [&](size_t a) { return target.count(perm[a]) > 0; });
    if (ok) out.push_back(w);
  }
  return out;
}

std::vector<size_t> reflection_subgroup(const WeylGroup& W, const RootDatum& rd, const std::vector<size_t>& roots) {
  // generators: reflections s_alpha as root permutations
  std::vector<size_t> gens;
  for (size_t a : roots) {
    std::vector<size_t> perm(rd.num_roots());
    for (size_t b = 0; b < rd.num_roots(); ++b) {
      long k = dot(rd.root(b), rd.coroot(a));
      Vec img = rd.root(b);
      for (size_t i = 0; i < rd.rank(); ++i) img[i] -= k * rd.root(a)[i];
      perm[b] = *rd.find_root(img);
    }
    gens.push_back(W.index_of(perm));
  }
  std::set<size_t> seen{0};
  std::deque<size_t> queue{0};
  while (!queue.empty()) {
    size_t cur = queue.front();
    queue.pop_front();
    for (size_t g : gens) {
      size_t next = W.multiply(cur, g);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_abelian(const WeylGroup& W, const std::vector<size_t>& subgroup) {
  for (size_t a : subgroup) {
    for (size_t b : subgroup) {
      if (W.multiply(a, b) != W.multiply(b, a)) return false;
    }
  }
  return true;
}

}  // namespace hii
