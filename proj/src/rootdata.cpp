#include "hiicheck/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <set>

#include "hiicheck/errors.hpp"

namespace hii {

namespace {

Vec negated(const Vec& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

Vec added(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

// Roots and coroots in simple coordinates, generated by simple reflections.
struct SimpleCoordinateSystem {
  std::vector<Vec> roots;    // coefficients in simple roots
  std::vector<Vec> coroots;  // coefficients in simple coroots
};

SimpleCoordinateSystem generate_from_cartan(const std::vector<Vec>& n) {
  const size_t r = n.size();
  SimpleCoordinateSystem sys;
  std::map<Vec, size_t> seen;
  std::deque<size_t> queue;
  for (size_t i = 0; i < r; ++i) {
    Vec e(r, 0);
    e[i] = 1;
    seen.emplace(e, sys.roots.size());
    sys.roots.push_back(e);
    sys.coroots.push_back(e);
    queue.push_back(i);
  }
  while (!queue.empty()) {
    size_t idx = queue.front();
    queue.pop_front();
    for (size_t i = 0; i < r; ++i) {
      Vec beta = sys.roots[idx];
      Vec gamma = sys.coroots[idx];
      long root_pair = 0;    // <beta, alpha_i^vee>
      long coroot_pair = 0;  // <alpha_i, gamma>
      for (size_t k = 0; k < r; ++k) {
        root_pair += beta[k] * n[k][i];
        coroot_pair += gamma[k] * n[i][k];
      }
      beta[i] -= root_pair;
      gamma[i] -= coroot_pair;
      if (seen.count(beta)) continue;
      seen.emplace(beta, sys.roots.size());
      sys.roots.push_back(beta);
      sys.coroots.push_back(gamma);
      queue.push_back(sys.roots.size() - 1);
    }
  }
  return sys;
}

struct ParsedFactor {
  enum class Kind { Cartan, GL, Torus } kind = Kind::Cartan;
  char letter = 'A';
  int rank = 0;
};

ParsedFactor parse_factor(std::string_view text) {
  std::string t(text);
  auto bad = [&]() { return UnknownType("unknown root datum type '" + t + "'"); };
  auto parse_rank = [&](std::string_view digits) {
    if (digits.empty() || digits.size() > 3) throw bad();
    int v = 0;
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad();
      v = v * 10 + (ch - '0');
    }
    return v;
  };
  ParsedFactor f;
  if (t.rfind("GL", 0) == 0) {
    f.kind = ParsedFactor::Kind::GL;
    f.rank = parse_rank(std::string_view(t).substr(2));
    if (f.rank < 1) throw bad();
    return f;
  }
  if (t.empty()) throw bad();
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
  int rank = parse_rank(std::string_view(t).substr(1));
  if (letter == 'T') {
    f.kind = ParsedFactor::Kind::Torus;
    f.rank = rank;
    if (rank < 1) throw bad();
    return f;
  }
  bool ok = false;
  switch (letter) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok) throw bad();
  f.letter = letter;
  f.rank = rank;
  return f;
}

std::vector<std::string> split_product(std::string_view type) {
  std::vector<std::string> parts;
  std::string cur;
  std::string s(type);
  for (size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == ' ') continue;
    if (ch == 'x' || ch == '*') {
      parts.push_back(cur);
      cur.clear();
      continue;
    }
    // U+00D7 multiplication sign
    if (static_cast<unsigned char>(ch) == 0xC3 && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0x97) {
      parts.push_back(cur);
      cur.clear();
      ++i;
      continue;
    }
    cur.push_back(ch);
  }
  parts.push_back(cur);
  return parts;
}

RootDatum torus_datum(size_t rank) { return RootDatum::from_lists(rank, {}, {}); }

RootDatum gl_datum(int n) {
  std::vector<Vec> roots;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Vec v(static_cast<size_t>(n), 0);
      v[static_cast<size_t>(i)] = 1;
      v[static_cast<size_t>(j)] = -1;
      roots.push_back(v);
    }
  }
  return RootDatum::from_lists(static_cast<size_t>(n), roots, roots);
}

}  // namespace

std::vector<Vec> cartan_matrix(char letter, int rank) {
  const size_t r = static_cast<size_t>(rank);
  std::vector<Vec> n(r, Vec(r, 0));
  for (size_t i = 0; i < r; ++i) n[i][i] = 2;
  auto bond = [&](size_t i, size_t j) {
    n[i][j] = -1;
    n[j][i] = -1;
  };
  switch (letter) {
    case 'A':
      for (size_t i = 0; i + 1 < r; ++i) bond(i, i + 1);
      break;
    case 'B':
      for (size_t i = 0; i + 1 < r; ++i) bond(i, i + 1);
      n[r - 2][r - 1] = -2;
      break;
    case 'C':
      for (size_t i = 0; i + 1 < r; ++i) bond(i, i + 1);
      n[r - 1][r - 2] = -2;
      break;
    case 'D':
      for (size_t i = 0; i + 2 < r; ++i) bond(i, i + 1);
      bond(r - 3, r - 1);
      break;
    case 'E':
      bond(0, 2);
      bond(1, 3);
      for (size_t i = 2; i + 1 < r; ++i) bond(i, i + 1);
      break;
    case 'F':
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      n[1][2] = -2;
      break;
    case 'G':
      bond(0, 1);
      n[1][0] = -3;
      break;
    default:
      throw UnknownType(std::string("unknown Cartan type letter ") + letter);
  }
  return n;
}

RootDatum RootDatum::from_type(std::string_view type, const LatticeChoice& lattice) {
  std::vector<ParsedFactor> factors;
  for (const auto& part : split_product(type)) factors.push_back(parse_factor(part));

  const bool basis = lattice.kind == LatticeChoice::Kind::Basis;
  if (basis) {
    for (const auto& f : factors) {
      if (f.kind != ParsedFactor::Kind::Cartan) {
        throw InvalidDatum("an explicit lattice basis is supported only for semisimple named types");
      }
    }
  }

  // Semisimple factors are assembled in simple coordinates first so an
  // explicit basis can refer to the concatenated fundamental weights.
  std::optional<RootDatum> result;
  auto append = [&](const RootDatum& rd) { result = result ? direct_sum(*result, rd) : rd; };

  for (const auto& f : factors) {
    if (f.kind == ParsedFactor::Kind::Torus) {
      append(torus_datum(static_cast<size_t>(f.rank)));
      continue;
    }
    if (f.kind == ParsedFactor::Kind::GL) {
      append(gl_datum(f.rank));
      continue;
    }
    auto n = cartan_matrix(f.letter, f.rank);
    auto sys = generate_from_cartan(n);
    const size_t r = n.size();
    std::vector<Vec> roots, coroots;
    std::vector<bool> positive;
    for (size_t idx = 0; idx < sys.roots.size(); ++idx) {
      const Vec& beta = sys.roots[idx];
      const Vec& gamma = sys.coroots[idx];
      Vec x(r, 0), lambda(r, 0);
      if (lattice.kind == LatticeChoice::Kind::Adjoint) {
        x = beta;
        for (size_t i = 0; i < r; ++i) {
          for (size_t k = 0; k < r; ++k) lambda[i] += gamma[k] * n[i][k];
        }
      } else {
        for (size_t j = 0; j < r; ++j) {
          for (size_t i = 0; i < r; ++i) x[j] += beta[i] * n[i][j];
        }
        lambda = gamma;
      }
      roots.push_back(x);
      coroots.push_back(lambda);
      positive.push_back(std::all_of(beta.begin(), beta.end(), [](long c) { return c >= 0; }));
    }
    append(assemble(r, roots, coroots, positive));
  }
  if (!result) throw UnknownType("empty root datum type");

  if (basis) {
    const size_t n = result->rank();
    const auto& b = lattice.basis;
    if (b.size() != n) throw InvalidDatum("lattice basis must have " + std::to_string(n) + " rows");
    for (const auto& row : b) {
      if (row.size() != n) throw InvalidDatum("lattice basis rows must have length " + std::to_string(n));
    }
    if (IntMatrix::from_rows(b, n).determinant() == 0) throw InvalidDatum("lattice basis is singular");
    std::vector<Vec> roots, coroots;
    for (size_t i = 0; i < result->num_roots(); ++i) {
      auto x = solve_row_combination(b, result->root(i));
      if (!x) throw InvalidDatum("lattice does not contain the root lattice");
      Vec lambda(n, 0);
      for (size_t r = 0; r < n; ++r) lambda[r] = dot(b[r], result->coroot(i));
      roots.push_back(*x);
      coroots.push_back(lambda);
    }
    result = assemble(n, roots, coroots, result->positivity());
  }
  return *result;
}

RootDatum RootDatum::from_lists(size_t rank, std::vector<Vec> roots, std::vector<Vec> coroots) {
  if (roots.size() != coroots.size()) throw InvalidDatum("roots and coroots must be index matched");
  for (size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].size() != rank || coroots[i].size() != rank) {
      throw InvalidDatum("root vectors must have length " + std::to_string(rank));
    }
    if (is_zero_vec(roots[i])) throw InvalidDatum("zero root");
    if (dot(roots[i], coroots[i]) != 2) {
      throw InvalidDatum("pairing of root " + std::to_string(i) + " with its coroot is " +
                         std::to_string(dot(roots[i], coroots[i])) + ", expected 2");
    }
  }
  std::map<Vec, size_t> lookup;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (!lookup.emplace(roots[i], i).second) throw InvalidDatum("repeated root");
  }
  for (size_t i = 0; i < roots.size(); ++i) {
    auto neg = lookup.find(negated(roots[i]));
    if (neg == lookup.end()) throw InvalidDatum("root system is not closed under negation");
    if (coroots[neg->second] != negated(coroots[i])) throw InvalidDatum("coroot of -alpha must be -alpha^vee");
    Vec twice = roots[i];
    for (auto& c : twice) c *= 2;
    if (lookup.count(twice)) throw InvalidDatum("root system is not reduced");
  }
  // reflections permute roots and coroots compatibly
  for (size_t a = 0; a < roots.size(); ++a) {
    for (size_t b = 0; b < roots.size(); ++b) {
      long k = dot(roots[b], coroots[a]);
      Vec image = roots[b];
      for (size_t i = 0; i < rank; ++i) image[i] -= k * roots[a][i];
      auto it = lookup.find(image);
      if (it == lookup.end()) throw InvalidDatum("reflection does not preserve the roots");
      long kc = dot(roots[a], coroots[b]);
      Vec coimage = coroots[b];
      for (size_t i = 0; i < rank; ++i) coimage[i] -= kc * coroots[a][i];
      if (coroots[it->second] != coimage) throw InvalidDatum("reflection does not preserve the coroots");
    }
  }
  // generic functional: base-B digits with B exceeding twice every coordinate
  long bound = 1;
  for (const auto& r : roots) {
    for (long c : r) bound = std::max(bound, 2 * std::abs(c) + 1);
  }
  std::vector<bool> positive(roots.size());
  for (size_t i = 0; i < roots.size(); ++i) {
    Integer value = 0;
    Integer weight = 1;
    for (size_t k = 0; k < rank; ++k) {
      value += weight * roots[i][k];
      weight *= bound;
    }
    positive[i] = value > 0;
  }
  return assemble(rank, std::move(roots), std::move(coroots), std::move(positive));
}

RootDatum RootDatum::assemble(size_t rank, std::vector<Vec> roots, std::vector<Vec> coroots, std::vector<bool> positive) {
  RootDatum rd;
  rd.rank_ = rank;
  rd.roots_ = std::move(roots);
  rd.coroots_ = std::move(coroots);
  rd.positive_ = std::move(positive);
  for (size_t i = 0; i < rd.roots_.size(); ++i) {
    rd.root_lookup_.emplace(rd.roots_[i], i);
    rd.coroot_lookup_.emplace(rd.coroots_[i], i);
  }
  rd.negation_.resize(rd.roots_.size());
  for (size_t i = 0; i < rd.roots_.size(); ++i) {
    auto it = rd.root_lookup_.find(negated(rd.roots_[i]));
    if (it == rd.root_lookup_.end()) throw InvalidDatum("root system is not closed under negation");
    rd.negation_[i] = it->second;
    if (rd.positive_[i] == rd.positive_[it->second]) throw InvalidDatum("positive system must contain exactly one of ±alpha");
  }
  // simple roots: positive roots that are not a sum of two positive roots
  std::set<size_t> decomposable;
  for (size_t a = 0; a < rd.roots_.size(); ++a) {
    if (!rd.positive_[a]) continue;
    for (size_t b = a + 1; b < rd.roots_.size(); ++b) {
      if (!rd.positive_[b]) continue;
      auto it = rd.root_lookup_.find(added(rd.roots_[a], rd.roots_[b]));
      if (it != rd.root_lookup_.end()) decomposable.insert(it->second);
    }
  }
  for (size_t i = 0; i < rd.roots_.size(); ++i) {
    if (rd.positive_[i] && !decomposable.count(i)) rd.simple_.push_back(i);
  }
  return rd;
}

std::vector<size_t> RootDatum::positive_roots() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < roots_.size(); ++i) {
    if (positive_[i]) out.push_back(i);
  }
  return out;
}

std::optional<size_t> RootDatum::find_root(const Vec& v) const {
  auto it = root_lookup_.find(v);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<size_t> RootDatum::find_coroot(const Vec& v) const {
  auto it = coroot_lookup_.find(v);
  if (it == coroot_lookup_.end()) return std::nullopt;
  return it->second;
}

long RootDatum::cartan(size_t i, size_t j) const { return dot(roots_[simple_[i]], coroots_[simple_[j]]); }

RootDatum RootDatum::dual() const {
  RootDatum rd = assemble(rank_, coroots_, roots_, positive_);
  return rd;
}

RootDatum RootDatum::subdatum(const std::vector<size_t>& subset, std::vector<size_t>* parent_index) const {
  std::vector<size_t> idx = subset;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<Vec> roots, coroots;
  std::vector<bool> positive;
  for (size_t i : idx) {
    roots.push_back(roots_.at(i));
    coroots.push_back(coroots_.at(i));
    positive.push_back(positive_.at(i));
  }
  if (parent_index) *parent_index = idx;
  return assemble(rank_, std::move(roots), std::move(coroots), std::move(positive));
}

std::vector<Component> RootDatum::components() const {
  const size_t r = simple_.size();
  std::vector<int> comp(r, -1);
  int count = 0;
  for (size_t s = 0; s < r; ++s) {
    if (comp[s] >= 0) continue;
    std::deque<size_t> q{s};
    comp[s] = count;
    while (!q.empty()) {
      size_t a = q.front();
      q.pop_front();
      for (size_t b = 0; b < r; ++b) {
        if (comp[b] < 0 && cartan(a, b) != 0) {
          comp[b] = count;
          q.push_back(b);
        }
      }
    }
    ++count;
  }
  std::vector<Component> out(static_cast<size_t>(count));
  for (size_t s = 0; s < r; ++s) out[static_cast<size_t>(comp[s])].simple.push_back(s);

  for (auto& c : out) {
    const auto& nodes = c.simple;
    const size_t k = nodes.size();
    c.rank = static_cast<int>(k);
    auto deg = [&](size_t a) {
      int d = 0;
      for (size_t b : nodes) {
        if (b != a && cartan(a, b) != 0) ++d;
      }
      return d;
    };
    bool triple = false;
    std::optional<std::pair<size_t, size_t>> double_bond;  // (long, short)
    for (size_t a : nodes) {
      for (size_t b : nodes) {
        if (a == b) continue;
        if (cartan(a, b) == -3) triple = true;
        if (cartan(a, b) == -2) double_bond = std::make_pair(a, b);
      }
    }
    if (k == 1) {
      c.letter = 'A';
    } else if (triple) {
      c.letter = 'G';
    } else if (double_bond) {
      auto [lng, sht] = *double_bond;
      if (k == 2) {
        c.letter = lng < sht ? 'B' : 'C';
      } else if (deg(lng) == 2 && deg(sht) == 2) {
        c.letter = 'F';
      } else {
        c.letter = deg(sht) == 1 ? 'B' : 'C';
      }
    } else {
      std::optional<size_t> branch;
      for (size_t a : nodes) {
        if (deg(a) == 3) branch = a;
      }
      if (!branch) {
        c.letter = 'A';
      } else {
        std::vector<int> arms;
        for (size_t b : nodes) {
          if (b == *branch || cartan(*branch, b) == 0) continue;
          int len = 1;
          size_t prev = *branch, cur = b;
          while (true) {
            std::optional<size_t> next;
            for (size_t x : nodes) {
              if (x != cur && x != prev && cartan(cur, x) != 0) next = x;
            }
            if (!next) break;
            prev = cur;
            cur = *next;
            ++len;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        c.letter = (arms[0] == 1 && arms[1] == 1) ? 'D' : 'E';
      }
    }
  }
  return out;
}

std::string RootDatum::type_label() const {
  std::string out;
  for (const auto& c : components()) {
    if (!out.empty()) out += "x";
    out += c.label();
  }
  size_t central = rank_ - simple_.size();
  if (central > 0) {
    if (!out.empty()) out += "x";
    out += "T" + std::to_string(central);
  }
  return out.empty() ? "T0" : out;
}

bool operator==(const RootDatum& a, const RootDatum& b) {
  return a.rank_ == b.rank_ && a.roots_ == b.roots_ && a.coroots_ == b.coroots_ && a.positive_ == b.positive_ &&
         a.simple_ == b.simple_;
}

RootDatum direct_sum(const RootDatum& a, const RootDatum& b) {
  const size_t n = a.rank() + b.rank();
  std::vector<Vec> roots, coroots;
  std::vector<bool> positive;
  for (size_t i = 0; i < a.num_roots(); ++i) {
    Vec x(n, 0), l(n, 0);
    std::copy(a.root(i).begin(), a.root(i).end(), x.begin());
    std::copy(a.coroot(i).begin(), a.coroot(i).end(), l.begin());
    roots.push_back(x);
    coroots.push_back(l);
    positive.push_back(a.is_positive(i));
  }
  for (size_t i = 0; i < b.num_roots(); ++i) {
    Vec x(n, 0), l(n, 0);
    std::copy(b.root(i).begin(), b.root(i).end(), x.begin() + static_cast<long>(a.rank()));
    std::copy(b.coroot(i).begin(), b.coroot(i).end(), l.begin() + static_cast<long>(a.rank()));
    roots.push_back(x);
    coroots.push_back(l);
    positive.push_back(b.is_positive(i));
  }
  return RootDatum::assemble(n, std::move(roots), std::move(coroots), std::move(positive));
}

bool is_closed_subsystem(const RootDatum& rd, const std::vector<size_t>& subset) {
  std::set<size_t> s(subset.begin(), subset.end());
  for (size_t a : s) {
    if (!s.count(rd.negative_of(a))) return false;
  }
  for (size_t a : s) {
    for (size_t b : s) {
      auto sum = rd.find_root(added(rd.root(a), rd.root(b)));
      if (sum && !s.count(*sum)) return false;
    }
  }
  return true;
}

bool is_coroot_closed(const RootDatum& rd, const std::vector<size_t>& subset) {
  std::set<size_t> s(subset.begin(), subset.end());
  for (size_t a : s) {
    if (!s.count(rd.negative_of(a))) return false;
  }
  for (size_t a : s) {
    for (size_t b : s) {
      auto sum = rd.find_coroot(added(rd.coroot(a), rd.coroot(b)));
      if (sum && !s.count(*sum)) return false;
    }
  }
  return true;
}

bool center_is_connected(const RootDatum& rd) {
  if (rd.num_roots() == 0) return true;
  SmithForm snf = smith_normal_form(IntMatrix::from_rows(rd.roots(), rd.rank()));
  return snf.torsion().empty();
}

ConditionReport condition_check(const RootDatum& rd, long p) {
  ConditionReport report;
  std::set<long> excluded;
  auto primes_upto = [](long bound) {
    std::vector<long> out;
    for (long k = 2; k <= bound; ++k) {
      bool prime = true;
      for (long d = 2; d * d <= k; ++d) {
        if (k % d == 0) prime = false;
      }
      if (prime) out.push_back(k);
    }
    return out;
  };
  for (const auto& c : rd.components()) {
    std::vector<long> bad;
    std::string rule;
    switch (c.letter) {
      case 'A':
        bad = primes_upto(c.rank + 1);
        rule = "p > " + std::to_string(c.rank + 1);
        break;
      case 'B':
      case 'C':
      case 'D':
        bad = {2};
        rule = "p != 2";
        break;
      case 'F':
        bad = {2, 3};
        rule = "p != 2,3";
        break;
      case 'G':
        bad = {2, 3, 5};
        rule = "p != 2,3,5";
        break;
      case 'E':
        bad = c.rank == 6 ? std::vector<long>{2, 3, 5} : std::vector<long>{2, 3, 5, 7};
        rule = c.rank == 6 ? "p != 2,3,5" : "p != 2,3,5,7";
        break;
      default:
        break;
    }
    bool ok = std::find(bad.begin(), bad.end(), p) == bad.end();
    report.satisfied = report.satisfied && ok;
    excluded.insert(bad.begin(), bad.end());
    report.lines.push_back(c.label() + ": " + rule + (ok ? " (ok)" : " (violated)"));
  }
  report.excluded.assign(excluded.begin(), excluded.end());
  return report;
}

}  // namespace hii
