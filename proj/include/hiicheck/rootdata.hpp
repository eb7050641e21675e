#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hiicheck/lattice.hpp"

namespace hii {

struct LatticeChoice {
  enum class Kind { SimplyConnected, Adjoint, Basis };
  Kind kind = Kind::SimplyConnected;
  /// Rows in fundamental-weight coordinates; used only for Kind::Basis.
  std::vector<Vec> basis;

  static LatticeChoice sc() { return {Kind::SimplyConnected, {}}; }
  static LatticeChoice ad() { return {Kind::Adjoint, {}}; }
  static LatticeChoice with_basis(std::vector<Vec> rows) { return {Kind::Basis, std::move(rows)}; }
};

/// Irreducible piece of the root system: letter + rank, and its simple roots.
struct Component {
  char letter = 'A';
  int rank = 0;
  std::vector<size_t> simple;  // indices into RootDatum::simple()
  std::string label() const { return std::string(1, letter) + std::to_string(rank); }
};

/// Based root datum (X*, roots, X_*, coroots, simple system) with X* = X_* = Z^n
/// paired by the dot product. Roots and coroots are index matched.
class RootDatum {
 public:
  /// Named type such as "B2", "A1xA1", "GL3", "T1", "A2xT1" with a lattice.
  static RootDatum from_type(std::string_view type, const LatticeChoice& lattice);
  /// Explicit lists; the positive system comes from a generic linear functional.
  static RootDatum from_lists(size_t rank, std::vector<Vec> roots, std::vector<Vec> coroots);

  size_t rank() const noexcept { return rank_; }
  size_t num_roots() const noexcept { return roots_.size(); }
  size_t num_positive() const noexcept { return roots_.size() / 2; }
  size_t semisimple_rank() const noexcept { return simple_.size(); }
  size_t dimension() const noexcept { return rank_ + roots_.size(); }

  const Vec& root(size_t i) const { return roots_.at(i); }
  const Vec& coroot(size_t i) const { return coroots_.at(i); }
  const std::vector<Vec>& roots() const noexcept { return roots_; }
  const std::vector<Vec>& coroots() const noexcept { return coroots_; }
  const std::vector<size_t>& simple() const noexcept { return simple_; }
  bool is_positive(size_t i) const { return positive_.at(i); }
  const std::vector<bool>& positivity() const noexcept { return positive_; }
  size_t negative_of(size_t i) const { return negation_.at(i); }
  std::vector<size_t> positive_roots() const;

  std::optional<size_t> find_root(const Vec& v) const;
  std::optional<size_t> find_coroot(const Vec& v) const;

  /// <alpha_i, alpha_j^vee> for simple roots i, j.
  long cartan(size_t i, size_t j) const;

  RootDatum dual() const;
  /// Root datum on the same lattices with the given roots (positive system
  /// inherited). The index map is written to `parent_index` when provided.
  RootDatum subdatum(const std::vector<size_t>& subset, std::vector<size_t>* parent_index = nullptr) const;

  std::vector<Component> components() const;
  /// e.g. "B2", "A1xA1", "A1xT1", "T2"
  std::string type_label() const;

  /// Exact equality of all stored fields.
  friend bool operator==(const RootDatum& a, const RootDatum& b);
  friend RootDatum direct_sum(const RootDatum& a, const RootDatum& b);

 private:
  static RootDatum assemble(size_t rank, std::vector<Vec> roots, std::vector<Vec> coroots, std::vector<bool> positive);

  size_t rank_ = 0;
  std::vector<Vec> roots_;
  std::vector<Vec> coroots_;
  std::vector<bool> positive_;
  std::vector<size_t> negation_;
  std::vector<size_t> simple_;
  std::map<Vec, size_t> root_lookup_;
  std::map<Vec, size_t> coroot_lookup_;
};

/// Bourbaki Cartan matrix n_ij = <alpha_i, alpha_j^vee>.
std::vector<Vec> cartan_matrix(char letter, int rank);

RootDatum direct_sum(const RootDatum& a, const RootDatum& b);

bool is_closed_subsystem(const RootDatum& rd, const std::vector<size_t>& subset);
/// Closedness of the matched coroots inside the coroot system.
bool is_coroot_closed(const RootDatum& rd, const std::vector<size_t>& subset);

/// X* / Z Phi torsion free.
bool center_is_connected(const RootDatum& rd);

struct ConditionReport {
  bool satisfied = true;
  std::vector<std::string> lines;  // one per irreducible factor
  std::vector<long> excluded;      // primes ruled out, sorted
};

/// Residue characteristic restrictions per irreducible factor.
ConditionReport condition_check(const RootDatum& rd, long p);

}  // namespace hii
