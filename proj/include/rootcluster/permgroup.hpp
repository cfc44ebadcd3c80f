#pragma once

// Explicit finite permutation groups.
//
// A group is stored as the full sorted list of its elements; every operation
// here is an exact set computation over that list. Composition is written
// right-to-left: compose(p, q) applies q first, then p.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rootcluster/budgets.hpp"

namespace rootcluster {

/// Root label, 0-based.
using Label = std::uint16_t;

/// Largest supported number of roots.
inline constexpr std::size_t kMaxDegree = 65535;

/// A set of root labels kept sorted ascending without duplicates.
using RootSet = std::vector<Label>;

/// Sorts and deduplicates.
RootSet make_root_set(std::vector<Label> labels);

class Perm {
 public:
  Perm() = default;

  /// Throws DomainError unless `images` is a permutation of 0..n-1.
  explicit Perm(std::vector<Label> images);

  static Perm identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Label operator()(Label i) const { return images_[i]; }
  std::span<const Label> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool fixes(Label i) const { return images_[i] == i; }
  Perm inverse() const;

  /// Comma-separated images, e.g. "1,2,0".
  std::string to_string() const;

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  struct Trusted {};
  Perm(std::vector<Label> images, Trusted) : images_(std::move(images)) {}

  friend Perm compose(const Perm& p, const Perm& q);

  std::vector<Label> images_;
};

/// i -> p(q(i)). Throws DomainError on degree mismatch.
Perm compose(const Perm& p, const Perm& q);

namespace detail {
struct SubgroupAccess;
}

// An explicit subgroup of Sym(degree). Elements are sorted lexicographically by
// image sequence, so the identity always comes first and two subgroups are equal
// exactly when their element lists are. Copies share the element storage.
class Subgroup {
 public:
  /// The trivial group on `degree` points.
  static Subgroup trivial(std::size_t degree);

  /// Validates that `elements` is a subgroup: nonempty, one degree, contains the
  /// identity, closed under composition and inversion. Quadratic in the order.
  static Subgroup from_elements(std::vector<Perm> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_->size(); }
  std::span<const Perm> elements() const noexcept { return *elements_; }
  const Perm& operator[](std::size_t i) const { return (*elements_)[i]; }

  bool is_trivial() const noexcept { return order() == 1; }
  bool contains(const Perm& p) const;
  /// Position of `p` in the canonical element order, if present.
  std::optional<std::size_t> position(const Perm& p) const;
  bool is_subgroup_of(const Subgroup& other) const;

  /// Smallest non-identity element in canonical order; empty for the trivial group.
  std::optional<Perm> least_nontrivial() const;

  std::size_t hash() const noexcept { return hash_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b);

 private:
  friend struct detail::SubgroupAccess;
  Subgroup(std::size_t degree, std::vector<Perm> sorted_elements);

  std::size_t degree_ = 0;
  std::shared_ptr<const std::vector<Perm>> elements_;
  std::size_t hash_ = 0;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& g) const noexcept { return g.hash(); }
};

namespace detail {
// Wraps element lists that are subgroups by construction (filters of a group by
// a stabilizer condition, intersections, formula-built models). Sorting is done
// here; closure is not rechecked.
struct SubgroupAccess {
  static Subgroup unchecked(std::size_t degree, std::vector<Perm> elements);
};
}  // namespace detail

/// Smallest subgroup containing `generators`, by breadth-first closure.
/// Throws ResourceError once the element count passes `budgets.closure_elements`
/// or the stored image count passes `budgets.storage_entries`.
Subgroup close(std::span<const Perm> generators, const Budgets& budgets = {});

/// Elements of g fixing root i.
Subgroup stabilizer(const Subgroup& g, Label i);

/// Elements of g fixing every root in `roots`; g itself for an empty set.
Subgroup pointwise_stabilizer(const Subgroup& g, std::span<const Label> roots);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// Roots fixed by every element of h, ascending.
RootSet fixed_points(const Subgroup& h);

/// [g : h]. Throws DomainError unless h is contained in g.
std::uint64_t index(const Subgroup& g, const Subgroup& h);

RootSet orbit(const Subgroup& g, Label i);
bool is_transitive(const Subgroup& g);
bool is_faithful(const Subgroup& g);

}  // namespace rootcluster
