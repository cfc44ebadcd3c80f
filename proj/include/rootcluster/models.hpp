#pragma once

// Galois models: a transitive, faithful permutation group on the roots of an
// irreducible polynomial. Every field between K and the splitting field is
// represented by the subgroup fixing it.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootcluster/budgets.hpp"
#include "rootcluster/permgroup.hpp"

namespace rootcluster {

/// Element (alpha, u) of Z/n x| (Z/n)^x, acting on labels by j -> alpha + u*j.
struct AffineElement {
  std::uint32_t alpha = 0;
  std::uint32_t u = 1;

  auto operator<=>(const AffineElement&) const = default;
};

enum class FamilyKind { affine, symmetric, custom };

struct ModelFamily {
  FamilyKind kind = FamilyKind::custom;
  std::uint64_t parameter = 0;  // n for affine, m for symmetric, degree for custom
  std::string name;             // custom models only

  /// "affine(9)", "symmetric(4)", "custom(cyclic3)".
  std::string describe() const;
};

class GaloisModel {
 public:
  GaloisModel(Subgroup group, ModelFamily family, std::string root_meaning);

  std::size_t n() const noexcept { return group_.degree(); }
  const Subgroup& group() const noexcept { return group_; }
  const ModelFamily& family() const noexcept { return family_; }
  const std::string& root_meaning() const noexcept { return root_meaning_; }

  bool is_affine() const noexcept { return family_.kind == FamilyKind::affine; }

  /// (alpha, u) label of a group element; empty for non-affine models or
  /// permutations outside the group.
  std::optional<AffineElement> affine_label(const Perm& p) const;
  /// Permutation of an affine label. Throws DomainError for non-affine models or
  /// invalid residues.
  Perm affine_perm(AffineElement x) const;

 private:
  Subgroup group_;
  ModelFamily family_;
  std::string root_meaning_;
};

/// Galois group of x^n - c over Q for odd n >= 3 with x^n - c irreducible:
/// all n*phi(n) maps j -> alpha + u*j (mod n), label j standing for a*zeta^j.
/// The radicand c does not affect the group and is not a parameter.
GaloisModel affine_model(std::uint64_t n, const Budgets& budgets = {});

/// Group law (alpha, u)(beta, v) = (alpha + u*beta, u*v) mod n.
AffineElement affine_compose(AffineElement x, AffineElement y, std::uint64_t n);

/// The stabilizer of root j in the affine model, from its closed form
/// {(j - v*j, v) : v a unit mod n}.
Subgroup affine_H_j(std::uint64_t n, Label j);

/// The full symmetric group on m points; m! must fit in the closure budget.
GaloisModel symmetric_model(std::uint64_t m, const Budgets& budgets = {});

/// Closes `generators` and rejects intransitive or unfaithful results.
GaloisModel custom_model(std::size_t n, std::span<const Perm> generators, std::string name,
                         const Budgets& budgets = {});

/// Regular action of the cyclic group of order n (a Galois extension of degree n).
GaloisModel cyclic_model(std::size_t n, const Budgets& budgets = {});

// How to obtain a model from user input.
struct ModelSpec {
  enum class Kind { affine, symmetric, cyclic, generators };
  Kind kind = Kind::affine;
  std::uint64_t parameter = 0;
  std::string generators_path;
  std::string name;
};

GaloisModel build_model(const ModelSpec& spec, const Budgets& budgets = {});
std::string describe(const ModelSpec& spec);

}  // namespace rootcluster
