#include "rootcluster/models.hpp"

#include <algorithm>
#include <numeric>

#include "rootcluster/errors.hpp"
#include "rootcluster/generators_io.hpp"
#include "rootcluster/numtheory.hpp"

namespace rootcluster {

namespace {

std::vector<std::uint32_t> units_mod(std::uint64_t n) {
  std::vector<std::uint32_t> units;
  for (std::uint64_t u = 1; u < n; ++u) {
    if (std::gcd(u, n) == 1) units.push_back(static_cast<std::uint32_t>(u));
  }
  return units;
}

void require_affine_modulus(std::uint64_t n) {
  if (n < 3 || n % 2 == 0) {
    throw DomainError("affine model needs odd n >= 3 (got " + std::to_string(n) +
                      "); the semidirect-product Galois group of x^n - c is only known for odd n");
  }
  if (n > kMaxDegree) throw DomainError("affine model: n exceeds 65535 roots");
}

Perm affine_action(AffineElement x, std::uint64_t n) {
  std::vector<Label> images(n);
  for (std::uint64_t j = 0; j < n; ++j) images[j] = static_cast<Label>((x.alpha + x.u * j) % n);
  return Perm(std::move(images));
}

void require_size(std::uint64_t elements, std::uint64_t degree, const Budgets& budgets,
                  const std::string& what) {
  if (elements > budgets.closure_elements) {
    throw ResourceError(what + " has " + std::to_string(elements) +
                            " elements, above the closure budget of " +
                            std::to_string(budgets.closure_elements),
                        0);
  }
  if (elements * degree > budgets.storage_entries) {
    throw ResourceError(what + " needs " + std::to_string(elements * degree) +
                            " stored image entries, above the storage budget of " +
                            std::to_string(budgets.storage_entries),
                        0);
  }
}

}  // namespace

std::string ModelFamily::describe() const {
  switch (kind) {
    case FamilyKind::affine:
      return "affine(" + std::to_string(parameter) + ")";
    case FamilyKind::symmetric:
      return "symmetric(" + std::to_string(parameter) + ")";
    case FamilyKind::custom:
      break;
  }
  return "custom(" + name + ")";
}

GaloisModel::GaloisModel(Subgroup group, ModelFamily family, std::string root_meaning)
    : group_(std::move(group)), family_(std::move(family)), root_meaning_(std::move(root_meaning)) {}

std::optional<AffineElement> GaloisModel::affine_label(const Perm& p) const {
  if (!is_affine() || p.degree() != n() || !group_.contains(p)) return std::nullopt;
  // alpha is the image of 0, u the difference of the images of 1 and 0.
  const auto modulus = static_cast<std::uint32_t>(n());
  const std::uint32_t alpha = p(0);
  const std::uint32_t u = (p(1) + modulus - alpha) % modulus;
  return AffineElement{alpha, u};
}

Perm GaloisModel::affine_perm(AffineElement x) const {
  if (!is_affine()) throw DomainError("affine_perm: model " + family_.describe() + " is not affine");
  if (x.alpha >= n() || x.u >= n() || std::gcd<std::uint64_t>(x.u, n()) != 1) {
    throw DomainError("affine_perm: (" + std::to_string(x.alpha) + "," + std::to_string(x.u) +
                      ") is not an element of Z/" + std::to_string(n()) + " x| units");
  }
  return affine_action(x, n());
}

GaloisModel affine_model(std::uint64_t n, const Budgets& budgets) {
  require_affine_modulus(n);
  const auto units = units_mod(n);
  require_size(n * units.size(), n, budgets, "affine model for n=" + std::to_string(n));

  std::vector<Perm> elements;
  elements.reserve(n * units.size());
  for (std::uint32_t alpha = 0; alpha < n; ++alpha) {
    for (std::uint32_t u : units) elements.push_back(affine_action({alpha, u}, n));
  }
  ModelFamily family{FamilyKind::affine, n, {}};
  return GaloisModel(detail::SubgroupAccess::unchecked(n, std::move(elements)), family,
                     "label j is the root a*zeta^j of x^" + std::to_string(n) +
                         " - c, a = c^(1/" + std::to_string(n) +
                         ") real, zeta a primitive root of unity");
}

AffineElement affine_compose(AffineElement x, AffineElement y, std::uint64_t n) {
  require_affine_modulus(n);
  for (const auto& e : {x, y}) {
    if (e.alpha >= n || e.u >= n || std::gcd<std::uint64_t>(e.u, n) != 1) {
      throw DomainError("affine_compose: (" + std::to_string(e.alpha) + "," +
                        std::to_string(e.u) + ") is not valid mod " + std::to_string(n));
    }
  }
  return AffineElement{static_cast<std::uint32_t>((x.alpha + std::uint64_t{x.u} * y.alpha) % n),
                       static_cast<std::uint32_t>((std::uint64_t{x.u} * y.u) % n)};
}

Subgroup affine_H_j(std::uint64_t n, Label j) {
  require_affine_modulus(n);
  if (j >= n) {
    throw DomainError("affine_H_j: root label " + std::to_string(j) + " out of range for n=" +
                      std::to_string(n));
  }
  std::vector<Perm> elements;
  for (std::uint32_t v : units_mod(n)) {
    // j - v*j mod n
    const std::uint64_t vj = (std::uint64_t{v} * j) % n;
    const auto alpha = static_cast<std::uint32_t>((j + n - vj) % n);
    elements.push_back(affine_action({alpha, v}, n));
  }
  return detail::SubgroupAccess::unchecked(n, std::move(elements));
}

GaloisModel symmetric_model(std::uint64_t m, const Budgets& budgets) {
  if (m < 2) throw DomainError("symmetric model needs m >= 2");
  if (m > 20) {
    throw ResourceError("symmetric model for m=" + std::to_string(m) + " is far beyond budget", 0);
  }
  require_size(nt::factorial(m), m, budgets, "symmetric model for m=" + std::to_string(m));

  std::vector<Label> images(m);
  std::iota(images.begin(), images.end(), Label{0});
  std::vector<Perm> elements;
  elements.reserve(nt::factorial(m));
  do {
    elements.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  ModelFamily family{FamilyKind::symmetric, m, {}};
  return GaloisModel(detail::SubgroupAccess::unchecked(m, std::move(elements)), family,
                     "roots of a degree-" + std::to_string(m) +
                         " polynomial with full symmetric Galois group");
}

GaloisModel custom_model(std::size_t n, std::span<const Perm> generators, std::string name,
                         const Budgets& budgets) {
  if (n == 0) throw DomainError("custom model needs at least one root");
  if (generators.empty()) throw DomainError("custom model needs at least one generator");
  for (const auto& g : generators) {
    if (g.degree() != n) {
      throw DomainError("generator " + g.to_string() + " does not act on " + std::to_string(n) +
                        " points");
    }
  }
  Subgroup group = close(generators, budgets);
  if (!is_transitive(group)) {
    throw DomainError("custom model '" + name +
                      "' models an irreducible polynomial, action must be transitive");
  }
  if (!is_faithful(group)) {
    throw DomainError("custom model '" + name + "': action must be faithful");
  }
  ModelFamily family{FamilyKind::custom, n, std::move(name)};
  return GaloisModel(std::move(group), family, "user-supplied permutation model");
}

GaloisModel cyclic_model(std::size_t n, const Budgets& budgets) {
  if (n == 0 || n > kMaxDegree) throw DomainError("cyclic model needs 1 <= n <= 65535");
  std::vector<Label> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Label>((i + 1) % n);
  const Perm shift(std::move(images));
  return custom_model(n, std::span<const Perm>(&shift, 1), "cyclic" + std::to_string(n), budgets);
}

GaloisModel build_model(const ModelSpec& spec, const Budgets& budgets) {
  switch (spec.kind) {
    case ModelSpec::Kind::affine:
      return affine_model(spec.parameter, budgets);
    case ModelSpec::Kind::symmetric:
      return symmetric_model(spec.parameter, budgets);
    case ModelSpec::Kind::cyclic:
      return cyclic_model(spec.parameter, budgets);
    case ModelSpec::Kind::generators:
      break;
  }
  const auto file = read_generator_file(spec.generators_path);
  if (file.generators.empty()) throw DomainError("generator file has no permutations");
  return custom_model(file.degree, file.generators,
                      spec.name.empty() ? spec.generators_path : spec.name, budgets);
}

std::string describe(const ModelSpec& spec) {
  switch (spec.kind) {
    case ModelSpec::Kind::affine:
      return "affine(" + std::to_string(spec.parameter) + ")";
    case ModelSpec::Kind::symmetric:
      return "symmetric(" + std::to_string(spec.parameter) + ")";
    case ModelSpec::Kind::cyclic:
      return "cyclic(" + std::to_string(spec.parameter) + ")";
    case ModelSpec::Kind::generators:
      break;
  }
  return "generators(" + spec.generators_path + ")";
}

}  // namespace rootcluster
