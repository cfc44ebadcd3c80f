#include "rootcluster/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "rootcluster/errors.hpp"

namespace rootcluster {

namespace {

void require_same_degree(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw DomainError(std::string(where) + ": degree mismatch (" + std::to_string(a) + " vs " +
                      std::to_string(b) + ")");
  }
}

void require_label(const Subgroup& g, Label i, const char* where) {
  if (i >= g.degree()) {
    throw DomainError(std::string(where) + ": root label " + std::to_string(i) +
                      " out of range for degree " + std::to_string(g.degree()));
  }
}

// FNV-1a over the image sequences.
std::size_t hash_elements(const std::vector<Perm>& elements) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& p : elements) {
    for (Label x : p.images()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
  }
  return static_cast<std::size_t>(h);
}

}  // namespace

RootSet make_root_set(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

Perm::Perm(std::vector<Label> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree) throw DomainError("permutation degree exceeds 65535");
  std::vector<bool> seen(images_.size(), false);
  for (Label x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw DomainError("not a permutation of 0.." + std::to_string(images_.size() - 1) + ": " +
                        to_string());
    }
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  if (degree > kMaxDegree) throw DomainError("permutation degree exceeds 65535");
  std::vector<Label> images(degree);
  std::iota(images.begin(), images.end(), Label{0});
  return Perm(std::move(images), Trusted{});
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<Label> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Label>(i);
  return Perm(std::move(inv), Trusted{});
}

std::string Perm::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ',';
    os << images_[i];
  }
  return os.str();
}

Perm compose(const Perm& p, const Perm& q) {
  require_same_degree(p.degree(), q.degree(), "compose");
  std::vector<Label> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.images_[q.images_[i]];
  return Perm(std::move(out), Perm::Trusted{});
}

Subgroup::Subgroup(std::size_t degree, std::vector<Perm> sorted_elements)
    : degree_(degree),
      elements_(std::make_shared<const std::vector<Perm>>(std::move(sorted_elements))),
      hash_(hash_elements(*elements_)) {}

Subgroup detail::SubgroupAccess::unchecked(std::size_t degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  return Subgroup(degree, std::move(elements));
}

Subgroup Subgroup::trivial(std::size_t degree) {
  return Subgroup(degree, {Perm::identity(degree)});
}

Subgroup Subgroup::from_elements(std::vector<Perm> elements) {
  if (elements.empty()) throw DomainError("a subgroup needs at least one element");
  const std::size_t degree = elements.front().degree();
  for (const auto& p : elements) require_same_degree(degree, p.degree(), "Subgroup");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!elements.front().is_identity()) throw DomainError("subgroup must contain the identity");
  const auto member = [&](const Perm& p) {
    return std::binary_search(elements.begin(), elements.end(), p);
  };
  for (const auto& a : elements) {
    if (!member(a.inverse())) throw DomainError("element set is not closed under inversion");
    for (const auto& b : elements) {
      if (!member(compose(a, b))) {
        throw DomainError("element set is not closed under composition");
      }
    }
  }
  return Subgroup(degree, std::move(elements));
}

bool Subgroup::contains(const Perm& p) const { return position(p).has_value(); }

std::optional<std::size_t> Subgroup::position(const Perm& p) const {
  auto it = std::lower_bound(elements_->begin(), elements_->end(), p);
  if (it == elements_->end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_->begin());
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::includes(other.elements_->begin(), other.elements_->end(), elements_->begin(),
                       elements_->end());
}

std::optional<Perm> Subgroup::least_nontrivial() const {
  if (order() < 2) return std::nullopt;
  return (*elements_)[1];
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  if (a.elements_ == b.elements_) return true;
  return a.degree_ == b.degree_ && a.hash_ == b.hash_ && *a.elements_ == *b.elements_;
}

Subgroup close(std::span<const Perm> generators, const Budgets& budgets) {
  if (generators.empty()) throw DomainError("close: need at least one generator");
  const std::size_t degree = generators.front().degree();
  for (const auto& g : generators) require_same_degree(degree, g.degree(), "close");

  const auto check_budget = [&](std::size_t count) {
    if (count > budgets.closure_elements) {
      throw ResourceError("closure budget of " + std::to_string(budgets.closure_elements) +
                              " elements exceeded (" + std::to_string(count) + " found so far)",
                          count);
    }
    if (static_cast<std::uint64_t>(count) * degree > budgets.storage_entries) {
      throw ResourceError("storage budget of " + std::to_string(budgets.storage_entries) +
                              " image entries exceeded (" + std::to_string(count) +
                              " elements of degree " + std::to_string(degree) + ")",
                          count);
    }
  };

  std::set<Perm> seen{Perm::identity(degree)};
  std::deque<Perm> frontier{Perm::identity(degree)};
  while (!frontier.empty()) {
    Perm x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Perm y = compose(g, x);
      if (seen.insert(y).second) {
        check_budget(seen.size());
        frontier.push_back(std::move(y));
      }
    }
  }
  // Finite group: closure under composition with generators gives inverses too.
  return detail::SubgroupAccess::unchecked(degree, {seen.begin(), seen.end()});
}

Subgroup stabilizer(const Subgroup& g, Label i) {
  const Label roots[] = {i};
  return pointwise_stabilizer(g, roots);
}

Subgroup pointwise_stabilizer(const Subgroup& g, std::span<const Label> roots) {
  for (Label i : roots) require_label(g, i, "pointwise_stabilizer");
  if (roots.empty()) return g;
  std::vector<Perm> kept;
  for (const auto& p : g.elements()) {
    if (std::all_of(roots.begin(), roots.end(), [&](Label i) { return p.fixes(i); })) {
      kept.push_back(p);
    }
  }
  // Filtering a sorted list keeps it sorted.
  return detail::SubgroupAccess::unchecked(g.degree(), std::move(kept));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_degree(a.degree(), b.degree(), "intersect");
  std::vector<Perm> common;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(common));
  return detail::SubgroupAccess::unchecked(a.degree(), std::move(common));
}

RootSet fixed_points(const Subgroup& h) {
  RootSet out;
  for (std::size_t i = 0; i < h.degree(); ++i) {
    const auto label = static_cast<Label>(i);
    if (std::all_of(h.elements().begin(), h.elements().end(),
                    [&](const Perm& p) { return p.fixes(label); })) {
      out.push_back(label);
    }
  }
  return out;
}

std::uint64_t index(const Subgroup& g, const Subgroup& h) {
  if (!h.is_subgroup_of(g)) throw DomainError("index: H is not contained in G");
  if (g.order() % h.order() != 0) {
    throw InvariantError("index: |H| = " + std::to_string(h.order()) + " does not divide |G| = " +
                         std::to_string(g.order()));
  }
  return g.order() / h.order();
}

RootSet orbit(const Subgroup& g, Label i) {
  require_label(g, i, "orbit");
  std::vector<Label> out;
  out.reserve(g.order());
  for (const auto& p : g.elements()) out.push_back(p(i));
  return make_root_set(std::move(out));
}

bool is_transitive(const Subgroup& g) {
  if (g.degree() == 0) return false;
  return orbit(g, 0).size() == g.degree();
}

bool is_faithful(const Subgroup& g) {
  std::size_t kernel = 0;
  for (const auto& p : g.elements()) {
    if (p.is_identity()) ++kernel;
  }
  return kernel == 1;
}

}  // namespace rootcluster
