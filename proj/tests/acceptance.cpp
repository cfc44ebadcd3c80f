// Acceptance suite: runs the default verification battery and prints one line
// per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "rootcluster/budgets.hpp"
#include "rootcluster/verify.hpp"

using namespace rootcluster;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> ids;
  std::chrono::seconds time_limit{0};  // zero: no separate limit
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "affine model soundness, odd n <= 105", {"affine-model"}, std::chrono::seconds(30)},
      {2, "pair generation iff gcd(l - k, n) = 1, odd n <= 45", {"pair-criterion"}},
      {3, "minimum minimal set count n*phi(n)/2", {"minimum-minimal-count"}},
      {4, "prime n: minimal sets are exactly the pairs", {"prime-minimal-sets"}},
      {5, "minimal sets of sizes 2 and k for n = p1...pk", {"two-sized-minimal-sets"}},
      {6, "orderings of a minimal set give |B|! towers of length |B|+1", {"minimal-set-towers"}},
      {7, "cofactor tower degrees, root capacities, intermediate fields",
       {"degree-sequence", "root-capacity", "intermediate-fields"}},
      {8, "tower censuses", {"least-length-towers", "symmetric-tower-count"}},
      {9, "unique tower iff one cluster", {"unique-tower"}},
      {10, "structural invariants", {"structural-invariants", "symmetric-minimum"}},
  };
  return list;
}

std::string describe(const TheoremReport& r) {
  return r.id + " " + r.parameters.to_json().dump() + ": " + to_string(r.status) +
         (r.skip_reason.empty() ? "" : " (" + r.skip_reason + ")");
}

}  // namespace

int main() {
  const Budgets budgets = Budgets::from_environment();
  const auto battery = default_battery();

  std::map<std::string, std::vector<VerifyRequest>> by_id;
  for (const auto& request : battery) by_id[request.id].push_back(request);

  bool all_pass = true;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria()) {
    std::vector<TheoremReport> reports;
    const auto c_start = std::chrono::steady_clock::now();
    for (const auto& id : c.ids) {
      auto part = verify_all(by_id[id], budgets);
      reports.insert(reports.end(), part.begin(), part.end());
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - c_start);

    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.pass() ? 1 : 0;
    bool ok = !reports.empty() && passed == reports.size();
    const bool in_time = c.time_limit.count() == 0 || elapsed < c.time_limit;
    ok = ok && in_time;
    all_pass = all_pass && ok;

    std::printf("%s criterion %d: %s [%zu/%zu checks, %lld ms%s]\n", ok ? "PASS" : "FAIL", c.number,
                c.title.c_str(), passed, reports.size(), static_cast<long long>(elapsed.count()),
                in_time ? "" : ", over time limit");
    for (const auto& r : reports) {
      if (!r.pass()) std::printf("    %s\n", describe(r).c_str());
    }
  }

  const auto total = std::chrono::duration_cast<std::chrono::seconds>(
      std::chrono::steady_clock::now() - start);
  const bool fast = total < std::chrono::seconds(300);
  all_pass = all_pass && fast;
  std::printf("%s runtime: full battery in %lld s (limit 300 s)\n", fast ? "PASS" : "FAIL",
              static_cast<long long>(total.count()));
  return all_pass ? 0 : 1;
}
