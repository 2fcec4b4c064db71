// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "tcc/claims.hpp"

namespace {

struct Criterion {
  int number;
  const char* tag;
  const char* title;
};

const std::vector<Criterion> kCriteria{
    {1, "s3", "S3: [e]_(123), [e]_(12) = A3 of index 2, R = 3 with exact classes"},
    {2, "a4", "A4: [A4,(123)] is the Klein subgroup, [A4,(12)(34)] is not, with witness"},
    {3, "simple", "A5 and S5: no nontrivial (even) h gives a subgroup [e]_h"},
    {4, "order8", "order-8 group: End/Aut counts, orbit census, swap map class, R = 3, product 4"},
    {5, "free-nil2", "N22: displacement closed forms, x^2, y^2 in and x^2y^2 outside, closure"},
    {6, "free-nil3", "N23: [x,y] in and [x,y]^2 outside [e], brute force on the box"},
    {7, "wreath", "Z wr Z: commutator against matrices, canonical non-closure witness"},
    {8, "invariants", "invariant sweeps over the catalog: zero failures"},
};

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& c : kCriteria) {
    tcc::ClaimOptions options;
    options.only = {c.tag};
    tcc::ClaimReport report = tcc::run_claims(options);
    std::size_t passed = 0;
    for (const auto& claim : report.claims) {
      if (claim.pass) {
        ++passed;
      } else {
        std::printf("    failed: %s: expected %s, got %s\n", claim.anchor.c_str(), claim.expected.c_str(),
                    claim.actual.c_str());
      }
    }
    const bool ok = !report.claims.empty() && passed == report.claims.size();
    if (!ok) ++failed;
    std::printf("%s criterion %d: %s (%zu/%zu checks)\n", ok ? "PASS" : "FAIL", c.number, c.title, passed,
                report.claims.size());
    for (const auto& f : report.findings) std::printf("    note: %s\n", f.c_str());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria failed, %.2f s\n", failed, kCriteria.size(), seconds);
  return failed == 0 ? 0 : 1;
}
