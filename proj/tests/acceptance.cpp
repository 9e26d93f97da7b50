#include <iostream>

#include "homrep/verify.hpp"

int main() {
  homrep::VerifyConfig cfg;
  cfg.n_max = 6;
  const auto results = homrep::run_verification(cfg);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " (" << r.checked
              << " checked, " << r.violations << " violations)\n";
    for (const auto& note : r.notes) std::cout << "  note: " << note << '\n';
    if (!r.passed) {
      ++failed;
      std::cout << "  detail: " << r.detail << '\n';
      if (r.reproducer) std::cout << "  reproducer:\n" << *r.reproducer;
    }
  }
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
