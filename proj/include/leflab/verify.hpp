#ifndef LEFLAB_VERIFY_HPP
#define LEFLAB_VERIFY_HPP

#include <string>
#include <vector>

#include "leflab/report.hpp"

namespace leflab {

struct VerifyCheck {
  int criterion = 0;        // 1..13, stable across suites
  std::string anchor;       // statement anchor embedded in reports
  std::string name;
  bool pass = false;
};

/// Valid suite names: core, jordan, torus, hk, albert, flags, appendix, all.
std::vector<std::string> verify_suites();

/// Runs the suite's criteria. Throws std::invalid_argument on unknown names.
/// seed feeds the randomized appendix experiments; box bounds the
/// Lefschetz-element searches.
std::vector<VerifyCheck> run_suite(const std::string& suite, unsigned seed = 7, int box = 2);

bool all_pass(const std::vector<VerifyCheck>& checks);
Json verify_to_json(const std::string& suite, unsigned seed,
                    const std::vector<VerifyCheck>& checks);
/// One "PASS"/"FAIL" line per check, each carrying its anchor, plus a summary.
std::string verify_to_text(const std::string& suite,
                           const std::vector<VerifyCheck>& checks);

}  // namespace leflab

#endif
