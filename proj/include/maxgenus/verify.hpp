#pragma once

#include "maxgenus/genus_engine.hpp"

#include <string>
#include <vector>

namespace mg {

struct SuiteResult {
    int checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Property suites, named as in the CLI: lemma1.1, lemma1.2, lemma1.3,
// thm2.1, thm3.1, thm3.2, correspondence. `range` scales the suite (see
// each runner for its grammar; "" picks the default). Throws input_error
// on unknown suite/range.
SuiteResult run_suite(const std::string& suite, const std::string& range, unsigned seed,
                      const GenusOptions& opts);

// Named builtin graphs for the correspondence suite and tests:
// k4, m6, n8, c5chords.
Multigraph builtin_graph(const std::string& name);

} // namespace mg
