#pragma once

// The acceptance checks, one per criterion, runnable concurrently.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ordtree {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct CheckSpec {
    int id;
    std::string name;
    std::function<CheckResult(std::uint64_t seed)> run;
};

/// Directory of the frozen oracle outputs: $ORDTREE_GOLDEN_DIR or the
/// source-tree default.
std::string golden_dir();

const std::vector<CheckSpec>& acceptance_checks();

/// Runs the selected checks (all when `ids` is empty) on `threads` workers
/// (0: $ORDTREE_THREADS or hardware concurrency). Results come back in id order.
std::vector<CheckResult> run_acceptance(const std::vector<int>& ids, unsigned threads = 0, std::uint64_t seed = 1);

} // namespace ordtree
