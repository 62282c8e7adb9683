// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "ordtree/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i)
        ids.push_back(std::atoi(argv[i]));
    bool all = true;
    for (const auto& r : ordtree::run_acceptance(ids)) {
        std::printf("%s  criterion %2d  %-38s %7.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds, r.detail.c_str());
        all = all && r.passed;
    }
    return all ? 0 : 1;
}
