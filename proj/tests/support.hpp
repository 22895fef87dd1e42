#ifndef RACKHOM_TEST_SUPPORT_HPP
#define RACKHOM_TEST_SUPPORT_HPP

#include <cstdio>
#include <sys/wait.h>
#include <string>
#include <vector>

#include "rackhom/rackhom.hpp"

namespace test_support {

struct Group
{
    std::size_t free = 0;
    std::vector<int> torsion;
    bool operator==(const Group&) const = default;
};

inline Group group_of(const rackhom::Rack& r, std::size_t n, rackhom::SpaceKind kind)
{
    auto pres = rackhom::default_cache().get(r, n, kind);
    Group g{pres->free_rank, {}};
    for (const auto& d : pres->torsion_factors)
        g.torsion.push_back(static_cast<int>(d));
    return g;
}

struct RunResult
{
    int status = -1;
    std::string output;
};

/// Runs a shell command, capturing stdout and stderr together.
inline RunResult run(const std::string& command)
{
    RunResult res;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe)
        return res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        res.output.append(buf, got);
    int raw = pclose(pipe);
    res.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return res;
}

}   // namespace test_support

#endif
