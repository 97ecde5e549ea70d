#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bohr {

struct SelfTestResult {
    std::string module;
    std::string invariant;
    bool pass = false;
    std::string detail;
};

struct SelfTestOptions {
    std::string only;                     // empty = every module
    bool inject_fault_group_rep = false;  // test hook: perturb one irrep entry
    std::uint64_t seed = 1;
};

/// Runs every module's invariant suite at reduced trial counts (well under a
/// minute in total).  Returns one line per invariant.
std::vector<SelfTestResult> run_selftest(const SelfTestOptions& options);

}  // namespace bohr
