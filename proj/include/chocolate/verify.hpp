#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "chocolate/engine.hpp"

namespace chocolate {

struct VerifyReport {
    std::string check;           // e.g. "oracle"
    std::string range;           // e.g. "n,m <= 6, both signs"
    bool passed = true;
    std::string counterexample;  // set whenever passed is false
    std::size_t cases = 0;
    double elapsed_ms = 0.0;
    std::vector<std::string> notes;  // observations that are not asserted
};

struct VerifyOptions {
    std::uint32_t bound = 4;
    std::size_t node_budget = Engine::kDefaultNodeBudget;
};

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

bool is_suite(std::string_view name);

/// Runs one suite ("all" runs every suite). Reports come back in suite order.
/// Throws std::invalid_argument for an unknown name.
std::vector<VerifyReport> run_suite(std::string_view name, const VerifyOptions& options);

/// The published 10x10 value table, row 0 is m = 0 (bottom row).
const std::vector<std::vector<std::string>>& published_table();

}  // namespace chocolate
