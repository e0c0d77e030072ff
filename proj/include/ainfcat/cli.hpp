#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ainfcat {

/// Parsed command line of the ainfcat tool.
struct Options {
    std::string command;  // check | check-functor | envelope | unitality | weak-unit |
                          // homotopy-unital | double-coder | verify-lemmas | fixtures
    std::vector<std::string> files;
    std::string name;    // --name: category / functor / dcoder selector
    std::string model;   // --model: dgmodel block name
    std::string output;  // --output: destination of emitted files
    std::optional<int> truncation;
    std::optional<std::string> field;
    std::uint64_t seed = 1;
    std::string kind;  // fixtures: dg-random | twist | envelope
    bool fixed_timing = false;  // report timing_ms as 0 (reproducible output)
};

/// Exit codes: 0 = pass, 1 = mathematical failure (with witness),
/// 2 = input error.
struct RunResult {
    std::string report_json;  // stable field order, "format": 1
    std::string human;        // one line per check
    int exit_code = 0;
};

RunResult run(const Options& opt);

std::string fnv1a_hex(const std::string& data);

}  // namespace ainfcat
