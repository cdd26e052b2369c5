#pragma once

#include <CLI11.hpp>
#include <functional>
#include <json.hpp>
#include <string>

namespace cycram::cli {

using Json = nlohmann::ordered_json;

// Exit codes shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kIncomplete = 3;
inline constexpr int kHypothesis = 4;

/// A subcommand's body runs after parsing and returns the exit code.
using Action = std::function<int()>;

void add_witness(CLI::App& app, Action& action);
void add_search(CLI::App& app, Action& action);
void add_exact(CLI::App& app, Action& action);
void add_lemma(CLI::App& app, Action& action);
void add_bench(CLI::App& app, Action& action);

/// Writes text plus a newline to path; std::runtime_error when it cannot.
void write_file(const std::string& path, const std::string& text);

}  // namespace cycram::cli
