#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace dimjump {

// One to three random edits: byte flips, deletions, duplicated or swapped
// lines, and insertions of tokens that the task grammar cares about.
std::string mutate_task(const std::string& text, std::mt19937_64& rng);

struct FuzzSummary {
  std::size_t runs = 0;
  std::array<std::size_t, 4> by_status{};  // indexed by exit status
  std::vector<std::string> internal;       // inputs that produced status 3
};

// Dispatches `runs` mutants of `text` in process, each under a work budget.
FuzzSummary fuzz_task(const std::string& text, std::uint64_t seed, std::size_t runs, std::uint64_t budget);

}  // namespace dimjump
