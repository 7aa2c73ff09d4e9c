#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "parallel.hpp"

namespace wordrep::detail {

/// Letters are vertex indices of the target graph (at most 64).
struct UniformProblem {
  std::size_t n = 0;
  std::vector<std::uint64_t> adj;
  std::vector<int> copies;              // occurrences each letter must reach
  std::vector<std::uint32_t> base;      // fixed subsequence (interleave mode)
  std::uint64_t free_letters = 0;       // letters placed freely
  std::optional<std::uint32_t> first;   // forced first letter
  bool reversal_tiebreak = false;       // second letter <= last letter
};

struct UniformResult {
  std::optional<std::vector<std::uint32_t>> word;
  std::uint64_t nodes = 0;
  bool aborted = false;
};

UniformResult solve_uniform(const UniformProblem& problem, unsigned jobs, bool deterministic,
                            std::uint64_t node_limit);

}  // namespace wordrep::detail
