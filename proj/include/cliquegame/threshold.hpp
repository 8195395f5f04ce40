#pragma once

#include "cliquegame/circuit.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cliquegame {

// ---------------------------------------------------------------------------
// Threshold circuits. Th_k^n(x) = 1 iff x has at least k ones.
//
// Two engines:
//   * SortingNetwork: Batcher's odd-even merge sort with each comparator
//     realised as (OR -> max, AND -> min). Exact for every n, depth
//     O(log^2 n).
//   * Valiant: majority by random read-once MAJ3 formula of logarithmic
//     depth, padded from Th_k. Probabilistic, so every candidate is checked
//     with verify_threshold before it is returned.
// ---------------------------------------------------------------------------

struct Comparator {
  std::uint32_t hi;  // receives max
  std::uint32_t lo;  // receives min
};

// Odd-even merge sort on wires 0..width-1 (width a power of two), grouped by
// layer. After applying it the wires hold the input sorted descending.
std::vector<std::vector<Comparator>> odd_even_merge_network(std::size_t width);

// Per-wire depth after the network runs from all-zero depths.
std::vector<std::size_t> network_wire_depths(std::size_t width, const std::vector<std::vector<Comparator>>& layers);

// Builds Th_k over the given nodes inside an existing builder.
NodeId threshold_sort_into(CircuitBuilder& b, std::span<const NodeId> inputs, std::size_t k);

Circuit build_threshold_sort(std::size_t n, std::size_t k);

inline constexpr double kDefaultDepthFactor = 2.7;
inline constexpr std::size_t kDefaultValiantRetries = 64;
inline constexpr std::size_t kValiantMaxInputs = 16;
inline constexpr std::uint64_t kDefaultVerificationBudget = std::uint64_t{1} << 22;

struct ValiantParams {
  std::uint64_t seed = 0;
  double depth_factor = kDefaultDepthFactor;
  std::size_t max_retries = kDefaultValiantRetries;
  std::size_t max_inputs = kValiantMaxInputs;
  std::uint64_t verification_budget = kDefaultVerificationBudget;
};

// Padding that turns Th_k^n into majority over an odd number of leaves.
struct MajorityPadding {
  std::size_t ones = 0;
  std::size_t zeros = 0;
  std::size_t total() const noexcept { return ones + zeros; }
};
MajorityPadding majority_padding(std::size_t n, std::size_t k);

// Number of MAJ3 levels used for `leaves` padded inputs.
std::size_t valiant_levels(std::size_t leaves, double depth_factor);

struct ValiantCircuit {
  Circuit circuit;
  std::size_t attempts = 0;  // 1 when the first candidate verified
  std::uint64_t seed = 0;
};

// Throws ConstructionError when n exceeds params.max_inputs or when no
// candidate verifies within params.max_retries attempts.
ValiantCircuit build_threshold_valiant(std::size_t n, std::size_t k, const ValiantParams& params = {});

// Checks the circuit on every input of weight k-1 (must give 0) and of weight
// k (must give 1). For a monotone circuit this is equivalent to computing
// Th_k^n everywhere. Throws PreconditionError when k is outside 1..n and
// ConstructionError when C(n,k)+C(n,k-1) exceeds the budget.
bool verify_threshold(const Circuit& c, std::size_t n, std::size_t k,
                      std::uint64_t budget = kDefaultVerificationBudget);

std::uint64_t binomial(std::size_t n, std::size_t k);

enum class ThresholdEngine { SortingNetwork, Valiant };

std::string engine_name(ThresholdEngine e);
ThresholdEngine parse_engine(const std::string& name);

struct ThresholdOptions {
  ThresholdEngine engine = ThresholdEngine::SortingNetwork;
  ValiantParams valiant;
};

// Builds and caches threshold templates Th_k^n for one engine configuration,
// and instantiates them over arbitrary nodes. Thread-safe.
class ThresholdFactory {
 public:
  explicit ThresholdFactory(ThresholdOptions options = {}) : options_(options) {}

  const ThresholdOptions& options() const noexcept { return options_; }

  const Circuit& get(std::size_t n, std::size_t k);
  NodeId instantiate(CircuitBuilder& b, std::span<const NodeId> inputs, std::size_t k);

 private:
  ThresholdOptions options_;
  std::mutex mutex_;
  std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<Circuit>> cache_;
};

}  // namespace cliquegame
