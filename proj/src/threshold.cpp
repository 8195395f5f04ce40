#include "cliquegame/threshold.hpp"

#include "cliquegame/errors.hpp"
#include "cliquegame/rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace cliquegame {

std::vector<std::vector<Comparator>> odd_even_merge_network(std::size_t width) {
  if (width == 0 || (width & (width - 1)) != 0) throw PreconditionError("network width must be a power of two");
  std::vector<std::vector<Comparator>> layers;
  for (std::size_t p = 1; p < width; p <<= 1) {
    for (std::size_t k = p; k >= 1; k >>= 1) {
      std::vector<Comparator> layer;
      for (std::size_t j = k % p; j + k < width; j += 2 * k) {
        for (std::size_t i = 0; i < k && i + j + k < width; ++i) {
          if ((i + j) / (2 * p) == (i + j + k) / (2 * p)) {
            layer.push_back({static_cast<std::uint32_t>(i + j), static_cast<std::uint32_t>(i + j + k)});
          }
        }
      }
      layers.push_back(std::move(layer));
    }
  }
  return layers;
}

std::vector<std::size_t> network_wire_depths(std::size_t width, const std::vector<std::vector<Comparator>>& layers) {
  std::vector<std::size_t> depth(width, 0);
  for (const auto& layer : layers) {
    for (const auto& c : layer) {
      std::size_t d = 1 + std::max(depth[c.hi], depth[c.lo]);
      depth[c.hi] = depth[c.lo] = d;
    }
  }
  return depth;
}

NodeId threshold_sort_into(CircuitBuilder& b, std::span<const NodeId> inputs, std::size_t k) {
  const std::size_t n = inputs.size();
  if (k < 1 || k > n) {
    throw PreconditionError("threshold k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  std::size_t width = std::bit_ceil(n);
  std::vector<NodeId> wire(inputs.begin(), inputs.end());
  wire.resize(width, b.constant(false));
  for (const auto& layer : odd_even_merge_network(width)) {
    for (const auto& c : layer) {
      NodeId hi = b.op_or(wire[c.hi], wire[c.lo]);
      NodeId lo = b.op_and(wire[c.hi], wire[c.lo]);
      wire[c.hi] = hi;
      wire[c.lo] = lo;
    }
  }
  return wire[k - 1];
}

Circuit build_threshold_sort(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw PreconditionError("threshold k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
  CircuitBuilder b(n);
  std::vector<NodeId> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back(b.var(i));
  return b.finish(threshold_sort_into(b, vars, k));
}

MajorityPadding majority_padding(std::size_t n, std::size_t k) {
  // Majority over N = n + ones + zeros leaves fires at weight (N+1)/2, which
  // equals k + ones exactly when zeros - ones = 2k - n - 1.
  if (k < 1 || k > n) throw PreconditionError("threshold k outside 1..n");
  MajorityPadding p;
  if (2 * k <= n) {
    p.ones = n + 1 - 2 * k;
  } else {
    p.zeros = 2 * k - n - 1;
  }
  return p;
}

std::size_t valiant_levels(std::size_t leaves, double depth_factor) {
  if (leaves <= 1) return 0;
  double x = depth_factor * std::log2(static_cast<double>(leaves));
  return static_cast<std::size_t>(std::ceil(x - 1e-9));
}

namespace {

// Calls visit(batch of assignments packed as columns, batch size) for every
// weight-w vector of length n, 64 at a time.
template <class Visit>
bool for_each_weight_batch(std::size_t n, std::size_t w, Visit&& visit) {
  std::vector<std::uint64_t> columns(n, 0);
  std::size_t in_batch = 0;
  std::vector<std::size_t> pos(w);
  for (std::size_t i = 0; i < w; ++i) pos[i] = i;
  for (;;) {
    for (std::size_t p : pos) columns[p] |= std::uint64_t{1} << in_batch;
    if (++in_batch == 64) {
      if (!visit(columns, in_batch)) return false;
      std::fill(columns.begin(), columns.end(), 0);
      in_batch = 0;
    }
    // next combination
    std::size_t i = w;
    while (i > 0 && pos[i - 1] == n - w + (i - 1)) --i;
    if (i == 0) break;
    ++pos[i - 1];
    for (std::size_t j = i; j < w; ++j) pos[j] = pos[j - 1] + 1;
  }
  if (in_batch) return visit(columns, in_batch);
  return true;
}

}  // namespace

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

bool verify_threshold(const Circuit& c, std::size_t n, std::size_t k, std::uint64_t budget) {
  if (k < 1 || k > n) throw PreconditionError("verify_threshold needs 1 <= k <= n");
  if (c.var_count() != n) throw PreconditionError("circuit arity differs from n");
  std::uint64_t lower = binomial(n, k - 1), upper = binomial(n, k);
  if (lower > budget || upper > budget - lower) {
    throw ConstructionError("verification budget exceeded: C(n,k)+C(n,k-1) > " + std::to_string(budget));
  }
  auto mask = [](std::size_t count) { return count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1; };
  bool rejects_below = for_each_weight_batch(n, k - 1, [&](const std::vector<std::uint64_t>& cols, std::size_t cnt) {
    return (eval_packed(c, cols) & mask(cnt)) == 0;
  });
  if (!rejects_below) return false;
  return for_each_weight_batch(n, k, [&](const std::vector<std::uint64_t>& cols, std::size_t cnt) {
    return (eval_packed(c, cols) & mask(cnt)) == mask(cnt);
  });
}

ValiantCircuit build_threshold_valiant(std::size_t n, std::size_t k, const ValiantParams& params) {
  if (k < 1 || k > n) throw PreconditionError("threshold k outside 1..n");
  if (n > params.max_inputs) {
    throw ConstructionError("unverifiable construction size: n=" + std::to_string(n) + " exceeds " +
                            std::to_string(params.max_inputs));
  }
  const MajorityPadding pad = majority_padding(n, k);
  const std::size_t leaves = n + pad.total();
  const std::size_t levels = valiant_levels(leaves, params.depth_factor);

  auto rng = make_rng(params.seed, {n, k});

  for (std::size_t attempt = 1; attempt <= params.max_retries; ++attempt) {
    CircuitBuilder b(n);
    std::vector<NodeId> padded;
    for (std::size_t i = 0; i < n; ++i) padded.push_back(b.var(i));
    padded.insert(padded.end(), pad.ones, b.constant(true));
    padded.insert(padded.end(), pad.zeros, b.constant(false));

    std::size_t width = 1;
    for (std::size_t l = 0; l < levels; ++l) width *= 3;
    std::vector<NodeId> level(width);
    for (auto& leaf : level) leaf = padded[uniform_index(rng, leaves)];
    while (level.size() > 1) {
      std::vector<NodeId> next(level.size() / 3);
      for (std::size_t i = 0; i < next.size(); ++i) {
        next[i] = b.maj3(level[3 * i], level[3 * i + 1], level[3 * i + 2]);
      }
      level = std::move(next);
    }
    Circuit candidate = b.finish(level.front());
    if (verify_threshold(candidate, n, k, params.verification_budget)) {
      return {std::move(candidate), attempt, params.seed};
    }
  }
  throw ConstructionError("amplification failed; increase depth_factor (n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
}

std::string engine_name(ThresholdEngine e) { return e == ThresholdEngine::SortingNetwork ? "sort" : "valiant"; }

ThresholdEngine parse_engine(const std::string& name) {
  if (name == "sort") return ThresholdEngine::SortingNetwork;
  if (name == "valiant") return ThresholdEngine::Valiant;
  throw PreconditionError("unknown threshold builder '" + name + "' (expected sort|valiant)");
}

const Circuit& ThresholdFactory::get(std::size_t n, std::size_t k) {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(n, k);
  auto it = cache_.find(key);
  if (it != cache_.end()) return *it->second;
  auto c = options_.engine == ThresholdEngine::SortingNetwork
               ? build_threshold_sort(n, k)
               : build_threshold_valiant(n, k, options_.valiant).circuit;
  return *(cache_[key] = std::make_unique<Circuit>(std::move(c)));
}

NodeId ThresholdFactory::instantiate(CircuitBuilder& b, std::span<const NodeId> inputs, std::size_t k) {
  return b.splice(get(inputs.size(), k), inputs);
}

}  // namespace cliquegame
