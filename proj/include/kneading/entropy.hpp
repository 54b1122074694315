#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kneading/errors.hpp"
#include "kneading/family.hpp"
#include "kneading/words.hpp"

namespace kneading {

inline constexpr std::uint64_t kDefaultNodeCap = 2'000'000;
inline constexpr int kDefaultEntropyDepth = 2000;
inline constexpr double kDefaultEntropyTolerance = 5e-3;

// Lap numbers lap(f^n), n = 1 .. counts.size(), of mu f from the tree of
// preimages of c. Expansion stops at max_n or before the node total would
// exceed node_cap.
struct LapSequence {
  std::vector<std::uint64_t> counts;
  bool cap_hit = false;
};

LapSequence lap_sequence(const UnimodalFamily& fam, double mu, int max_n,
                         std::uint64_t node_cap = kDefaultNodeCap);

// Raised by lap_count when the node cap stops the expansion before level n.
// The levels that were completed are kept.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::vector<std::uint64_t> partial)
      : Error(what), partial_(std::move(partial)) {}
  const std::vector<std::uint64_t>& partial() const noexcept { return partial_; }

 private:
  std::vector<std::uint64_t> partial_;
};

// lap(f^n) = 1 + #(union_{k<n} f^{-k}(c) in (0, 1)).
std::uint64_t lap_count(const UnimodalFamily& fam, double mu, int n,
                        std::uint64_t node_cap = kDefaultNodeCap);

struct EntropyReport {
  double mu = 0.0;
  std::vector<std::uint64_t> lap_counts;
  double h_estimate = 0.0;  // nats
  int depth_reached = 0;
  bool cap_hit = false;
};

// Mean of log(lap(n+1) / lap(n)) over the last five available levels,
// clamped to 0 below 1e-4. RangeError unless max_depth >= 5.
EntropyReport entropy_estimate(const UnimodalFamily& fam, double mu,
                               int max_depth = kDefaultEntropyDepth,
                               std::uint64_t node_cap = kDefaultNodeCap);

struct EntropyOptions {
  bool enabled = true;
  int max_depth = kDefaultEntropyDepth;
  std::uint64_t node_cap = kDefaultNodeCap;
  double tolerance = kDefaultEntropyTolerance;
};

struct KneadingViolation {
  std::size_t i = 0;  // K(mu_i) > K(mu_{i+1})
  std::size_t j = 0;
  std::size_t first_difference = 0;
};

struct EntropyViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  double delta = 0.0;  // h(mu_i) - h(mu_j) > tolerance
};

struct SweepReport {
  std::string family;
  int depth = 0;
  double tol_c = kDefaultTolC;
  EntropyOptions entropy;
  std::vector<double> mus;
  std::vector<Word> words;
  std::vector<double> entropies;      // empty when entropy is disabled
  std::vector<int> lap_depths;        // depth reached per grid point
  std::vector<KneadingViolation> kneading_violations;
  std::vector<EntropyViolation> entropy_violations;

  bool monotone() const noexcept { return kneading_violations.empty() && entropy_violations.empty(); }
};

// Uniform grid mu_i = mu_min + (mu_max - mu_min) i / (grid_points - 1).
// Adjacent words are compared on their common prefix, so agreement counts as
// non-decreasing. RangeError unless 0 < mu_min < mu_max <= 1, grid_points >= 2.
SweepReport sweep(const UnimodalFamily& fam, double mu_min, double mu_max, int grid_points,
                  int depth, const EntropyOptions& entropy = {}, double tol_c = kDefaultTolC);

}  // namespace kneading
