#include "kneading/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "parallel.hpp"

namespace kneading {

LapSequence lap_sequence(const UnimodalFamily& fam, double mu, int max_n, std::uint64_t node_cap) {
  if (max_n < 1) throw RangeError("lap counts need n >= 1");
  if (node_cap < 1) throw RangeError("node cap must be >= 1");
  if (!(mu > 0.0 && mu <= 1.0)) throw RangeError("lap counts need mu in (0, 1]");

  LapSequence out;
  // Level 0 is {c}: f has two laps.
  std::vector<double> level{fam.c()};
  std::vector<double> next;
  std::uint64_t total = 1;
  out.counts.push_back(2);
  for (int n = 2; n <= max_n; ++n) {
    std::uint64_t children = 0;
    for (double y : level) {
      if (y < mu) children += 2;
    }
    if (total + children > node_cap) {
      out.cap_hit = true;
      break;
    }
    next.clear();
    next.reserve(children);
    for (double y : level) {
      // y > mu has no preimage; y == mu has only c, which is already level 0.
      if (!(y < mu)) continue;
      next.push_back(inverse_branch(fam, mu, Branch::L, y));
      next.push_back(inverse_branch(fam, mu, Branch::R, y));
    }
    total += children;
    out.counts.push_back(out.counts.back() + children);
    level.swap(next);
    if (level.empty()) {
      // No further preimages: the lap number is constant from here on.
      out.counts.resize(static_cast<std::size_t>(max_n), out.counts.back());
      break;
    }
  }
  return out;
}

std::uint64_t lap_count(const UnimodalFamily& fam, double mu, int n, std::uint64_t node_cap) {
  LapSequence seq = lap_sequence(fam, mu, n, node_cap);
  if (seq.counts.size() < static_cast<std::size_t>(n)) {
    throw CapExceeded("node cap " + std::to_string(node_cap) + " reached after " +
                          std::to_string(seq.counts.size()) + " levels",
                      std::move(seq.counts));
  }
  return seq.counts[static_cast<std::size_t>(n) - 1];
}

EntropyReport entropy_estimate(const UnimodalFamily& fam, double mu, int max_depth,
                               std::uint64_t node_cap) {
  if (max_depth < 5) throw RangeError("entropy estimate needs max_depth >= 5");
  LapSequence seq = lap_sequence(fam, mu, max_depth, node_cap);
  EntropyReport r;
  r.mu = mu;
  r.cap_hit = seq.cap_hit;
  r.depth_reached = static_cast<int>(seq.counts.size());
  const std::size_t ratios = seq.counts.size() - 1;
  const std::size_t used = std::min<std::size_t>(5, ratios);
  double sum = 0.0;
  for (std::size_t k = ratios - used; k < ratios; ++k) {
    sum += std::log(static_cast<double>(seq.counts[k + 1]) / static_cast<double>(seq.counts[k]));
  }
  r.h_estimate = used == 0 ? 0.0 : sum / static_cast<double>(used);
  if (r.h_estimate < 1e-4) r.h_estimate = 0.0;
  r.lap_counts = std::move(seq.counts);
  return r;
}

SweepReport sweep(const UnimodalFamily& fam, double mu_min, double mu_max, int grid_points,
                  int depth, const EntropyOptions& entropy, double tol_c) {
  if (!(mu_min > 0.0 && mu_min < mu_max && mu_max <= 1.0)) {
    throw RangeError("sweep needs 0 < mu_min < mu_max <= 1");
  }
  if (grid_points < 2) throw RangeError("sweep needs at least two grid points");
  if (depth < 1) throw RangeError("sweep depth must be >= 1");

  SweepReport rep;
  rep.family = fam.name();
  rep.depth = depth;
  rep.tol_c = tol_c;
  rep.entropy = entropy;
  const auto n = static_cast<std::size_t>(grid_points);
  rep.mus.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rep.mus[i] = i + 1 == n ? mu_max
                            : mu_min + (mu_max - mu_min) * static_cast<double>(i) /
                                           static_cast<double>(n - 1);
  }
  std::vector<std::optional<Word>> words(n);
  if (entropy.enabled) {
    rep.entropies.assign(n, 0.0);
    rep.lap_depths.assign(n, 0);
  }
  detail::parallel_for(n, [&](std::size_t i) {
    words[i] = kneading_sequence(fam, rep.mus[i], depth, tol_c);
    if (entropy.enabled) {
      const EntropyReport e = entropy_estimate(fam, rep.mus[i], entropy.max_depth, entropy.node_cap);
      rep.entropies[i] = e.h_estimate;
      rep.lap_depths[i] = e.depth_reached;
    }
  });
  rep.words.reserve(n);
  for (auto& w : words) rep.words.push_back(std::move(*w));

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Word& a = rep.words[i];
    const Word& b = rep.words[i + 1];
    if (compare_on_overlap(a, b) == Ordering::Greater) {
      std::size_t d = 0;
      while (a[d] == b[d]) ++d;
      rep.kneading_violations.push_back({i, i + 1, d});
    }
    if (entropy.enabled) {
      const double delta = rep.entropies[i] - rep.entropies[i + 1];
      if (delta > entropy.tolerance) rep.entropy_violations.push_back({i, i + 1, delta});
    }
  }
  return rep;
}

}  // namespace kneading
