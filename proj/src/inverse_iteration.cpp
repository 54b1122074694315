#include "kneading/inverse_iteration.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "kneading/enumerate.hpp"
#include "kneading/errors.hpp"
#include "parallel.hpp"

namespace kneading {

BranchWord parse_branch_word(std::string_view text) {
  BranchWord w;
  w.reserve(text.size());
  for (char ch : text) {
    if (ch == 'L') {
      w.push_back(Branch::L);
    } else if (ch == 'R') {
      w.push_back(Branch::R);
    } else {
      throw ParseError(std::string("invalid branch symbol '") + ch + "' (expected L or R)");
    }
  }
  return w;
}

std::string format_branch_word(const BranchWord& w) {
  std::string out;
  for (Branch b : w) out.push_back(to_char(b));
  return out;
}

BranchWord branches_of(const Word& w) {
  if (!w.is_terminal()) throw PreconditionError("word \"" + w.str() + "\" does not end in C");
  BranchWord out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    out.push_back(w[i] == Symbol::L ? Branch::L : Branch::R);
  }
  return out;
}

double g_eval(const LevelFunctionSpec& spec, double mu) {
  if (!(mu > 0.0 && mu <= 1.0)) throw RangeError("level function needs mu in (0, 1]");
  double y = spec.family.c();
  for (auto it = spec.word.rbegin(); it != spec.word.rend(); ++it) {
    y = inverse_branch(spec.family, mu, *it, y);
  }
  return y;
}

double level_residual(const LevelFunctionSpec& spec, double mu) { return g_eval(spec, mu) - mu; }

double sigma_compat_check(const LevelFunctionSpec& spec, double mu, std::size_t k) {
  if (k > spec.word.size()) throw RangeError("shift count exceeds word length");
  const double start = g_eval(spec, mu);
  LevelFunctionSpec shifted{spec.family,
                            BranchWord(spec.word.begin() + static_cast<std::ptrdiff_t>(k), spec.word.end())};
  return std::abs(iterate(spec.family, mu, start, static_cast<int>(k)) - g_eval(shifted, mu));
}

namespace {

std::optional<double> try_residual(const LevelFunctionSpec& spec, double mu) {
  try {
    return level_residual(spec, mu);
  } catch (const DomainViolation&) {
    return std::nullopt;
  }
}

struct FixedPoint {
  double mu = 0.0;
  double width = 0.0;
  double residual = 0.0;
};

// Bisection for h(mu) = g_w(mu) - mu on (lb, 1]. A left end with h > 0 is
// found by probing lb + (1 - lb) 2^-k; h(1) < 0 always holds for a valid
// family because g_w maps into (0, 1).
FixedPoint bisect_fixed_point(const LevelFunctionSpec& spec, double lb, double tol_c) {
  const std::string label = "\"" + format_branch_word(spec.word) + "C\"";
  double hi = 1.0;
  std::optional<double> h_hi = try_residual(spec, hi);
  if (!h_hi || !(*h_hi < 0.0)) {
    throw SolveFailure("no sign change for " + label + ": h(1) is not negative");
  }
  std::optional<double> lo;
  double h_lo = 0.0;
  for (int k = 1; k <= 60; ++k) {
    const double m = lb + std::ldexp(1.0 - lb, -k);
    if (m <= lb) break;
    const auto h = try_residual(spec, m);
    if (!h) continue;
    if (*h > 0.0) {
      lo = m;
      h_lo = *h;
      break;
    }
    if (*h < 0.0) {
      hi = m;
      h_hi = h;
    }
  }
  if (!lo) throw SolveFailure("no sign change for " + label + " above the domain bound");

  double a = *lo;
  double b = hi;
  double ha = h_lo;
  double hb = *h_hi;
  for (int it = 0; it < 400; ++it) {
    if (b - a <= kBracketWidth && std::min(std::abs(ha), std::abs(hb)) < kLevelResidualTolerance) {
      break;
    }
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const auto hm = try_residual(spec, mid);
    if (!hm || *hm > 0.0) {
      a = mid;
      ha = hm.value_or(ha);
    } else if (*hm < 0.0) {
      b = mid;
      hb = *hm;
    } else {
      a = b = mid;
      ha = hb = 0.0;
      break;
    }
  }
  FixedPoint fp;
  fp.width = b - a;
  if (std::abs(ha) <= std::abs(hb)) {
    fp.mu = a;
    fp.residual = ha;
  } else {
    fp.mu = b;
    fp.residual = hb;
  }
  if (!(std::abs(fp.residual) < kLevelResidualTolerance)) {
    std::ostringstream msg;
    msg.precision(3);
    msg << "bisection for " << label << " stalled with |h| = " << std::abs(fp.residual);
    throw SolveFailure(msg.str());
  }
  if (fp.mu - lb < tol_c) {
    throw SolveFailure("root for " + label + " lies on the domain boundary");
  }
  return fp;
}

// True when g_w is defined just above lb and h is positive there.
bool opens_positive(const LevelFunctionSpec& spec, double lb) {
  const double probe = lb + 1e-9;
  if (probe > 1.0) return false;
  const auto h = try_residual(spec, probe);
  return h && *h > 0.0;
}

}  // namespace

double domain_boundary_scan(const LevelFunctionSpec& spec) {
  const double c = spec.family.c();
  double mu = 1.0;
  double step = 0.5 * (1.0 - c);
  while (step > 1e-15) {
    const double cand = mu - step;
    // mu = c is an isolated point of every domain (all branches collapse to c).
    if (cand > c && try_residual(spec, cand)) {
      mu = cand;
    } else {
      step *= 0.5;
    }
  }
  return mu;
}

double domain_lower_bound(const LevelFunctionSpec& spec) {
  if (spec.word.empty()) throw PreconditionError("domain_lower_bound needs a nonempty word");
  if (spec.word.size() == 1) return spec.family.c();

  LevelFunctionSpec prefix{spec.family, BranchWord(spec.word.begin(), spec.word.end() - 1)};
  try {
    const double lb_prefix = domain_lower_bound(prefix);
    const double mu_prefix = bisect_fixed_point(prefix, lb_prefix, kDefaultTolC).mu;
    if (opens_positive(spec, mu_prefix)) return mu_prefix;
  } catch (const SolveFailure&) {
    // prefix is not the word of a superstable orbit; fall through to the scan
  }
  return domain_boundary_scan(spec);
}

SuperstableRecord solve_superstable(const UnimodalFamily& fam, const Word& w, double tol_c) {
  if (!w.is_terminal()) throw PreconditionError("word \"" + w.str() + "\" does not end in C");
  if (const std::size_t k = first_non_dominated_shift(w); k != 0) {
    throw PreconditionError("word \"" + w.str() + "\" is not shift-maximal (shift " +
                            std::to_string(k) + " is not smaller)");
  }
  SuperstableRecord rec{w, fam.c(), 0.0, 0.0};
  LevelFunctionSpec spec{fam, branches_of(w)};
  if (!spec.word.empty()) {
    const double lb = domain_lower_bound(spec);
    const FixedPoint fp = bisect_fixed_point(spec, lb, tol_c);
    rec.mu_star = fp.mu;
    rec.bracket_width = fp.width;
  }
  rec.residual =
      std::abs(iterate(fam, rec.mu_star, fam.c(), static_cast<int>(w.size())) - fam.c());
  if (!(rec.residual < kOrbitResidualTolerance)) {
    std::ostringstream msg;
    msg.precision(3);
    msg << "superstable check failed for \"" << w.str() << "\": |f^n(c) - c| = " << rec.residual;
    throw InvariantError(msg.str());
  }
  return rec;
}

std::vector<SuperstableRecord> superstable_table(const UnimodalFamily& fam, int n_max) {
  if (n_max < 1 || n_max > 12) throw RangeError("superstable_table needs 1 <= n_max <= 12");
  std::vector<Word> words;
  for (int n = 1; n <= n_max; ++n) {
    auto census = enumerate_kneading(n);
    for (auto& w : census.enumerated) words.push_back(std::move(w));
  }
  std::vector<std::optional<SuperstableRecord>> solved(words.size());
  detail::parallel_for(words.size(), [&](std::size_t i) {
    try {
      solved[i] = solve_superstable(fam, words[i]);
    } catch (const SolveFailure& e) {
      throw SolveFailure(std::string(e.what()) + " [word " + words[i].str() + "]");
    }
  });
  std::vector<SuperstableRecord> table;
  table.reserve(words.size());
  for (auto& r : solved) table.push_back(std::move(*r));
  std::stable_sort(table.begin(), table.end(),
                   [](const SuperstableRecord& a, const SuperstableRecord& b) {
                     return a.mu_star < b.mu_star;
                   });
  return table;
}

std::vector<std::pair<std::size_t, std::size_t>> order_inversions(
    const std::vector<SuperstableRecord>& table) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i + 1 < table.size(); ++i) {
    if (compare_parity_lex(table[i].word, table[i + 1].word) != Ordering::Less) {
      out.emplace_back(i, i + 1);
    }
  }
  return out;
}

double realize_ivt(const UnimodalFamily& fam, const Word& w, double mu1, double mu2, int depth,
                   double tol_c) {
  if (!w.is_terminal()) throw PreconditionError("word \"" + w.str() + "\" does not end in C");
  if (!is_shift_maximal(w)) throw PreconditionError("word \"" + w.str() + "\" is not shift-maximal");
  if (!(mu1 < mu2) || !(mu1 >= 0.0) || !(mu2 <= 1.0)) {
    throw PreconditionError("realize_ivt needs 0 <= mu1 < mu2 <= 1");
  }
  if (depth < static_cast<int>(w.size())) {
    throw PreconditionError("depth must be at least the word length");
  }
  const Word k1 = kneading_sequence(fam, mu1, depth, tol_c);
  const Word k2 = kneading_sequence(fam, mu2, depth, tol_c);
  if (compare_parity_lex(k1, w) != Ordering::Less || compare_parity_lex(w, k2) != Ordering::Less) {
    throw PreconditionError("K(mu1) = " + k1.str() + " < " + w.str() + " < K(mu2) = " + k2.str() +
                            " does not hold");
  }
  double a = mu1;
  double b = mu2;
  while (b - a > 1e-14) {
    const double mid = 0.5 * (a + b);
    const Word k = kneading_sequence(fam, mid, depth, tol_c);
    switch (compare_parity_lex(k, w)) {
      case Ordering::Equal:
        return mid;
      case Ordering::Less:
        a = mid;
        break;
      case Ordering::Greater:
        b = mid;
        break;
    }
  }
  throw SolveFailure("bracket collapsed without reaching kneading sequence " + w.str());
}

double schwarzian_composed_inverse(const UnimodalFamily& fam, double mu, const BranchWord& w,
                                   double y) {
  // Jet (value, first, second, third derivative) of the composition so far.
  double v = y, j1 = 1.0, j2 = 0.0, j3 = 0.0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const double x = inverse_branch(fam, mu, *it, v);
    const double p1 = mu * fam.df(x);
    if (x == fam.c() || p1 == 0.0) throw SingularPoint("composed inverse hits the critical point");
    const double p2 = mu * fam.d2f(x);
    const double p3 = mu * fam.d3f(x);
    // Derivatives of the inverse branch at v.
    const double q1 = 1.0 / p1;
    const double q2 = -p2 * q1 * q1 * q1;
    const double q3 = -p3 * std::pow(q1, 4) + 3.0 * p2 * p2 * std::pow(q1, 5);
    const double n1 = q1 * j1;
    const double n2 = q2 * j1 * j1 + q1 * j2;
    const double n3 = q3 * j1 * j1 * j1 + 3.0 * q2 * j1 * j2 + q1 * j3;
    v = x;
    j1 = n1;
    j2 = n2;
    j3 = n3;
  }
  const double r = j2 / j1;
  return j3 / j1 - 1.5 * r * r;
}

}  // namespace kneading
