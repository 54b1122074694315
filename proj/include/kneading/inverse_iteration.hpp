#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kneading/family.hpp"
#include "kneading/words.hpp"

namespace kneading {

using BranchWord = std::vector<Branch>;

// "RLL" -> {R, L, L}. ParseError on anything other than L or R (empty is fine).
BranchWord parse_branch_word(std::string_view text);
std::string format_branch_word(const BranchWord& w);

// The branch part of a C-terminated word: "RLC" -> {R, L}. PreconditionError
// if w does not end in C.
BranchWord branches_of(const Word& w);

// Level function g_w(mu): the inverse branches of mu f composed along w and
// evaluated at c, g_{w1..wn} = (mu f)^{-1}_{w1} o ... o (mu f)^{-1}_{wn}(c).
struct LevelFunctionSpec {
  UnimodalFamily family;
  BranchWord word;
};

// Applies the branches right to left starting from c. DomainViolation when an
// intermediate target exceeds mu.
double g_eval(const LevelFunctionSpec& spec, double mu);

// h(mu) = g_w(mu) - mu, whose zeros are the superstable parameters.
double level_residual(const LevelFunctionSpec& spec, double mu);

// |f^k(g_w(mu)) - g_{sigma^k w}(mu)| for 0 <= k <= |w|.
double sigma_compat_check(const LevelFunctionSpec& spec, double mu, std::size_t k);

// Lower end of the bracket (mu_lb, 1] on which g_w is defined and h changes
// sign once, positive just above mu_lb. For |w| = 1 this is c. For longer
// words the superstable parameter of the prefix w' (w = w' tau) is used when
// it satisfies those conditions; otherwise the boundary of the component of
// dom(g_w) containing 1, found by a step-halving scan.
double domain_lower_bound(const LevelFunctionSpec& spec);

// Boundary of the connected part of dom(g_w) that contains mu = 1.
double domain_boundary_scan(const LevelFunctionSpec& spec);

struct SuperstableRecord {
  Word word;
  double mu_star = 0.0;
  double residual = 0.0;       // |f^{|w|}_{mu*}(c) - c|
  double bracket_width = 0.0;  // final bisection interval
};

inline constexpr double kBracketWidth = 1e-13;
inline constexpr double kLevelResidualTolerance = 1e-12;
inline constexpr double kOrbitResidualTolerance = 1e-8;

// Superstable parameter for a shift-maximal word ending in C: the unique mu*
// in (domain_lower_bound, 1] with g_w(mu*) = mu*, found by bisection on h.
// PreconditionError for words that are not C-terminated or not shift-maximal;
// SolveFailure when no sign change exists or the root sits on the bracket
// boundary; InvariantError when |f^{|w|}(c) - c| >= 1e-8 at the root.
SuperstableRecord solve_superstable(const UnimodalFamily& fam, const Word& w,
                                    double tol_c = kDefaultTolC);

// All superstable parameters for kneading words of length 1..n_max, sorted by
// mu*. RangeError unless 1 <= n_max <= 12.
std::vector<SuperstableRecord> superstable_table(const UnimodalFamily& fam, int n_max);

// Adjacent pairs (i, i+1) of a mu-sorted table whose words are not in
// increasing parity-lexicographic order. Empty when both orders agree.
std::vector<std::pair<std::size_t, std::size_t>> order_inversions(
    const std::vector<SuperstableRecord>& table);

// Constructive intermediate value theorem: given
// K(mu1) < w < K(mu2) (at `depth` symbols), bisects the parameter keeping the
// sandwich until K(mid) equals w. PreconditionError if the sandwich fails;
// SolveFailure when the bracket collapses below 1e-14.
double realize_ivt(const UnimodalFamily& fam, const Word& w, double mu1, double mu2, int depth,
                   double tol_c = kDefaultTolC);

// Schwarzian of the composed inverse branch
// (mu f)^{-1}_{w1} o ... o (mu f)^{-1}_{wn} at y, computed by propagating the
// first three derivatives through the chain rule. DomainViolation outside the
// domain, SingularPoint where a preimage hits c.
double schwarzian_composed_inverse(const UnimodalFamily& fam, double mu, const BranchWord& w,
                                   double y);

}  // namespace kneading
