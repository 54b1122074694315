#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kneading/words.hpp"

namespace kneading {

// Inverse branch selector: L is the preimage in [0, c], R the one in [c, 1].
enum class Branch : unsigned char { L, R };

char to_char(Branch b) noexcept;

using RealMap = std::function<double(double)>;

// Everything needed to define a scaled unimodal map f on [0, 1].
//
// `inverse_left` / `inverse_right`, when supplied, map t in [0, 1] to the
// preimage f^{-1}(t) on [0, c] / [c, 1]. Without them inverse branches fall
// back to monotone bisection.
struct FamilyDefinition {
  std::string name;
  double critical_point = 0.5;
  RealMap value;
  RealMap d1;
  RealMap d2;
  RealMap d3;
  RealMap inverse_left;
  RealMap inverse_right;
};

// Tolerance for f(0) = 0, f(1) = 0 and f(c) = 1 at construction.
inline constexpr double kValidationTolerance = 1e-12;

// Default closeness band for assigning the symbol C in itineraries.
inline constexpr double kDefaultTolC = 1e-9;

// The one-parameter family mu * f with f scaled so that f(0) = f(1) = 0 and
// f(c) = 1. Immutable once built; copies share the definition.
class UnimodalFamily {
 public:
  // Validates the definition (scaling, unimodality on a sample grid, finite
  // derivative oracles). Throws InvariantError on failure.
  explicit UnimodalFamily(FamilyDefinition def);

  const std::string& name() const noexcept { return def_->name; }
  double c() const noexcept { return def_->critical_point; }

  double f(double x) const { return def_->value(x); }
  double df(double x) const { return def_->d1(x); }
  double d2f(double x) const { return def_->d2(x); }
  double d3f(double x) const { return def_->d3(x); }

  bool has_closed_form_inverse(Branch b) const noexcept;
  // Preimage of t under f on branch b (closed form or bisection).
  double f_inverse(Branch b, double t) const;

 private:
  std::shared_ptr<const FamilyDefinition> def_;
};

// f(x) = 4x(1 - x), c = 1/2.
const UnimodalFamily& logistic_family();
// f(x) = sin(pi x), c = 1/2.
const UnimodalFamily& sine_family();

// Name-keyed lookup used by the CLI. Starts with the built-in families;
// further families can be added programmatically.
class FamilyRegistry {
 public:
  static FamilyRegistry with_builtins();

  void add(UnimodalFamily family);
  const UnimodalFamily& get(std::string_view name) const;  // RangeError if unknown
  bool contains(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, UnimodalFamily, std::less<>> families_;
};

// mu * f(x). RangeError unless mu and x lie in [0, 1].
double eval(const UnimodalFamily& fam, double mu, double x);

// n-fold composition of mu * f; n = 0 returns x.
double iterate(const UnimodalFamily& fam, double mu, double x, int n);

// Preimage of y under mu * f on the chosen branch. DomainViolation when
// y > mu; RangeError when mu is outside (0, 1] or y < 0.
double inverse_branch(const UnimodalFamily& fam, double mu, Branch side, double y);

// Symbols of the orbit of x for k = 0 .. depth-1. The word stops at the first
// iterate within tol_c of c, which is recorded as C.
Word itinerary(const UnimodalFamily& fam, double mu, double x, int depth,
               double tol_c = kDefaultTolC);

// Itinerary of the critical value mu = mu f(c).
Word kneading_sequence(const UnimodalFamily& fam, double mu, int depth,
                       double tol_c = kDefaultTolC);

// S(mu f)(x) = f'''/f' - 1.5 (f''/f')^2; mu cancels. SingularPoint where
// f'(x) = 0.
double schwarzian(const UnimodalFamily& fam, double mu, double x);

// Schwarzian of the inverse branch at y, through the pullback identity
// S(phi)(y) = -S(mu f)(x) / (mu f'(x))^2 with x = phi(y).
double schwarzian_inverse_branch(const UnimodalFamily& fam, double mu, Branch side, double y);

struct ClassCWitness {
  int property = 0;  // 1, 2 or 3
  double mu = 0.0;
  double x = 0.0;      // sample point (y for property 3)
  double value = 0.0;  // fixed-point count, S(f)(x) or S(inverse)(y)
  std::optional<Branch> branch;
};

struct ClassCReport {
  std::string family;
  std::size_t mu_samples = 0;
  std::size_t x_samples = 0;
  bool property1_ok = true;
  // Only the sufficient condition S(f) < 0 is checked for property 2.
  bool property2_sufficient_ok = true;
  bool property3_ok = true;
  std::vector<ClassCWitness> witnesses;

  bool all_ok() const noexcept { return property1_ok && property2_sufficient_ok && property3_ok; }
};

// mu_i = c + (1 - c) i / count, i = 1..count.
std::vector<double> default_mu_grid(const UnimodalFamily& fam, int count = 100);
// x_j = j / (count - 1), j = 0..count-1.
std::vector<double> default_x_grid(int count = 201);

// Sampled check of the class conditions:
//   1. mu f(x) - x changes sign exactly once on the interior of x_grid;
//   2. S(f)(x) < 0 on x_grid minus critical points;
//   3. S((mu f)^{-1}) > 0 on both branches at y = mu x, x in x_grid, x < 1.
// Failures are collected as witnesses, never thrown.
ClassCReport check_class_C(const UnimodalFamily& fam, const std::vector<double>& mu_grid,
                           const std::vector<double>& x_grid);

}  // namespace kneading
