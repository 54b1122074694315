#include "kneading/family.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <numbers>
#include <sstream>

#include "kneading/errors.hpp"

namespace kneading {

char to_char(Branch b) noexcept { return b == Branch::L ? 'L' : 'R'; }

namespace {

constexpr int kValidationSamples = 1000;
constexpr int kMaxBisectionIterations = 200;

std::string describe(const std::string& name, const std::string& what) {
  return "family '" + name + "': " + what;
}

void validate(const FamilyDefinition& def) {
  if (!def.value || !def.d1 || !def.d2 || !def.d3) {
    throw InvariantError(describe(def.name, "value and three derivative oracles are required"));
  }
  const double c = def.critical_point;
  if (!(c > 0.0 && c < 1.0)) {
    throw InvariantError(describe(def.name, "critical point must lie in (0, 1)"));
  }
  auto check_value = [&](double x, double expected, const char* label) {
    const double v = def.value(x);
    if (!(std::abs(v - expected) <= kValidationTolerance)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << label << " = " << v << ", expected " << expected;
      throw InvariantError(describe(def.name, msg.str()));
    }
  };
  check_value(0.0, 0.0, "f(0)");
  check_value(1.0, 0.0, "f(1)");
  check_value(c, 1.0, "f(c)");

  std::vector<double> xs;
  for (int i = 0; i <= kValidationSamples; ++i) {
    xs.push_back(static_cast<double>(i) / kValidationSamples);
  }
  xs.push_back(c);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (const RealMap* d : {&def.d1, &def.d2, &def.d3}) {
      if (!std::isfinite((*d)(xs[i]))) {
        throw InvariantError(describe(def.name, "derivative oracle is not finite on [0, 1]"));
      }
    }
    if (i == 0) continue;
    const double a = def.value(xs[i - 1]);
    const double b = def.value(xs[i]);
    if (xs[i] <= c && !(b > a)) {
      throw InvariantError(describe(def.name, "f is not strictly increasing on [0, c]"));
    }
    if (xs[i - 1] >= c && !(b < a)) {
      throw InvariantError(describe(def.name, "f is not strictly decreasing on [c, 1]"));
    }
  }

  for (const auto& [inv, lo, hi] :
       {std::tuple{&def.inverse_left, 0.0, c}, std::tuple{&def.inverse_right, c, 1.0}}) {
    if (!*inv) continue;
    for (int i = 0; i <= 100; ++i) {
      const double t = i / 100.0;
      const double x = (*inv)(t);
      if (!(x >= lo - kValidationTolerance && x <= hi + kValidationTolerance) ||
          std::abs(def.value(x) - t) > 1e-10) {
        throw InvariantError(describe(def.name, "closed-form inverse branch disagrees with f"));
      }
    }
  }
}

double bisect_inverse(const FamilyDefinition& def, Branch b, double t) {
  double lo = b == Branch::L ? 0.0 : def.critical_point;
  double hi = b == Branch::L ? def.critical_point : 1.0;
  // On [0, c] f rises, on [c, 1] it falls; keep the invariant f(lo) <= t <= f(hi)
  // for L and f(lo) >= t >= f(hi) for R.
  for (int it = 0; it < kMaxBisectionIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double v = def.value(mid);
    const bool go_right = b == Branch::L ? v < t : v > t;
    (go_right ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

UnimodalFamily::UnimodalFamily(FamilyDefinition def) {
  validate(def);
  def_ = std::make_shared<const FamilyDefinition>(std::move(def));
}

bool UnimodalFamily::has_closed_form_inverse(Branch b) const noexcept {
  return b == Branch::L ? static_cast<bool>(def_->inverse_left)
                        : static_cast<bool>(def_->inverse_right);
}

double UnimodalFamily::f_inverse(Branch b, double t) const {
  const RealMap& closed = b == Branch::L ? def_->inverse_left : def_->inverse_right;
  if (closed) return closed(t);
  return bisect_inverse(*def_, b, t);
}

const UnimodalFamily& logistic_family() {
  static const UnimodalFamily fam{FamilyDefinition{
      .name = "logistic",
      .critical_point = 0.5,
      .value = [](double x) { return 4.0 * x * (1.0 - x); },
      .d1 = [](double x) { return 4.0 - 8.0 * x; },
      .d2 = [](double) { return -8.0; },
      .d3 = [](double) { return 0.0; },
      // t / (2 (1 + sqrt(1 - t))) is (1 - sqrt(1 - t)) / 2 without cancellation.
      .inverse_left = [](double t) { return t / (2.0 * (1.0 + std::sqrt(1.0 - t))); },
      .inverse_right = [](double t) { return 0.5 * (1.0 + std::sqrt(1.0 - t)); },
  }};
  return fam;
}

const UnimodalFamily& sine_family() {
  using std::numbers::pi;
  static const UnimodalFamily fam{FamilyDefinition{
      .name = "sine",
      .critical_point = 0.5,
      .value = [](double x) { return std::sin(pi * x); },
      .d1 = [](double x) { return pi * std::cos(pi * x); },
      .d2 = [](double x) { return -pi * pi * std::sin(pi * x); },
      .d3 = [](double x) { return -pi * pi * pi * std::cos(pi * x); },
      .inverse_left = [](double t) { return std::asin(t) / pi; },
      .inverse_right = [](double t) { return 1.0 - std::asin(t) / pi; },
  }};
  return fam;
}

FamilyRegistry FamilyRegistry::with_builtins() {
  FamilyRegistry r;
  r.add(logistic_family());
  r.add(sine_family());
  return r;
}

void FamilyRegistry::add(UnimodalFamily family) {
  const std::string key = family.name();
  families_.insert_or_assign(key, std::move(family));
}

const UnimodalFamily& FamilyRegistry::get(std::string_view name) const {
  auto it = families_.find(name);
  if (it == families_.end()) throw RangeError("unknown family '" + std::string(name) + "'");
  return it->second;
}

bool FamilyRegistry::contains(std::string_view name) const {
  return families_.find(name) != families_.end();
}

std::vector<std::string> FamilyRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : families_) out.push_back(k);
  return out;
}

double eval(const UnimodalFamily& fam, double mu, double x) {
  if (!in_unit(mu) || !in_unit(x)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "eval needs mu and x in [0, 1], got mu=" << mu << " x=" << x;
    throw RangeError(msg.str());
  }
  return mu * fam.f(x);
}

double iterate(const UnimodalFamily& fam, double mu, double x, int n) {
  if (n < 0) throw RangeError("iteration count must be >= 0");
  for (int i = 0; i < n; ++i) x = eval(fam, mu, x);
  return x;
}

double inverse_branch(const UnimodalFamily& fam, double mu, Branch side, double y) {
  if (!(mu > 0.0 && mu <= 1.0)) throw RangeError("inverse_branch needs mu in (0, 1]");
  if (!(y >= 0.0)) throw RangeError("inverse_branch needs y >= 0");
  if (y > mu) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "target " << y << " exceeds mu=" << mu << "; no preimage on branch " << to_char(side);
    throw DomainViolation(msg.str());
  }
  return fam.f_inverse(side, y / mu);
}

Word itinerary(const UnimodalFamily& fam, double mu, double x, int depth, double tol_c) {
  if (depth < 1) throw RangeError("itinerary depth must be >= 1");
  if (!(tol_c > 0.0)) throw RangeError("tol_c must be > 0");
  const double c = fam.c();
  std::vector<Symbol> symbols;
  symbols.reserve(static_cast<std::size_t>(depth));
  for (int k = 0; k < depth; ++k) {
    if (std::abs(x - c) < tol_c) {
      symbols.push_back(Symbol::C);
      break;
    }
    symbols.push_back(x < c ? Symbol::L : Symbol::R);
    if (k + 1 < depth) x = eval(fam, mu, x);
  }
  return Word(std::move(symbols));
}

Word kneading_sequence(const UnimodalFamily& fam, double mu, int depth, double tol_c) {
  return itinerary(fam, mu, mu, depth, tol_c);
}

double schwarzian(const UnimodalFamily& fam, double /*mu*/, double x) {
  const double d1 = fam.df(x);
  if (x == fam.c() || d1 == 0.0) {
    throw SingularPoint("Schwarzian derivative is undefined at a critical point");
  }
  const double r2 = fam.d2f(x) / d1;
  return fam.d3f(x) / d1 - 1.5 * r2 * r2;
}

double schwarzian_inverse_branch(const UnimodalFamily& fam, double mu, Branch side, double y) {
  const double x = inverse_branch(fam, mu, side, y);
  const double slope = mu * fam.df(x);
  if (x == fam.c() || slope == 0.0) {
    throw SingularPoint("inverse branch is singular at the critical value");
  }
  return -schwarzian(fam, mu, x) / (slope * slope);
}

std::vector<double> default_mu_grid(const UnimodalFamily& fam, int count) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  const double c = fam.c();
  for (int i = 1; i <= count; ++i) grid.push_back(c + (1.0 - c) * i / count);
  return grid;
}

std::vector<double> default_x_grid(int count) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) grid.push_back(static_cast<double>(j) / (count - 1));
  return grid;
}

ClassCReport check_class_C(const UnimodalFamily& fam, const std::vector<double>& mu_grid,
                           const std::vector<double>& x_grid) {
  if (mu_grid.empty() || x_grid.empty()) throw RangeError("class-C grids must be nonempty");
  for (double mu : mu_grid) {
    if (!(mu > 0.0 && mu <= 1.0)) throw RangeError("class-C mu grid must lie in (0, 1]");
  }
  for (double x : x_grid) {
    if (!in_unit(x)) throw RangeError("class-C x grid must lie in [0, 1]");
  }

  ClassCReport report;
  report.family = fam.name();
  report.mu_samples = mu_grid.size();
  report.x_samples = x_grid.size();

  // 1. unique interior fixed point
  for (double mu : mu_grid) {
    int changes = 0;
    int last_sign = 0;
    for (double x : x_grid) {
      if (x <= 0.0 || x >= 1.0) continue;
      const double g = eval(fam, mu, x) - x;
      const int sign = (g > 0.0) - (g < 0.0);
      if (sign == 0) continue;
      if (last_sign != 0 && sign != last_sign) ++changes;
      last_sign = sign;
    }
    if (changes != 1) {
      report.property1_ok = false;
      report.witnesses.push_back({1, mu, 0.0, static_cast<double>(changes), std::nullopt});
    }
  }

  // 2. sufficient condition S(f) < 0
  for (double x : x_grid) {
    if (x == fam.c() || fam.df(x) == 0.0) continue;
    const double s = schwarzian(fam, 1.0, x);
    if (!(s < 0.0)) {
      report.property2_sufficient_ok = false;
      report.witnesses.push_back({2, 1.0, x, s, std::nullopt});
    }
  }

  // 3. S of both inverse branches positive
  for (double mu : mu_grid) {
    for (double x : x_grid) {
      if (x >= 1.0) continue;
      const double y = mu * x;
      for (Branch b : {Branch::L, Branch::R}) {
        double s = 0.0;
        try {
          s = schwarzian_inverse_branch(fam, mu, b, y);
        } catch (const SingularPoint&) {
          continue;
        }
        if (!(s > 0.0)) {
          report.property3_ok = false;
          report.witnesses.push_back({3, mu, y, s, b});
        }
      }
    }
  }
  return report;
}

}  // namespace kneading
