#pragma once

// Test-only reference computations. They deliberately avoid the inverse-branch
// machinery so they can check it: superstable parameters come from forward
// iteration of mu f, derivatives from finite differences.

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kneading/family.hpp"

namespace oracle {

inline double forward_iterate(const kneading::UnimodalFamily& fam, double mu, double x, int n) {
  for (int i = 0; i < n; ++i) x = mu * fam.f(x);
  return x;
}

inline double bisect(const std::function<double(double)>& g, double a, double b, int iters = 200) {
  double ga = g(a);
  for (int i = 0; i < iters; ++i) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double gm = g(m);
    if ((gm > 0) == (ga > 0)) {
      a = m;
      ga = gm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Symbols of the forward orbit of mu, terminating with C within tol of c.
inline std::string forward_kneading(const kneading::UnimodalFamily& fam, double mu, int depth,
                                    double tol) {
  std::string out;
  double x = mu;
  for (int k = 0; k < depth; ++k) {
    if (std::abs(x - fam.c()) < tol) {
      out.push_back('C');
      break;
    }
    out.push_back(x < fam.c() ? 'L' : 'R');
    x = mu * fam.f(x);
  }
  return out;
}

// Superstable parameter of `word` (length n, ending in C): scans
// F(mu) = f^n_mu(c) - c on a fine grid of (c, 1], bisects every sign change
// and keeps the root whose forward kneading sequence is `word`.
inline std::optional<double> superstable(const kneading::UnimodalFamily& fam,
                                         const std::string& word, int grid = 20000) {
  const int n = static_cast<int>(word.size());
  const double c = fam.c();
  auto F = [&](double mu) { return forward_iterate(fam, mu, c, n) - c; };
  double prev_mu = c + (1.0 - c) / grid;
  double prev = F(prev_mu);
  for (int i = 2; i <= grid; ++i) {
    const double mu = c + (1.0 - c) * i / grid;
    const double v = F(mu);
    if ((v > 0) != (prev > 0)) {
      const double root = bisect(F, prev_mu, mu);
      if (forward_kneading(fam, root, n, 1e-7) == word) return root;
    }
    prev_mu = mu;
    prev = v;
  }
  return std::nullopt;
}

struct Derivatives {
  double d1, d2, d3;
};

// Central differences of order h^2 for the first three derivatives.
inline Derivatives central_differences(const std::function<double(double)>& g, double x, double h) {
  const double fm2 = g(x - 2 * h), fm1 = g(x - h), f0 = g(x), fp1 = g(x + h), fp2 = g(x + 2 * h);
  return {(fp1 - fm1) / (2 * h), (fp1 - 2 * f0 + fm1) / (h * h),
          (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * h * h * h)};
}

// Schwarzian from central differences at steps h and h/2, Richardson-combined.
inline double schwarzian_fd(const std::function<double(double)>& g, double x, double h) {
  auto at = [&](double step) {
    const Derivatives d = central_differences(g, x, step);
    const double r = d.d2 / d.d1;
    return d.d3 / d.d1 - 1.5 * r * r;
  };
  return (4.0 * at(h / 2) - at(h)) / 3.0;
}

// Brute-force shift-maximal check straight from the order definition, on
// strings, sharing no code with the library comparator.
inline int parity_lex_cmp(const std::string& a, const std::string& b) {
  auto rank = [](char ch) { return ch == 'L' ? 0 : ch == 'C' ? 1 : 2; };
  int rs = 0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) {
      const bool less = rank(a[i]) < rank(b[i]);
      return (less != (rs % 2 == 1)) ? -1 : 1;
    }
    rs += a[i] == 'R';
  }
  return 0;
}

}  // namespace oracle
