#pragma once

namespace steiner {

// Relative tolerance for geometric residuals. Comparisons scale it by the
// largest length in play (usually the outer parent radius R).
struct Tolerance {
  double relative = 1e-9;

  double scaled(double length) const { return relative * (length > 1.0 ? length : 1.0); }
};

}  // namespace steiner
