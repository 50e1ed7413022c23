#include "ofip/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ofip {

namespace {

void require_level_range(double alpha) {
  if (!(alpha > 0.0) || !(alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in (0,1]");
  }
}

}  // namespace

FuzzyNumber FuzzyNumber::indicator_on(const OrderedInterval& support) {
  return FuzzyNumber(Indicator{support.canonical()});
}

FuzzyNumber FuzzyNumber::triangular(double left, double peak, double right) {
  if (!std::isfinite(left) || !std::isfinite(peak) || !std::isfinite(right)) {
    throw std::invalid_argument("triangular breakpoints must be finite");
  }
  if (!(left <= peak && peak <= right)) {
    throw std::invalid_argument("triangular breakpoints must satisfy left <= peak <= right");
  }
  return FuzzyNumber(Triangular{left, peak, right});
}

FuzzyNumber FuzzyNumber::constant(double level) {
  if (!(level >= 0.0) || !(level <= 1.0)) {
    throw std::invalid_argument("constant membership level must lie in [0,1]");
  }
  return FuzzyNumber(Constant{level});
}

FuzzyNumber FuzzyNumber::from_callable(std::function<double(double)> fn) {
  if (!fn) throw std::invalid_argument("membership callable must be non-empty");
  return FuzzyNumber(Callable{std::move(fn)});
}

double FuzzyNumber::membership(double x) const {
  return std::visit(
      [&](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Indicator>) {
          return d.support.contains(x) ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, Triangular>) {
          if (x < d.left || x > d.right) return 0.0;
          if (x == d.peak) return 1.0;
          if (x < d.peak) return (x - d.left) / (d.peak - d.left);
          return (d.right - x) / (d.right - d.peak);
        } else if constexpr (std::is_same_v<T, Constant>) {
          return d.level;
        } else {
          return std::clamp(d.fn(x), 0.0, 1.0);
        }
      },
      desc_);
}

AlphaCut FuzzyNumber::alpha_cut(double alpha) const {
  require_level_range(alpha);
  return std::visit(
      [&](const auto& d) -> AlphaCut {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Indicator>) {
          return {alpha, CutKind::Bounded, d.support};
        } else if constexpr (std::is_same_v<T, Triangular>) {
          // Closed cut of the piecewise-linear hat: solve membership == alpha
          // on both flanks.
          const double lo = d.left + alpha * (d.peak - d.left);
          const double hi = d.right - alpha * (d.right - d.peak);
          return {alpha, CutKind::Bounded, {lo, hi}};
        } else if constexpr (std::is_same_v<T, Constant>) {
          if (d.level >= alpha) return {alpha, CutKind::WholeLine, {}};
          return {alpha, CutKind::Empty, {}};
        } else {
          throw std::domain_error("exact alpha-cuts are not available for callable membership");
        }
      },
      desc_);
}

bool FuzzyNumber::exact_cuts() const {
  return !std::holds_alternative<Callable>(desc_);
}

}  // namespace ofip
