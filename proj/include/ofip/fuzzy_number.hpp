#pragma once

#include <functional>
#include <variant>

#include "ofip/ordered_interval.hpp"

namespace ofip {

enum class CutKind { Empty, Bounded, WholeLine };

// Level set {x : membership(x) >= level}. The constant family with level
// above the threshold yields the whole real line, which has no bounded
// canonical form, hence the three-way kind.
struct AlphaCut {
  double level = 1.0;
  CutKind kind = CutKind::Empty;
  CanonicalInterval interval;  // meaningful only when kind == Bounded

  bool contains(double x) const {
    switch (kind) {
      case CutKind::Empty: return false;
      case CutKind::WholeLine: return true;
      case CutKind::Bounded: return interval.contains(x);
    }
    return false;
  }
};

// A membership function R -> [0,1]. Three families support exact alpha-cut
// extraction; arbitrary callables can only be evaluated pointwise.
class FuzzyNumber {
 public:
  static FuzzyNumber indicator_on(const OrderedInterval& support);
  static FuzzyNumber triangular(double left, double peak, double right);
  static FuzzyNumber constant(double level);
  static FuzzyNumber from_callable(std::function<double(double)> fn);

  double membership(double x) const;

  // Exact cut for the indicator/triangular/constant families. Throws
  // std::invalid_argument for alpha outside (0,1] and std::domain_error for
  // the callable family.
  AlphaCut alpha_cut(double alpha) const;

  bool exact_cuts() const;

 private:
  struct Indicator {
    CanonicalInterval support;
  };
  struct Triangular {
    double left, peak, right;
  };
  struct Constant {
    double level;
  };
  struct Callable {
    std::function<double(double)> fn;
  };

  using Descriptor = std::variant<Indicator, Triangular, Constant, Callable>;

  explicit FuzzyNumber(Descriptor d) : desc_(std::move(d)) {}

  Descriptor desc_;
};

}  // namespace ofip
