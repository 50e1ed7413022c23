#pragma once

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "ofip/classical_space.hpp"
#include "ofip/fuzzy_number.hpp"
#include "ofip/ordered_interval.hpp"

namespace ofip {

// Level-indexed constant pair (lower, upper), evaluated on a finite sorted
// grid in (0,1]. Both values must be finite and strictly positive at every
// grid point; simplified() reports whether lower <= upper throughout, the
// ordered regime under which the two-sided bounds below are proved.
class AlphaProfile {
 public:
  static AlphaProfile constant(double lower, double upper, std::vector<double> grid);
  // value(alpha) = base + slope * alpha for each side.
  static AlphaProfile affine(double lower_base, double lower_slope, double upper_base,
                             double upper_slope, std::vector<double> grid);
  // Values aligned with the grid; evaluation only at grid points.
  static AlphaProfile table(std::vector<double> grid, std::vector<double> lower,
                            std::vector<double> upper);

  double lower(double alpha) const { return lower_(alpha); }
  double upper(double alpha) const { return upper_(alpha); }
  const std::vector<double>& grid() const { return grid_; }
  bool simplified() const { return simplified_; }

  // max over the grid of upper/lower; the uniform constant of the
  // global-bound results (>= 1 in simplified form).
  double global_ratio_bound() const;

  // Pointwise square root (profile of a norm derived from an inner product).
  AlphaProfile sqrt_profile() const;

 private:
  AlphaProfile(std::function<double(double)> lower, std::function<double(double)> upper,
               std::vector<double> grid);

  std::function<double(double)> lower_;
  std::function<double(double)> upper_;
  std::vector<double> grid_;
  bool simplified_ = false;
};

// Selects where in the admissible band a realization's magnitude sits
// (t in [0,1]) and its phase (in [0,2pi)).
struct MixingFunction {
  std::function<double(double, const Vector&, const Vector&)> t;
  std::function<double(double, const Vector&, const Vector&)> phase;

  static MixingFunction constant(double t, double phase = 0.0);
  static MixingFunction affine_in_alpha(double t_base, double t_slope, double phase = 0.0);
  // Deterministic pseudo-random function of (alpha, x, y) for the given seed.
  static MixingFunction hashed(std::uint64_t seed);
};

// Membership attached to a triple: either the indicator matched per-pair to
// the triple's own band, or an explicit fuzzy number evaluated globally at
// the modulus (which may disagree with the band; that is how violations are
// expressed).
struct MatchingIndicator {};
using MembershipDescriptor = std::variant<MatchingIndicator, FuzzyNumber>;

// Tolerance used when testing band membership; realizations attain the band
// endpoints exactly, so the strict containment test needs float headroom.
inline constexpr double kBandRelTolerance = 1e-12;

class FuzzyInnerProductTriple {
 public:
  using ValueFn = std::function<Complex(double, const Vector&, const Vector&)>;

  FuzzyInnerProductTriple(ValueFn value, ClassicalInnerProduct base1, ClassicalInnerProduct base2,
                          AlphaProfile profile, MembershipDescriptor membership);

  Complex value(double alpha, const Vector& x, const Vector& y) const;

  const ClassicalInnerProduct& base1() const { return base1_; }
  const ClassicalInnerProduct& base2() const { return base2_; }
  const AlphaProfile& profile() const { return profile_; }

  // One base and an ordered profile: the regime of the inequality suite.
  bool simplified() const;

  // The admissible band with endpoint labels
  // (lower(alpha) |<x,y>'|, upper(alpha) |<x,y>''|); labels may be unordered.
  OrderedInterval band(double alpha, const Vector& x, const Vector& y) const;

  double membership(double alpha, const Vector& x, const Vector& y, double magnitude) const;

 private:
  ValueFn value_;
  ClassicalInnerProduct base1_;
  ClassicalInnerProduct base2_;
  AlphaProfile profile_;
  MembershipDescriptor membership_;
};

class FuzzyNormTriple {
 public:
  using ValueFn = std::function<Complex(double, const Vector&)>;

  FuzzyNormTriple(ValueFn value, ClassicalNorm base1, ClassicalNorm base2, AlphaProfile profile,
                  MembershipDescriptor membership);

  Complex value(double alpha, const Vector& x) const;

  const ClassicalNorm& base1() const { return base1_; }
  const ClassicalNorm& base2() const { return base2_; }
  const AlphaProfile& profile() const { return profile_; }
  bool simplified() const;

  OrderedInterval band(double alpha, const Vector& x) const;
  double membership(double alpha, const Vector& x, double magnitude) const;

 private:
  ValueFn value_;
  ClassicalNorm base1_;
  ClassicalNorm base2_;
  AlphaProfile profile_;
  MembershipDescriptor membership_;
};

// value = [lower + t (upper - lower)] e^{i phase} <x,y>'. The magnitude lies
// in the band by construction; requires an ordered profile.
FuzzyInnerProductTriple make_scaled_fip(ClassicalInnerProduct base, AlphaProfile profile,
                                        MixingFunction mix);

// |value| = (1-t) lower |<x,y>'| + t upper |<x,y>''|: a convex combination of
// the band's endpoint labels, hence contained even when they are unordered.
FuzzyInnerProductTriple make_general_fip(ClassicalInnerProduct base1, ClassicalInnerProduct base2,
                                         AlphaProfile profile, MixingFunction mix);

// Deliberately out-of-band triple (magnitude 2 upper |<x,y>'|) whose
// membership claims full inclusion; used for detection-power testing.
FuzzyInnerProductTriple make_adversarial_fip(ClassicalInnerProduct base, AlphaProfile profile);

// Whether the membership condition and band containment agree at (alpha,x,y).
bool defining_predicate(const FuzzyInnerProductTriple& fip, double alpha, const Vector& x,
                        const Vector& y, double rel_tol = kBandRelTolerance);

// norm value = principal sqrt of <x,x>_alpha; bases become induced norms and
// the profile is square-rooted.
FuzzyNormTriple derive_norm_triple(const FuzzyInnerProductTriple& fip);

// max over the grid of upper/lower for the triple's profile.
double global_bound(const AlphaProfile& profile);

// ---- Built-in R^2 example norm -------------------------------------------
//
// Q(alpha,x) = sqrt(9 a^4 n2^2 + 5 a^2 (1-a^2) n2 n3)
//            + i sqrt(4 (1-a^2)^2 n3^2 + 7 a^2 (1-a^2) n2 n3)
// with n2 = ||x||_2, n3 = ||x||_3. The Corrected form squares the (1-a^2)
// coefficient in the second radicand so that |Q| == 3 a^2 n2 + 2 (1-a^2) n3
// holds identically; Verbatim keeps the unsquared coefficient for comparison.
enum class ExampleForm { Corrected, Verbatim };

Complex example_norm_r2(double alpha, const Vector& x, ExampleForm form = ExampleForm::Corrected);

// 3 a^2 ||x||_2 + 2 (1-a^2) ||x||_3, the magnitude identity target.
double example_norm_identity(double alpha, const Vector& x);

// Band [3 ||x||_2, 2 ||x||_3]_o; labels are typically unordered.
OrderedInterval example_norm_band(const Vector& x);

// The example norm as a simplified-form triple over ||.||_2, with
// lower(a) = 3 a^2 + 2^{5/6} (1-a^2) and upper(a) = 3 a^2 + 2 (1-a^2)
// (the extreme ratios of ||x||_3 / ||x||_2 over R^2).
FuzzyNormTriple example_norm_triple(std::vector<double> grid);

}  // namespace ofip
