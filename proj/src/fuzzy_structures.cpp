#include "ofip/fuzzy_structures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ofip/rng.hpp"

namespace ofip {

namespace {

void validate_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("alpha grid must be non-empty");
  double prev = 0.0;
  for (double a : grid) {
    if (!(a > 0.0) || !(a <= 1.0)) throw std::invalid_argument("alpha grid values must lie in (0,1]");
    if (!(a > prev)) throw std::invalid_argument("alpha grid must be strictly increasing");
    prev = a;
  }
}

std::uint64_t hash_vector(std::uint64_t h, const Vector& v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    h = hash_mix(h, double_bits(v[i].real()));
    h = hash_mix(h, double_bits(v[i].imag()));
  }
  return h;
}

}  // namespace

AlphaProfile::AlphaProfile(std::function<double(double)> lower, std::function<double(double)> upper,
                           std::vector<double> grid)
    : lower_(std::move(lower)), upper_(std::move(upper)), grid_(std::move(grid)) {
  validate_grid(grid_);
  simplified_ = true;
  for (double a : grid_) {
    const double lo = lower_(a);
    const double hi = upper_(a);
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(std::min(lo, hi) > 0.0)) {
      throw std::invalid_argument("profile values must be finite and strictly positive on the grid");
    }
    if (lo > hi) simplified_ = false;
  }
}

AlphaProfile AlphaProfile::constant(double lower, double upper, std::vector<double> grid) {
  return AlphaProfile([lower](double) { return lower; }, [upper](double) { return upper; },
                      std::move(grid));
}

AlphaProfile AlphaProfile::affine(double lower_base, double lower_slope, double upper_base,
                                  double upper_slope, std::vector<double> grid) {
  return AlphaProfile([=](double a) { return lower_base + lower_slope * a; },
                      [=](double a) { return upper_base + upper_slope * a; }, std::move(grid));
}

AlphaProfile AlphaProfile::table(std::vector<double> grid, std::vector<double> lower,
                                 std::vector<double> upper) {
  if (lower.size() != grid.size() || upper.size() != grid.size()) {
    throw std::invalid_argument("table profile value counts must match the grid");
  }
  auto lookup = [grid](const std::vector<double>& values, double alpha) -> double {
    auto it = std::lower_bound(grid.begin(), grid.end(), alpha - 1e-12);
    if (it == grid.end() || std::fabs(*it - alpha) > 1e-12) {
      throw std::invalid_argument("table profile evaluated off its grid");
    }
    return values[static_cast<std::size_t>(it - grid.begin())];
  };
  auto grid_copy = grid;
  return AlphaProfile([lookup, lower](double a) { return lookup(lower, a); },
                      [lookup, upper](double a) { return lookup(upper, a); },
                      std::move(grid_copy));
}

double AlphaProfile::global_ratio_bound() const {
  double m = 0.0;
  for (double a : grid_) m = std::max(m, upper_(a) / lower_(a));
  return m;
}

AlphaProfile AlphaProfile::sqrt_profile() const {
  auto lo = lower_;
  auto hi = upper_;
  return AlphaProfile([lo](double a) { return std::sqrt(lo(a)); },
                      [hi](double a) { return std::sqrt(hi(a)); }, grid_);
}

MixingFunction MixingFunction::constant(double t, double phase) {
  if (!(t >= 0.0) || !(t <= 1.0)) throw std::invalid_argument("mixing t must lie in [0,1]");
  const double ph = std::fmod(std::fmod(phase, 2.0 * std::numbers::pi) + 2.0 * std::numbers::pi,
                              2.0 * std::numbers::pi);
  return {[t](double, const Vector&, const Vector&) { return t; },
          [ph](double, const Vector&, const Vector&) { return ph; }};
}

MixingFunction MixingFunction::affine_in_alpha(double t_base, double t_slope, double phase) {
  const double ph = std::fmod(std::fmod(phase, 2.0 * std::numbers::pi) + 2.0 * std::numbers::pi,
                              2.0 * std::numbers::pi);
  return {[=](double a, const Vector&, const Vector&) {
            return std::clamp(t_base + t_slope * a, 0.0, 1.0);
          },
          [ph](double, const Vector&, const Vector&) { return ph; }};
}

MixingFunction MixingFunction::hashed(std::uint64_t seed) {
  auto digest = [seed](double alpha, const Vector& x, const Vector& y, std::uint64_t tag) {
    std::uint64_t h = splitmix64(seed ^ tag);
    h = hash_mix(h, double_bits(alpha));
    h = hash_vector(h, x);
    h = hash_vector(h, y);
    return h;
  };
  return {[digest](double a, const Vector& x, const Vector& y) {
            return unit_from_hash(digest(a, x, y, 0x74ULL));
          },
          [digest](double a, const Vector& x, const Vector& y) {
            return 2.0 * std::numbers::pi * unit_from_hash(digest(a, x, y, 0x70ULL));
          }};
}

FuzzyInnerProductTriple::FuzzyInnerProductTriple(ValueFn value, ClassicalInnerProduct base1,
                                                 ClassicalInnerProduct base2, AlphaProfile profile,
                                                 MembershipDescriptor membership)
    : value_(std::move(value)),
      base1_(std::move(base1)),
      base2_(std::move(base2)),
      profile_(std::move(profile)),
      membership_(std::move(membership)) {
  if (!value_) throw std::invalid_argument("value function must be non-empty");
}

Complex FuzzyInnerProductTriple::value(double alpha, const Vector& x, const Vector& y) const {
  if (!(alpha > 0.0) || !(alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0,1]");
  return value_(alpha, x, y);
}

bool FuzzyInnerProductTriple::simplified() const {
  return base1_ == base2_ && profile_.simplified();
}

OrderedInterval FuzzyInnerProductTriple::band(double alpha, const Vector& x,
                                              const Vector& y) const {
  return {profile_.lower(alpha) * std::abs(base1_(x, y)),
          profile_.upper(alpha) * std::abs(base2_(x, y))};
}

double FuzzyInnerProductTriple::membership(double alpha, const Vector& x, const Vector& y,
                                           double magnitude) const {
  if (std::holds_alternative<MatchingIndicator>(membership_)) {
    return band(alpha, x, y).contains(magnitude, kBandRelTolerance) ? 1.0 : 0.0;
  }
  return std::get<FuzzyNumber>(membership_).membership(magnitude);
}

FuzzyNormTriple::FuzzyNormTriple(ValueFn value, ClassicalNorm base1, ClassicalNorm base2,
                                 AlphaProfile profile, MembershipDescriptor membership)
    : value_(std::move(value)),
      base1_(std::move(base1)),
      base2_(std::move(base2)),
      profile_(std::move(profile)),
      membership_(std::move(membership)) {
  if (!value_) throw std::invalid_argument("value function must be non-empty");
}

Complex FuzzyNormTriple::value(double alpha, const Vector& x) const {
  if (!(alpha > 0.0) || !(alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0,1]");
  return value_(alpha, x);
}

bool FuzzyNormTriple::simplified() const { return base1_ == base2_ && profile_.simplified(); }

OrderedInterval FuzzyNormTriple::band(double alpha, const Vector& x) const {
  return {profile_.lower(alpha) * base1_(x), profile_.upper(alpha) * base2_(x)};
}

double FuzzyNormTriple::membership(double alpha, const Vector& x, double magnitude) const {
  if (std::holds_alternative<MatchingIndicator>(membership_)) {
    return band(alpha, x).contains(magnitude, kBandRelTolerance) ? 1.0 : 0.0;
  }
  return std::get<FuzzyNumber>(membership_).membership(magnitude);
}

FuzzyInnerProductTriple make_scaled_fip(ClassicalInnerProduct base, AlphaProfile profile,
                                        MixingFunction mix) {
  if (!profile.simplified()) {
    throw std::invalid_argument("scaled realization requires an ordered (simplified) profile");
  }
  auto base_copy = base;
  auto value = [base, profile, mix](double a, const Vector& x, const Vector& y) -> Complex {
    const double lo = profile.lower(a);
    const double hi = profile.upper(a);
    const double factor = lo + mix.t(a, x, y) * (hi - lo);
    return factor * std::polar(1.0, mix.phase(a, x, y)) * base(x, y);
  };
  return {std::move(value), base_copy, base_copy, std::move(profile), MatchingIndicator{}};
}

FuzzyInnerProductTriple make_general_fip(ClassicalInnerProduct base1, ClassicalInnerProduct base2,
                                         AlphaProfile profile, MixingFunction mix) {
  if (!base1.is_standard() && !base2.is_standard() &&
      base1.weights().size() != base2.weights().size()) {
    throw std::invalid_argument("base inner products act on different dimensions");
  }
  auto b1 = base1;
  auto b2 = base2;
  auto value = [base1, base2, profile, mix](double a, const Vector& x, const Vector& y) -> Complex {
    const double t = mix.t(a, x, y);
    const double m = (1.0 - t) * profile.lower(a) * std::abs(base1(x, y)) +
                     t * profile.upper(a) * std::abs(base2(x, y));
    return std::polar(m, mix.phase(a, x, y));
  };
  return {std::move(value), std::move(b1), std::move(b2), std::move(profile), MatchingIndicator{}};
}

FuzzyInnerProductTriple make_adversarial_fip(ClassicalInnerProduct base, AlphaProfile profile) {
  auto base_copy = base;
  auto value = [base, profile](double a, const Vector& x, const Vector& y) -> Complex {
    return {2.0 * profile.upper(a) * std::abs(base(x, y)), 0.0};
  };
  return {std::move(value), base_copy, base_copy, std::move(profile),
          FuzzyNumber::constant(1.0)};
}

bool defining_predicate(const FuzzyInnerProductTriple& fip, double alpha, const Vector& x,
                        const Vector& y, double rel_tol) {
  const double magnitude = std::abs(fip.value(alpha, x, y));
  const bool member = fip.membership(alpha, x, y, magnitude) >= alpha;
  const bool contained = fip.band(alpha, x, y).contains(magnitude, rel_tol);
  return member == contained;
}

FuzzyNormTriple derive_norm_triple(const FuzzyInnerProductTriple& fip) {
  auto value = [fip](double a, const Vector& x) -> Complex { return std::sqrt(fip.value(a, x, x)); };
  return {std::move(value), ClassicalNorm::induced(fip.base1()),
          ClassicalNorm::induced(fip.base2()), fip.profile().sqrt_profile(), MatchingIndicator{}};
}

double global_bound(const AlphaProfile& profile) { return profile.global_ratio_bound(); }

Complex example_norm_r2(double alpha, const Vector& x, ExampleForm form) {
  if (!(alpha > 0.0) || !(alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0,1]");
  if (x.dim() != 2 || !x.is_real()) throw std::invalid_argument("the example norm is defined on real R^2");
  const double n2 = p_norm(x, 2.0);
  const double n3 = p_norm(x, 3.0);
  const double a2 = alpha * alpha;
  const double r = 1.0 - a2;
  const double re_sq = 9.0 * a2 * a2 * n2 * n2 + 5.0 * a2 * r * n2 * n3;
  const double im_coeff = (form == ExampleForm::Corrected) ? r * r : r;
  const double im_sq = 4.0 * im_coeff * n3 * n3 + 7.0 * a2 * r * n2 * n3;
  return {std::sqrt(re_sq), std::sqrt(im_sq)};
}

double example_norm_identity(double alpha, const Vector& x) {
  const double a2 = alpha * alpha;
  return 3.0 * a2 * p_norm(x, 2.0) + 2.0 * (1.0 - a2) * p_norm(x, 3.0);
}

OrderedInterval example_norm_band(const Vector& x) {
  return {3.0 * p_norm(x, 2.0), 2.0 * p_norm(x, 3.0)};
}

FuzzyNormTriple example_norm_triple(std::vector<double> grid) {
  // In R^2, 2^{-1/6} ||x||_2 <= ||x||_3 <= ||x||_2, which pins the ratio of
  // |Q| to ||x||_2 between the two profile curves sampled below.
  const double low_ratio = 2.0 * std::pow(2.0, -1.0 / 6.0);
  std::vector<double> lo_vals, hi_vals;
  lo_vals.reserve(grid.size());
  hi_vals.reserve(grid.size());
  for (double a : grid) {
    lo_vals.push_back(3.0 * a * a + low_ratio * (1.0 - a * a));
    hi_vals.push_back(3.0 * a * a + 2.0 * (1.0 - a * a));
  }
  auto profile = AlphaProfile::table(std::move(grid), std::move(lo_vals), std::move(hi_vals));
  auto value = [](double a, const Vector& x) -> Complex { return example_norm_r2(a, x); };
  return {std::move(value), ClassicalNorm::p(2.0), ClassicalNorm::p(2.0), std::move(profile),
          MatchingIndicator{}};
}

}  // namespace ofip
