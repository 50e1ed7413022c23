#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ofip/classical_space.hpp"
#include "ofip/fuzzy_structures.hpp"

namespace ofip {

enum class CheckId : int {
  DefiningPredicate,
  Orthogonality,
  IpDefiniteness,
  IpZeroLeft,
  NormBounds,
  CauchySchwarz,
  Parallelogram,
  Polarization,
  PolarizationClassical,
  Bessel,
  Qlin03,
  Qlin04,
  Qlin05,
  Qlin06,
  Qlin07,
  Qlin08,
  Qlin09,
  Qlin10,
  Qlin11,
  Qlin12,
  Uniform03,
  Uniform04,
  Uniform05,
  Uniform06,
  Uniform07,
  Uniform08,
  Uniform09,
  Uniform10,
  Uniform11,
  Uniform12,
  NormDefiniteness,
  NormTriangle,
  NormHomogeneity,
  NormUniformTriangle,
  NormUniformHomogeneity,
  CrossAlphaIp,
  CrossAlphaIpPair,
  CrossAlphaNorm,
  CrossAlphaNormPair,
  Count,
};

inline constexpr int kCheckCount = static_cast<int>(CheckId::Count);

std::string_view check_id_name(CheckId id);
std::optional<CheckId> check_id_from_name(std::string_view name);

struct CheckInputs {
  std::uint64_t trial = 0;
  double alpha = 1.0;
  std::optional<double> alpha2;
  std::optional<Complex> k;
  std::vector<Complex> x;
  std::vector<Complex> y;
  std::vector<Complex> z;
  double profile_lower = 1.0;
  double profile_upper = 1.0;
  std::optional<double> profile2_lower;
  std::optional<double> profile2_upper;
};

// One verified inequality instance. For one-sided checks (claim lhs <= rhs)
// slack = rhs - lhs. Two-sided checks record the binding side: the pair with
// the smaller slack becomes (lhs, rhs). Predicate checks encode truth values
// as 0/1 with slack 0 on agreement and -1 on disagreement.
struct CheckRecord {
  CheckId id = CheckId::DefiningPredicate;
  CheckInputs inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::optional<double> bessel_variant_rhs;  // informational (B/A)^2 bound
};

inline constexpr double kDefaultCheckTolerance = 1e-9;

// Sandwich |<x,x>_a| / upper <= ||x||'^2 <= |<x,x>_a| / lower.
CheckRecord check_norm_bounds(const FuzzyInnerProductTriple& fip, double alpha, const Vector& x,
                              double tol = kDefaultCheckTolerance);

// |<x,y>_a| <= (upper/lower) | ||x||_a ||y||_a |.
CheckRecord check_fuzzy_cauchy_schwarz(const FuzzyInnerProductTriple& fip, double alpha,
                                       const Vector& x, const Vector& y,
                                       double tol = kDefaultCheckTolerance);

// (2 lower/upper)(|..x..| + |..y..|) <= |..x+y..| + |..x-y..| <= (2 upper/lower)(...).
CheckRecord check_fuzzy_parallelogram(const FuzzyInnerProductTriple& fip, double alpha,
                                      const Vector& x, const Vector& y,
                                      double tol = kDefaultCheckTolerance);

// Real vectors only: |..x+y..^2| <= (upper/lower)(4 |<x,y>_a| + |..x-y..^2|).
CheckRecord check_fuzzy_polarization(const FuzzyInnerProductTriple& fip, double alpha,
                                     const Vector& x, const Vector& y,
                                     double tol = kDefaultCheckTolerance);

// Classical intermediate bound ||x+y||^2 <= 4 |<x,y>| + ||x-y||^2 (real).
CheckRecord check_classical_polarization_bound(const ClassicalInnerProduct& ip, const Vector& x,
                                               const Vector& y,
                                               double tol = kDefaultCheckTolerance);

// Partial sum over the first n system vectors against (upper^2/lower) |..x..^2|.
// Also evaluates and records the (upper/lower)^2 variant for information.
CheckRecord check_fuzzy_bessel(const FuzzyInnerProductTriple& fip, const OrthonormalSystem& system,
                               const Vector& x, double alpha, std::size_t n,
                               double tol = kDefaultCheckTolerance);

// Two-sided scaling/symmetry bounds, item in 3..12; z required for 11-12.
CheckRecord check_quasi_linearity(const FuzzyInnerProductTriple& fip, int item, double alpha,
                                  Complex k, const Vector& x, const Vector& y,
                                  const Vector* z = nullptr,
                                  double tol = kDefaultCheckTolerance);

// Same items with the uniform grid-wide constant m replacing the per-alpha ratio.
CheckRecord check_uniform_bound(const FuzzyInnerProductTriple& fip, double m, int item,
                                double alpha, Complex k, const Vector& x, const Vector& y,
                                const Vector* z = nullptr, double tol = kDefaultCheckTolerance);

// item 1: | ||x||_a | = 0 iff x = 0 (exact); item 2: quasi-triangle;
// item 3: two-sided quasi-homogeneity.
CheckRecord check_fuzzy_norm_properties(const FuzzyNormTriple& fnorm, int item, double alpha,
                                        Complex k, const Vector& x, const Vector& y,
                                        double tol = kDefaultCheckTolerance);

// Norm items 2-3 with the uniform constant l.
CheckRecord check_norm_uniform_bound(const FuzzyNormTriple& fnorm, double l, int item,
                                     double alpha, Complex k, const Vector& x, const Vector& y,
                                     double tol = kDefaultCheckTolerance);

// Relates evaluations of two triples over the same base at two levels:
// lower1(a1)/upper2(a2) |..|_2 <= |..|_1 <= upper1(a1)/lower2(a2) |..|_2.
// Self-comparison passes the same triple twice.
CheckRecord check_cross_alpha(const FuzzyInnerProductTriple& f1, const FuzzyInnerProductTriple& f2,
                              double alpha1, double alpha2, const Vector& x, const Vector& y,
                              bool pair, double tol = kDefaultCheckTolerance);

CheckRecord check_cross_alpha_norm(const FuzzyNormTriple& f1, const FuzzyNormTriple& f2,
                                   double alpha1, double alpha2, const Vector& x, bool pair,
                                   double tol = kDefaultCheckTolerance);

// Biconditional of membership and band containment.
CheckRecord check_defining_predicate(const FuzzyInnerProductTriple& fip, double alpha,
                                     const Vector& x, const Vector& y);

// <x,y>_a = 0 exactly iff <x,y>' = 0 exactly.
CheckRecord check_orthogonality(const FuzzyInnerProductTriple& fip, double alpha, const Vector& x,
                                const Vector& y);

// |<x,x>_a| = 0 iff x = 0 (exact).
CheckRecord check_ip_definiteness(const FuzzyInnerProductTriple& fip, double alpha,
                                  const Vector& x);

// <0,y>_a = 0 exactly.
CheckRecord check_ip_zero_left(const FuzzyInnerProductTriple& fip, double alpha, const Vector& y);

}  // namespace ofip
