#include "ofip/checks.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ofip {

namespace {

constexpr std::array<std::string_view, kCheckCount> kCheckNames = {
    "defining_predicate",
    "orthogonality",
    "ip_definiteness",
    "ip_zero_left",
    "norm_bounds",
    "cauchy_schwarz",
    "parallelogram",
    "polarization",
    "polarization_classical",
    "bessel",
    "qlin_03",
    "qlin_04",
    "qlin_05",
    "qlin_06",
    "qlin_07",
    "qlin_08",
    "qlin_09",
    "qlin_10",
    "qlin_11",
    "qlin_12",
    "uniform_03",
    "uniform_04",
    "uniform_05",
    "uniform_06",
    "uniform_07",
    "uniform_08",
    "uniform_09",
    "uniform_10",
    "uniform_11",
    "uniform_12",
    "norm_definiteness",
    "norm_triangle",
    "norm_homogeneity",
    "norm_uniform_triangle",
    "norm_uniform_homogeneity",
    "cross_alpha_ip",
    "cross_alpha_ip_pair",
    "cross_alpha_norm",
    "cross_alpha_norm_pair",
};

double scale_of(double lhs, double rhs) { return 1.0 + std::max(std::fabs(lhs), std::fabs(rhs)); }

CheckRecord one_sided(CheckId id, CheckInputs inputs, double lhs, double rhs, double tol) {
  CheckRecord rec;
  rec.id = id;
  rec.inputs = std::move(inputs);
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.slack = rhs - lhs;
  rec.tolerance = tol;
  rec.pass = rec.slack >= -tol * scale_of(lhs, rhs);
  return rec;
}

// Claim lo <= mid <= hi; the binding side becomes (lhs, rhs).
CheckRecord two_sided(CheckId id, CheckInputs inputs, double lo, double mid, double hi,
                      double tol) {
  const double lower_slack = mid - lo;
  const double upper_slack = hi - mid;
  CheckRecord rec;
  rec.id = id;
  rec.inputs = std::move(inputs);
  if (lower_slack <= upper_slack) {
    rec.lhs = lo;
    rec.rhs = mid;
    rec.slack = lower_slack;
  } else {
    rec.lhs = mid;
    rec.rhs = hi;
    rec.slack = upper_slack;
  }
  rec.tolerance = tol;
  const bool lower_ok = lower_slack >= -tol * scale_of(lo, mid);
  const bool upper_ok = upper_slack >= -tol * scale_of(mid, hi);
  rec.pass = lower_ok && upper_ok;
  return rec;
}

CheckRecord predicate(CheckId id, CheckInputs inputs, bool lhs_truth, bool rhs_truth) {
  CheckRecord rec;
  rec.id = id;
  rec.inputs = std::move(inputs);
  rec.lhs = lhs_truth ? 1.0 : 0.0;
  rec.rhs = rhs_truth ? 1.0 : 0.0;
  rec.pass = lhs_truth == rhs_truth;
  rec.slack = rec.pass ? 0.0 : -1.0;
  rec.tolerance = 0.0;
  return rec;
}

CheckInputs inputs_for(const AlphaProfile& profile, double alpha) {
  CheckInputs in;
  in.alpha = alpha;
  in.profile_lower = profile.lower(alpha);
  in.profile_upper = profile.upper(alpha);
  return in;
}

double ip_mag(const FuzzyInnerProductTriple& fip, double a, const Vector& x, const Vector& y) {
  return std::abs(fip.value(a, x, y));
}

// | ||x||_a^2 | = |<x,x>_a|.
double norm_sq_mag(const FuzzyInnerProductTriple& fip, double a, const Vector& x) {
  return std::abs(fip.value(a, x, x));
}

// | ||x||_a | = sqrt |<x,x>_a|.
double norm_mag(const FuzzyInnerProductTriple& fip, double a, const Vector& x) {
  return std::sqrt(norm_sq_mag(fip, a, x));
}

void require_simplified(const FuzzyInnerProductTriple& fip, const char* what) {
  if (!fip.simplified()) {
    throw std::invalid_argument(std::string(what) + " requires a simplified-form triple");
  }
}

// Shared body for the per-alpha and uniform-constant variants of the
// quasi-linearity items. lower_factor/upper_factor already include |k| where
// the item calls for it.
CheckRecord quasi_linearity_body(CheckId id, const FuzzyInnerProductTriple& fip, int item,
                                 double alpha, Complex k, const Vector& x, const Vector& y,
                                 const Vector* z, double lower_factor, double upper_factor,
                                 double tol) {
  if (item < 3 || item > 12) throw std::invalid_argument("quasi-linearity item must be in 3..12");
  if ((item == 11 || item == 12) && z == nullptr) {
    throw std::invalid_argument("items 11 and 12 require a third vector");
  }

  CheckInputs in = inputs_for(fip.profile(), alpha);
  in.k = k;
  in.x = x.entries();
  in.y = y.entries();
  if (z != nullptr) in.z = z->entries();

  const Complex abs_k(std::abs(k), 0.0);
  switch (item) {
    case 3: {
      const double mid = ip_mag(fip, alpha, k * x, y);
      const double ref = ip_mag(fip, alpha, x, y);
      return two_sided(id, std::move(in), lower_factor * ref, mid, upper_factor * ref, tol);
    }
    case 4: {
      const double mid = ip_mag(fip, alpha, x, k * y);
      const double ref = ip_mag(fip, alpha, x, y);
      return two_sided(id, std::move(in), lower_factor * ref, mid, upper_factor * ref, tol);
    }
    case 5: {
      const double mid = ip_mag(fip, alpha, k * x, y);
      const double ref = ip_mag(fip, alpha, y, x);
      return two_sided(id, std::move(in), lower_factor * ref, mid, upper_factor * ref, tol);
    }
    case 6: {
      const double mid = ip_mag(fip, alpha, x, abs_k * y);
      const double ref = ip_mag(fip, alpha, y, x);
      return two_sided(id, std::move(in), lower_factor * ref, mid, upper_factor * ref, tol);
    }
    case 7: {
      const double mid = ip_mag(fip, alpha, k * x, y);
      const double ref = ip_mag(fip, alpha, x, k * y);
      return two_sided(id, std::move(in), lower_factor * ref, mid, upper_factor * ref, tol);
    }
    case 8: {
      const double mid = ip_mag(fip, alpha, x, k * y);
      const double ref = ip_mag(fip, alpha, k * x, y);
      return two_sided(id, std::move(in), lower_factor * ref, mid, upper_factor * ref, tol);
    }
    case 9: {
      const double mid = ip_mag(fip, alpha, k * x, y);
      const double ref = ip_mag(fip, alpha, k * y, x);
      return two_sided(id, std::move(in), lower_factor * ref, mid, upper_factor * ref, tol);
    }
    case 10: {
      const double mid = ip_mag(fip, alpha, x, k * y);
      const double ref = ip_mag(fip, alpha, k * y, x);
      return two_sided(id, std::move(in), lower_factor * ref, mid, upper_factor * ref, tol);
    }
    case 11: {
      const double lhs = ip_mag(fip, alpha, k * x + *z, y);
      const double rhs = upper_factor * (std::abs(k) * ip_mag(fip, alpha, x, y) +
                                         ip_mag(fip, alpha, *z, y));
      return one_sided(id, std::move(in), lhs, rhs, tol);
    }
    default: {  // 12
      const double lhs = ip_mag(fip, alpha, x, k * y + *z);
      const double rhs = upper_factor * (std::abs(k) * ip_mag(fip, alpha, x, y) +
                                         ip_mag(fip, alpha, x, *z));
      return one_sided(id, std::move(in), lhs, rhs, tol);
    }
  }
}

}  // namespace

std::string_view check_id_name(CheckId id) {
  return kCheckNames[static_cast<std::size_t>(id)];
}

std::optional<CheckId> check_id_from_name(std::string_view name) {
  for (int i = 0; i < kCheckCount; ++i) {
    if (kCheckNames[static_cast<std::size_t>(i)] == name) return static_cast<CheckId>(i);
  }
  return std::nullopt;
}

CheckRecord check_norm_bounds(const FuzzyInnerProductTriple& fip, double alpha, const Vector& x,
                              double tol) {
  require_simplified(fip, "norm-bounds check");
  CheckInputs in = inputs_for(fip.profile(), alpha);
  in.x = x.entries();
  const double sq = norm_sq_mag(fip, alpha, x);
  const double mid = fip.base1()(x, x).real();
  return two_sided(CheckId::NormBounds, std::move(in), sq / fip.profile().upper(alpha), mid,
                   sq / fip.profile().lower(alpha), tol);
}

CheckRecord check_fuzzy_cauchy_schwarz(const FuzzyInnerProductTriple& fip, double alpha,
                                       const Vector& x, const Vector& y, double tol) {
  require_simplified(fip, "Cauchy-Schwarz check");
  CheckInputs in = inputs_for(fip.profile(), alpha);
  in.x = x.entries();
  in.y = y.entries();
  const double ratio = fip.profile().upper(alpha) / fip.profile().lower(alpha);
  const double lhs = ip_mag(fip, alpha, x, y);
  const double rhs = ratio * norm_mag(fip, alpha, x) * norm_mag(fip, alpha, y);
  return one_sided(CheckId::CauchySchwarz, std::move(in), lhs, rhs, tol);
}

CheckRecord check_fuzzy_parallelogram(const FuzzyInnerProductTriple& fip, double alpha,
                                      const Vector& x, const Vector& y, double tol) {
  require_simplified(fip, "parallelogram check");
  CheckInputs in = inputs_for(fip.profile(), alpha);
  in.x = x.entries();
  in.y = y.entries();
  const double ratio = fip.profile().upper(alpha) / fip.profile().lower(alpha);
  const double mid = norm_sq_mag(fip, alpha, x + y) + norm_sq_mag(fip, alpha, x - y);
  const double sides = norm_sq_mag(fip, alpha, x) + norm_sq_mag(fip, alpha, y);
  return two_sided(CheckId::Parallelogram, std::move(in), 2.0 / ratio * sides, mid,
                   2.0 * ratio * sides, tol);
}

CheckRecord check_fuzzy_polarization(const FuzzyInnerProductTriple& fip, double alpha,
                                     const Vector& x, const Vector& y, double tol) {
  require_simplified(fip, "polarization check");
  if (!x.is_real() || !y.is_real()) {
    throw std::invalid_argument("the polarization bound applies to real vectors only");
  }
  CheckInputs in = inputs_for(fip.profile(), alpha);
  in.x = x.entries();
  in.y = y.entries();
  const double ratio = fip.profile().upper(alpha) / fip.profile().lower(alpha);
  const double lhs = norm_sq_mag(fip, alpha, x + y);
  const double rhs = ratio * (4.0 * ip_mag(fip, alpha, x, y) + norm_sq_mag(fip, alpha, x - y));
  return one_sided(CheckId::Polarization, std::move(in), lhs, rhs, tol);
}

CheckRecord check_classical_polarization_bound(const ClassicalInnerProduct& ip, const Vector& x,
                                               const Vector& y, double tol) {
  if (!x.is_real() || !y.is_real()) {
    throw std::invalid_argument("the polarization bound applies to real vectors only");
  }
  CheckInputs in;
  in.x = x.entries();
  in.y = y.entries();
  const ClassicalNorm norm = ClassicalNorm::induced(ip);
  const double sum = norm(x + y);
  const double diff = norm(x - y);
  return one_sided(CheckId::PolarizationClassical, std::move(in), sum * sum,
                   4.0 * std::abs(ip(x, y)) + diff * diff, tol);
}

CheckRecord check_fuzzy_bessel(const FuzzyInnerProductTriple& fip, const OrthonormalSystem& system,
                               const Vector& x, double alpha, std::size_t n, double tol) {
  require_simplified(fip, "Bessel check");
  if (!(system.base() == fip.base1())) {
    throw std::invalid_argument("orthonormal system base differs from the triple's base");
  }
  if (n > system.size()) throw std::invalid_argument("partial sum length exceeds system size");
  CheckInputs in = inputs_for(fip.profile(), alpha);
  in.x = x.entries();
  double lhs = 0.0;
  for (std::size_t i = 0; i < n; ++i) lhs += std::norm(fip.value(alpha, x, system[i]));
  const double lower = fip.profile().lower(alpha);
  const double upper = fip.profile().upper(alpha);
  const double sq = norm_sq_mag(fip, alpha, x);
  CheckRecord rec = one_sided(CheckId::Bessel, std::move(in), lhs, upper * upper / lower * sq, tol);
  rec.bessel_variant_rhs = (upper / lower) * (upper / lower) * sq;
  return rec;
}

CheckRecord check_quasi_linearity(const FuzzyInnerProductTriple& fip, int item, double alpha,
                                  Complex k, const Vector& x, const Vector& y, const Vector* z,
                                  double tol) {
  require_simplified(fip, "quasi-linearity check");
  const double lower = fip.profile().lower(alpha);
  const double upper = fip.profile().upper(alpha);
  const double kmag = std::abs(k);
  const bool scaled_item = item >= 3 && item <= 6;
  const double lf = (scaled_item ? kmag : 1.0) * lower / upper;
  const double uf = (scaled_item ? kmag : 1.0) * upper / lower;
  const CheckId id = static_cast<CheckId>(static_cast<int>(CheckId::Qlin03) + item - 3);
  return quasi_linearity_body(id, fip, item, alpha, k, x, y, z, lf, uf, tol);
}

CheckRecord check_uniform_bound(const FuzzyInnerProductTriple& fip, double m, int item,
                                double alpha, Complex k, const Vector& x, const Vector& y,
                                const Vector* z, double tol) {
  require_simplified(fip, "uniform-bound check");
  if (!(m >= 1.0) || !std::isfinite(m)) {
    throw std::invalid_argument("uniform constant must be finite and at least 1");
  }
  const double kmag = std::abs(k);
  const bool scaled_item = item >= 3 && item <= 6;
  const double lf = (scaled_item ? kmag : 1.0) / m;
  const double uf = (scaled_item ? kmag : 1.0) * m;
  const CheckId id = static_cast<CheckId>(static_cast<int>(CheckId::Uniform03) + item - 3);
  return quasi_linearity_body(id, fip, item, alpha, k, x, y, z, lf, uf, tol);
}

CheckRecord check_fuzzy_norm_properties(const FuzzyNormTriple& fnorm, int item, double alpha,
                                        Complex k, const Vector& x, const Vector& y, double tol) {
  if (!fnorm.simplified()) {
    throw std::invalid_argument("norm property checks require a simplified-form triple");
  }
  CheckInputs in;
  in.alpha = alpha;
  in.profile_lower = fnorm.profile().lower(alpha);
  in.profile_upper = fnorm.profile().upper(alpha);
  in.x = x.entries();
  const double ratio = in.profile_upper / in.profile_lower;
  switch (item) {
    case 1: {
      const double mag = std::abs(fnorm.value(alpha, x));
      return predicate(CheckId::NormDefiniteness, std::move(in), mag == 0.0, x.is_zero());
    }
    case 2: {
      in.k = k;
      in.y = y.entries();
      const double lhs = std::abs(fnorm.value(alpha, k * x + y));
      const double rhs = ratio * (std::abs(k) * std::abs(fnorm.value(alpha, x)) +
                                  std::abs(fnorm.value(alpha, y)));
      return one_sided(CheckId::NormTriangle, std::move(in), lhs, rhs, tol);
    }
    case 3: {
      in.k = k;
      const double mid = std::abs(fnorm.value(alpha, k * x));
      const double ref = std::abs(fnorm.value(alpha, x));
      const double kmag = std::abs(k);
      return two_sided(CheckId::NormHomogeneity, std::move(in), kmag / ratio * ref, mid,
                       kmag * ratio * ref, tol);
    }
    default:
      throw std::invalid_argument("norm property item must be 1, 2 or 3");
  }
}

CheckRecord check_norm_uniform_bound(const FuzzyNormTriple& fnorm, double l, int item,
                                     double alpha, Complex k, const Vector& x, const Vector& y,
                                     double tol) {
  if (!fnorm.simplified()) {
    throw std::invalid_argument("norm uniform-bound checks require a simplified-form triple");
  }
  if (!(l >= 1.0) || !std::isfinite(l)) {
    throw std::invalid_argument("uniform constant must be finite and at least 1");
  }
  CheckInputs in;
  in.alpha = alpha;
  in.profile_lower = fnorm.profile().lower(alpha);
  in.profile_upper = fnorm.profile().upper(alpha);
  in.k = k;
  in.x = x.entries();
  switch (item) {
    case 2: {
      in.y = y.entries();
      const double lhs = std::abs(fnorm.value(alpha, k * x + y));
      const double rhs = l * (std::abs(k) * std::abs(fnorm.value(alpha, x)) +
                              std::abs(fnorm.value(alpha, y)));
      return one_sided(CheckId::NormUniformTriangle, std::move(in), lhs, rhs, tol);
    }
    case 3: {
      const double mid = std::abs(fnorm.value(alpha, k * x));
      const double ref = std::abs(fnorm.value(alpha, x));
      const double kmag = std::abs(k);
      return two_sided(CheckId::NormUniformHomogeneity, std::move(in), kmag / l * ref, mid,
                       kmag * l * ref, tol);
    }
    default:
      throw std::invalid_argument("norm uniform-bound item must be 2 or 3");
  }
}

CheckRecord check_cross_alpha(const FuzzyInnerProductTriple& f1, const FuzzyInnerProductTriple& f2,
                              double alpha1, double alpha2, const Vector& x, const Vector& y,
                              bool pair, double tol) {
  require_simplified(f1, "cross-level check");
  require_simplified(f2, "cross-level check");
  if (!(f1.base1() == f2.base1())) {
    throw std::invalid_argument("cross-level comparison requires a shared base inner product");
  }
  CheckInputs in = inputs_for(f1.profile(), alpha1);
  in.alpha2 = alpha2;
  in.profile2_lower = f2.profile().lower(alpha2);
  in.profile2_upper = f2.profile().upper(alpha2);
  in.x = x.entries();
  in.y = y.entries();
  const double mid = std::abs(f1.value(alpha1, x, y));
  const double other = std::abs(f2.value(alpha2, x, y));
  const double lo = f1.profile().lower(alpha1) / f2.profile().upper(alpha2) * other;
  const double hi = f1.profile().upper(alpha1) / f2.profile().lower(alpha2) * other;
  return two_sided(pair ? CheckId::CrossAlphaIpPair : CheckId::CrossAlphaIp, std::move(in), lo,
                   mid, hi, tol);
}

CheckRecord check_cross_alpha_norm(const FuzzyNormTriple& f1, const FuzzyNormTriple& f2,
                                   double alpha1, double alpha2, const Vector& x, bool pair,
                                   double tol) {
  if (!f1.simplified() || !f2.simplified()) {
    throw std::invalid_argument("cross-level norm checks require simplified-form triples");
  }
  if (!(f1.base1() == f2.base1())) {
    throw std::invalid_argument("cross-level comparison requires a shared base norm");
  }
  CheckInputs in;
  in.alpha = alpha1;
  in.alpha2 = alpha2;
  in.profile_lower = f1.profile().lower(alpha1);
  in.profile_upper = f1.profile().upper(alpha1);
  in.profile2_lower = f2.profile().lower(alpha2);
  in.profile2_upper = f2.profile().upper(alpha2);
  in.x = x.entries();
  const double mid = std::abs(f1.value(alpha1, x));
  const double other = std::abs(f2.value(alpha2, x));
  const double lo = f1.profile().lower(alpha1) / f2.profile().upper(alpha2) * other;
  const double hi = f1.profile().upper(alpha1) / f2.profile().lower(alpha2) * other;
  return two_sided(pair ? CheckId::CrossAlphaNormPair : CheckId::CrossAlphaNorm, std::move(in),
                   lo, mid, hi, tol);
}

CheckRecord check_defining_predicate(const FuzzyInnerProductTriple& fip, double alpha,
                                     const Vector& x, const Vector& y) {
  CheckInputs in = inputs_for(fip.profile(), alpha);
  in.x = x.entries();
  in.y = y.entries();
  const double magnitude = std::abs(fip.value(alpha, x, y));
  const bool member = fip.membership(alpha, x, y, magnitude) >= alpha;
  const bool contained = fip.band(alpha, x, y).contains(magnitude, kBandRelTolerance);
  return predicate(CheckId::DefiningPredicate, std::move(in), member, contained);
}

CheckRecord check_orthogonality(const FuzzyInnerProductTriple& fip, double alpha, const Vector& x,
                                const Vector& y) {
  CheckInputs in = inputs_for(fip.profile(), alpha);
  in.x = x.entries();
  in.y = y.entries();
  const Complex v = fip.value(alpha, x, y);
  const Complex b = fip.base1()(x, y);
  return predicate(CheckId::Orthogonality, std::move(in), v == Complex(0.0, 0.0),
                   b == Complex(0.0, 0.0));
}

CheckRecord check_ip_definiteness(const FuzzyInnerProductTriple& fip, double alpha,
                                  const Vector& x) {
  CheckInputs in = inputs_for(fip.profile(), alpha);
  in.x = x.entries();
  const double mag = std::abs(fip.value(alpha, x, x));
  return predicate(CheckId::IpDefiniteness, std::move(in), mag == 0.0, x.is_zero());
}

CheckRecord check_ip_zero_left(const FuzzyInnerProductTriple& fip, double alpha, const Vector& y) {
  CheckInputs in = inputs_for(fip.profile(), alpha);
  in.y = y.entries();
  const double mag = std::abs(fip.value(alpha, Vector::zero(y.dim()), y));
  return predicate(CheckId::IpZeroLeft, std::move(in), mag == 0.0, true);
}

}  // namespace ofip
