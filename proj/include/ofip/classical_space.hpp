#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ofip {

using Complex = std::complex<double>;

// Dense finite-dimensional vector. Real vectors are stored with zero
// imaginary parts; complex arithmetic on such entries stays exact, so
// exact-zero tests remain meaningful for the real field.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<Complex> entries);
  Vector(std::initializer_list<double> reals);

  static Vector zero(std::size_t dim);
  static Vector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Complex>& entries() const { return entries_; }

  bool is_real() const;
  bool is_zero() const;  // exact

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Complex> entries_;
};

Vector operator+(const Vector& x, const Vector& y);
Vector operator-(const Vector& x, const Vector& y);
Vector operator*(Complex k, const Vector& x);

// Inner product with conjugation on the second argument:
// <x,y> = sum_k w_k x_k conj(y_k). Standard dot has all weights 1; the
// diagonal kind requires strictly positive weights so positive-definiteness
// holds.
class ClassicalInnerProduct {
 public:
  static ClassicalInnerProduct standard_dot();
  static ClassicalInnerProduct diagonal(std::vector<double> weights);

  Complex operator()(const Vector& x, const Vector& y) const;

  bool is_standard() const { return weights_.empty(); }
  const std::vector<double>& weights() const { return weights_; }

  friend bool operator==(const ClassicalInnerProduct&, const ClassicalInnerProduct&) = default;

 private:
  ClassicalInnerProduct() = default;
  std::vector<double> weights_;  // empty means standard dot
};

// p in {1, 2, 3, inf}.
double p_norm(const Vector& x, double p);

class ClassicalNorm {
 public:
  static ClassicalNorm induced(ClassicalInnerProduct ip);
  static ClassicalNorm p(double p);

  double operator()(const Vector& x) const;

  bool is_induced() const { return ip_.has_value(); }
  const ClassicalInnerProduct& base_inner_product() const { return *ip_; }
  double p_value() const { return p_; }

  friend bool operator==(const ClassicalNorm&, const ClassicalNorm&) = default;

 private:
  ClassicalNorm() = default;
  std::optional<ClassicalInnerProduct> ip_;
  double p_ = 2.0;
};

struct NonOrthonormalError : std::invalid_argument {
  NonOrthonormalError(std::size_t first, std::size_t second, const std::string& what)
      : std::invalid_argument(what), first(first), second(second) {}
  std::size_t first;
  std::size_t second;
};

class OrthonormalSystem {
 public:
  static constexpr double kTolerance = 1e-10;

  // Validates |<e_i,e_j> - delta_ij| <= kTolerance; throws
  // NonOrthonormalError naming the violating pair.
  OrthonormalSystem(std::vector<Vector> vectors, ClassicalInnerProduct base);

  std::size_t size() const { return vectors_.size(); }
  const Vector& operator[](std::size_t i) const { return vectors_[i]; }
  const ClassicalInnerProduct& base() const { return base_; }

 private:
  std::vector<Vector> vectors_;
  ClassicalInnerProduct base_;
};

struct GramSchmidtError : std::invalid_argument {
  GramSchmidtError(std::size_t position, const std::string& what)
      : std::invalid_argument(what), position(position) {}
  std::size_t position;  // 1-based position of the offending input vector
};

// Orthonormalizes vs against ip. Inputs whose residual norm falls below
// 1e-12 * (1 + input norm) are reported as dependent via GramSchmidtError.
OrthonormalSystem gram_schmidt(const std::vector<Vector>& vs, const ClassicalInnerProduct& ip);

struct ClassicalOracles {
  double cs_slack = 0.0;                 // ||x|| ||y|| - |<x,y>|
  double parallelogram_residual = 0.0;   // |(||x+y||^2 + ||x-y||^2) - 2(||x||^2 + ||y||^2)|
  std::optional<double> polarization_residual;  // real inputs only
  double bessel_partial_sum = 0.0;       // sum_{i<n} |<x,e_i>|^2
};

ClassicalOracles classical_oracles(const ClassicalInnerProduct& ip, const Vector& x,
                                   const Vector& y, const OrthonormalSystem& system,
                                   std::size_t n);

}  // namespace ofip
