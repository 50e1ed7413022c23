#include "ofip/classical_space.hpp"

#include <algorithm>
#include <cmath>

namespace ofip {

namespace {

void require_same_dim(const Vector& x, const Vector& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("vector dimensions do not match");
}

}  // namespace

Vector::Vector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("vector dimension must be at least 1");
  for (const Complex& e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
      throw std::invalid_argument("vector entries must be finite");
    }
  }
}

Vector::Vector(std::initializer_list<double> reals) {
  if (reals.size() == 0) throw std::invalid_argument("vector dimension must be at least 1");
  entries_.reserve(reals.size());
  for (double r : reals) {
    if (!std::isfinite(r)) throw std::invalid_argument("vector entries must be finite");
    entries_.emplace_back(r, 0.0);
  }
}

Vector Vector::zero(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("vector dimension must be at least 1");
  return Vector(std::vector<Complex>(dim, Complex(0.0, 0.0)));
}

Vector Vector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("basis index out of range");
  std::vector<Complex> e(dim, Complex(0.0, 0.0));
  e[index] = Complex(1.0, 0.0);
  return Vector(std::move(e));
}

bool Vector::is_real() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Complex& e) { return e.imag() == 0.0; });
}

bool Vector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Complex& e) { return e.real() == 0.0 && e.imag() == 0.0; });
}

Vector operator+(const Vector& x, const Vector& y) {
  require_same_dim(x, y);
  std::vector<Complex> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = x[i] + y[i];
  return Vector(std::move(out));
}

Vector operator-(const Vector& x, const Vector& y) {
  require_same_dim(x, y);
  std::vector<Complex> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = x[i] - y[i];
  return Vector(std::move(out));
}

Vector operator*(Complex k, const Vector& x) {
  std::vector<Complex> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = k * x[i];
  return Vector(std::move(out));
}

ClassicalInnerProduct ClassicalInnerProduct::standard_dot() { return {}; }

ClassicalInnerProduct ClassicalInnerProduct::diagonal(std::vector<double> weights) {
  if (weights.empty()) throw std::invalid_argument("diagonal weights must be non-empty");
  for (double w : weights) {
    if (!std::isfinite(w) || !(w > 0.0)) {
      throw std::invalid_argument("diagonal weights must be finite and strictly positive");
    }
  }
  ClassicalInnerProduct ip;
  ip.weights_ = std::move(weights);
  return ip;
}

Complex ClassicalInnerProduct::operator()(const Vector& x, const Vector& y) const {
  require_same_dim(x, y);
  if (!weights_.empty() && weights_.size() != x.dim()) {
    throw std::invalid_argument("diagonal weight count does not match vector dimension");
  }
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < x.dim(); ++i) {
    Complex term = x[i] * std::conj(y[i]);
    if (!weights_.empty()) term *= weights_[i];
    acc += term;
  }
  return acc;
}

double p_norm(const Vector& x, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i) m = std::max(m, std::abs(x[i]));
    return m;
  }
  if (p != 1.0 && p != 2.0 && p != 3.0) {
    throw std::invalid_argument("p must be one of 1, 2, 3, inf");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double a = std::abs(x[i]);
    if (p == 1.0) acc += a;
    else if (p == 2.0) acc += a * a;
    else acc += a * a * a;
  }
  if (p == 1.0) return acc;
  if (p == 2.0) return std::sqrt(acc);
  return std::cbrt(acc);
}

ClassicalNorm ClassicalNorm::induced(ClassicalInnerProduct ip) {
  ClassicalNorm n;
  n.ip_ = std::move(ip);
  return n;
}

ClassicalNorm ClassicalNorm::p(double p) {
  if (!std::isinf(p) && p != 1.0 && p != 2.0 && p != 3.0) {
    throw std::invalid_argument("p must be one of 1, 2, 3, inf");
  }
  ClassicalNorm n;
  n.p_ = p;
  return n;
}

double ClassicalNorm::operator()(const Vector& x) const {
  if (ip_) {
    const double sq = (*ip_)(x, x).real();
    return std::sqrt(std::max(sq, 0.0));
  }
  return p_norm(x, p_);
}

OrthonormalSystem::OrthonormalSystem(std::vector<Vector> vectors, ClassicalInnerProduct base)
    : vectors_(std::move(vectors)), base_(std::move(base)) {
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    for (std::size_t j = i; j < vectors_.size(); ++j) {
      const Complex g = base_(vectors_[i], vectors_[j]);
      const double target = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - Complex(target, 0.0)) > kTolerance) {
        throw NonOrthonormalError(i, j,
                                  "system is not orthonormal at pair (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
      }
    }
  }
}

OrthonormalSystem gram_schmidt(const std::vector<Vector>& vs, const ClassicalInnerProduct& ip) {
  if (vs.empty()) throw std::invalid_argument("gram_schmidt requires at least one vector");
  std::vector<Vector> basis;
  basis.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vector v = vs[i];
    const double input_norm = std::sqrt(std::max(ip(v, v).real(), 0.0));
    // Two projection passes keep the output orthonormal even for
    // ill-conditioned inputs.
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& e : basis) {
        const Complex coeff = ip(v, e);
        v = v - coeff * e;
      }
    }
    const double residual = std::sqrt(std::max(ip(v, v).real(), 0.0));
    if (residual < 1e-12 * (1.0 + input_norm)) {
      throw GramSchmidtError(i + 1, "input vector at position " + std::to_string(i + 1) +
                                        " is linearly dependent on its predecessors");
    }
    basis.push_back(Complex(1.0 / residual, 0.0) * v);
  }
  return OrthonormalSystem(std::move(basis), ip);
}

ClassicalOracles classical_oracles(const ClassicalInnerProduct& ip, const Vector& x,
                                   const Vector& y, const OrthonormalSystem& system,
                                   std::size_t n) {
  if (n > system.size()) throw std::invalid_argument("partial sum length exceeds system size");
  const ClassicalNorm norm = ClassicalNorm::induced(ip);

  ClassicalOracles out;
  out.cs_slack = norm(x) * norm(y) - std::abs(ip(x, y));

  const double nx2 = norm(x) * norm(x);
  const double ny2 = norm(y) * norm(y);
  const double sum2 = norm(x + y) * norm(x + y);
  const double diff2 = norm(x - y) * norm(x - y);
  out.parallelogram_residual = std::fabs(sum2 + diff2 - 2.0 * (nx2 + ny2));

  if (x.is_real() && y.is_real()) {
    out.polarization_residual = std::fabs(0.25 * (sum2 - diff2) - ip(x, y).real());
  }

  double bessel = 0.0;
  for (std::size_t i = 0; i < n; ++i) bessel += std::norm(ip(x, system[i]));
  out.bessel_partial_sum = bessel;
  return out;
}

}  // namespace ofip
