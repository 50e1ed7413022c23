#include "ofip/ordered_interval.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ofip {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

OrderedInterval checked(double a, double b, const char* op) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw std::overflow_error(std::string("ordered interval ") + op + " overflowed to a non-finite label");
  }
  return {a, b};
}

}  // namespace

OrderedInterval::OrderedInterval(double lo_label, double hi_label) : a_(lo_label), b_(hi_label) {
  require_finite(a_, "lo label");
  require_finite(b_, "hi label");
}

bool OrderedInterval::contains(double x) const {
  return std::min(a_, b_) <= x && x <= std::max(a_, b_);
}

bool OrderedInterval::contains(double x, double rel_tol) const {
  const double lo = std::min(a_, b_);
  const double hi = std::max(a_, b_);
  const double pad = rel_tol * (1.0 + std::max(std::fabs(lo), std::fabs(hi)));
  return lo - pad <= x && x <= hi + pad;
}

OrderedInterval operator+(const OrderedInterval& i, const OrderedInterval& j) {
  return checked(i.lo_label() + j.lo_label(), i.hi_label() + j.hi_label(), "addition");
}

OrderedInterval operator-(const OrderedInterval& i, const OrderedInterval& j) {
  return checked(i.lo_label() - j.lo_label(), i.hi_label() - j.hi_label(), "subtraction");
}

OrderedInterval operator*(const OrderedInterval& i, const OrderedInterval& j) {
  return checked(i.lo_label() * j.lo_label(), i.hi_label() * j.hi_label(), "multiplication");
}

OrderedInterval operator*(double k, const OrderedInterval& i) {
  require_finite(k, "scalar");
  return checked(k * i.lo_label(), k * i.hi_label(), "scaling");
}

OrderedInterval abs(const OrderedInterval& i) {
  return {std::fabs(i.lo_label()), std::fabs(i.hi_label())};
}

bool subset(const OrderedInterval& i, const OrderedInterval& j) {
  const CanonicalInterval ci = i.canonical();
  const CanonicalInterval cj = j.canonical();
  return cj.lo <= ci.lo && ci.hi <= cj.hi;
}

bool geq(const OrderedInterval& i, const OrderedInterval& j) {
  const CanonicalInterval ci = i.canonical();
  const CanonicalInterval cj = j.canonical();
  return ci.lo >= cj.lo && ci.hi >= cj.hi;
}

bool extensionally_equal(const OrderedInterval& i, const OrderedInterval& j) {
  return i.canonical() == j.canonical();
}

std::string format_double(double v) {
  std::array<char, 32> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string to_string(const OrderedInterval& i) {
  return "[" + format_double(i.lo_label()) + "," + format_double(i.hi_label()) + "]_o";
}

std::string to_string(const CanonicalInterval& i) {
  return "[" + format_double(i.lo) + "," + format_double(i.hi) + "]";
}

std::ostream& operator<<(std::ostream& os, const OrderedInterval& i) {
  return os << to_string(i);
}

OrderedInterval parse_ordered_interval(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto fail = [&](const char* msg) -> OrderedInterval {
    throw std::invalid_argument(std::string("bad interval literal: ") + msg);
  };
  auto number = [&]() -> double {
    skip_ws();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc{}) fail("expected a number");
    pos = static_cast<std::size_t>(ptr - text.data());
    return v;
  };

  skip_ws();
  if (pos >= text.size() || text[pos] != '[') fail("expected '['");
  ++pos;
  const double a = number();
  skip_ws();
  if (pos >= text.size() || text[pos] != ',') fail("expected ','");
  ++pos;
  const double b = number();
  skip_ws();
  if (pos >= text.size() || text[pos] != ']') fail("expected ']'");
  ++pos;
  if (pos + 1 < text.size() && text[pos] == '_' && text[pos + 1] == 'o') pos += 2;
  skip_ws();
  if (pos != text.size()) fail("trailing characters");
  return {a, b};
}

}  // namespace ofip
