#pragma once

#include <algorithm>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ofip {

// Interval in sorted form, lo <= hi.
struct CanonicalInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return lo <= x && x <= hi; }

  friend bool operator==(const CanonicalInterval&, const CanonicalInterval&) = default;
};

// A pair of endpoint labels [a,b]_o with no ordering constraint between them.
// As a point set it equals [min{a,b}, max{a,b}], but the label order is part
// of the value: subtraction and multiplication act on labels, so [1,-6]_o
// and [-6,1]_o behave differently under those operations. operator== compares
// labels; use extensionally_equal() to compare point sets.
//
// Note on multiplication: i * j multiplies labels componentwise. The result
// is NOT the image set of pointwise products (e.g. [-1,2]_o * [-1,2]_o is
// [1,4]_o, which excludes 0).
class OrderedInterval {
 public:
  // Rejects non-finite labels (std::invalid_argument).
  OrderedInterval(double lo_label, double hi_label);

  double lo_label() const { return a_; }
  double hi_label() const { return b_; }

  CanonicalInterval canonical() const { return {std::min(a_, b_), std::max(a_, b_)}; }

  bool contains(double x) const;
  // Containment with canonical bounds widened by rel_tol * (1 + max abs bound).
  bool contains(double x, double rel_tol) const;

  bool degenerate() const { return a_ == b_; }

  friend bool operator==(const OrderedInterval&, const OrderedInterval&) = default;

 private:
  double a_;
  double b_;
};

// Componentwise label arithmetic. Results overflowing to non-finite values
// throw std::overflow_error.
OrderedInterval operator+(const OrderedInterval& i, const OrderedInterval& j);
OrderedInterval operator-(const OrderedInterval& i, const OrderedInterval& j);
OrderedInterval operator*(const OrderedInterval& i, const OrderedInterval& j);
OrderedInterval operator*(double k, const OrderedInterval& i);
OrderedInterval abs(const OrderedInterval& i);

// Point-set containment of i in j.
bool subset(const OrderedInterval& i, const OrderedInterval& j);
// Componentwise >= on canonical endpoints; a partial order up to
// extensional equality.
bool geq(const OrderedInterval& i, const OrderedInterval& j);
bool extensionally_equal(const OrderedInterval& i, const OrderedInterval& j);

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

std::string to_string(const OrderedInterval& i);    // "[a,b]_o"
std::string to_string(const CanonicalInterval& i);  // "[lo,hi]"
std::ostream& operator<<(std::ostream& os, const OrderedInterval& i);

// Parses "[a,b]" or "[a,b]_o". Throws std::invalid_argument on malformed input.
OrderedInterval parse_ordered_interval(std::string_view text);

}  // namespace ofip
