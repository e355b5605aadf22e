#ifndef ISOWORK_DUAL_HPP
#define ISOWORK_DUAL_HPP

namespace isowork {

/// Forward-mode value: `deriv` is the derivative with respect to the curve
/// parameter t.
struct DualValue {
  double value = 0.0;
  double deriv = 0.0;

  friend constexpr bool operator==(const DualValue&, const DualValue&) = default;
};

constexpr DualValue operator+(DualValue a, DualValue b) { return {a.value + b.value, a.deriv + b.deriv}; }
constexpr DualValue operator-(DualValue a, DualValue b) { return {a.value - b.value, a.deriv - b.deriv}; }
constexpr DualValue operator-(DualValue a) { return {-a.value, -a.deriv}; }
constexpr DualValue operator*(DualValue a, DualValue b) {
  return {a.value * b.value, a.deriv * b.value + a.value * b.deriv};
}
constexpr DualValue operator/(DualValue a, DualValue b) {
  return {a.value / b.value, (a.deriv * b.value - a.value * b.deriv) / (b.value * b.value)};
}

}  // namespace isowork

#endif  // ISOWORK_DUAL_HPP
