#pragma once

#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

namespace degbound {

/// Closed-form coefficient in the vertex count n and the minimum degree δ.
///
/// Built from rational constants, the two variables, + - * /, sqrt and
/// powers with rational exponents. Values are cheap to copy (shared,
/// immutable nodes).
class Coeff {
 public:
  Coeff() : Coeff(constant(1)) {}

  static Coeff constant(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator in constant");
    if (den < 0) num = -num, den = -den;
    const long g = std::gcd(num, den);
    return Coeff(std::make_shared<Node>(Node{Kind::constant, num / g, den / g, nullptr, nullptr}));
  }
  static Coeff order() { return leaf(Kind::order); }
  static Coeff min_degree() { return leaf(Kind::min_degree); }

  friend Coeff operator+(const Coeff& a, const Coeff& b) { return binary(Kind::add, a, b); }
  friend Coeff operator-(const Coeff& a, const Coeff& b) { return binary(Kind::sub, a, b); }
  friend Coeff operator*(const Coeff& a, const Coeff& b) { return binary(Kind::mul, a, b); }
  friend Coeff operator/(const Coeff& a, const Coeff& b) { return binary(Kind::div, a, b); }
  friend Coeff operator+(const Coeff& a, long b) { return a + constant(b); }
  friend Coeff operator-(const Coeff& a, long b) { return a - constant(b); }
  friend Coeff operator*(long a, const Coeff& b) { return constant(a) * b; }
  friend Coeff operator/(const Coeff& a, long b) { return a / constant(b); }
  friend Coeff operator/(long a, const Coeff& b) { return constant(a) / b; }

  friend Coeff sqrt(const Coeff& a) {
    return Coeff(std::make_shared<Node>(Node{Kind::sqrt, 0, 1, a.node_, nullptr}));
  }
  friend Coeff pow(const Coeff& a, long num, long den = 1) {
    if (den <= 0) throw std::invalid_argument("exponent denominator must be positive");
    const long g = std::gcd(num, den);
    return Coeff(std::make_shared<Node>(Node{Kind::pow, num / g, den / g, a.node_, nullptr}));
  }

  double evaluate(int n, int delta) const { return eval(*node_, n, delta); }

  bool uses_order() const { return uses(*node_, Kind::order); }
  bool uses_min_degree() const { return uses(*node_, Kind::min_degree); }

  std::string to_string() const { return render(*node_, false); }

 private:
  enum class Kind { constant, order, min_degree, add, sub, mul, div, sqrt, pow };

  struct Node {
    Kind kind;
    long num;  // constant numerator or exponent numerator
    long den;  // constant denominator or exponent denominator
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Coeff(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static Coeff leaf(Kind k) { return Coeff(std::make_shared<Node>(Node{k, 0, 1, nullptr, nullptr})); }
  static Coeff binary(Kind k, const Coeff& a, const Coeff& b) {
    return Coeff(std::make_shared<Node>(Node{k, 0, 1, a.node_, b.node_}));
  }

  static double eval(const Node& x, int n, int delta) {
    switch (x.kind) {
      case Kind::constant: return static_cast<double>(x.num) / static_cast<double>(x.den);
      case Kind::order: return n;
      case Kind::min_degree: return delta;
      case Kind::add: return eval(*x.lhs, n, delta) + eval(*x.rhs, n, delta);
      case Kind::sub: return eval(*x.lhs, n, delta) - eval(*x.rhs, n, delta);
      case Kind::mul: return eval(*x.lhs, n, delta) * eval(*x.rhs, n, delta);
      case Kind::div: return eval(*x.lhs, n, delta) / eval(*x.rhs, n, delta);
      case Kind::sqrt: return std::sqrt(eval(*x.lhs, n, delta));
      case Kind::pow: {
        const double base = eval(*x.lhs, n, delta);
        if (x.den == 1) return std::pow(base, static_cast<int>(x.num));
        if (x.den == 2) return std::pow(std::sqrt(base), static_cast<int>(x.num));
        return std::pow(base, static_cast<double>(x.num) / static_cast<double>(x.den));
      }
    }
    return std::nan("");
  }

  static bool uses(const Node& x, Kind var) {
    if (x.kind == var) return true;
    return (x.lhs && uses(*x.lhs, var)) || (x.rhs && uses(*x.rhs, var));
  }

  static std::string render(const Node& x, bool nested) {
    auto wrap = [nested](std::string s) { return nested ? "(" + s + ")" : s; };
    switch (x.kind) {
      case Kind::constant: {
        if (x.den == 1) return std::to_string(x.num);
        return wrap(std::to_string(x.num) + "/" + std::to_string(x.den));
      }
      case Kind::order: return "n";
      case Kind::min_degree: return "delta";
      case Kind::add: return wrap(render(*x.lhs, true) + "+" + render(*x.rhs, true));
      case Kind::sub: return wrap(render(*x.lhs, true) + "-" + render(*x.rhs, true));
      case Kind::mul: return wrap(render(*x.lhs, true) + "*" + render(*x.rhs, true));
      case Kind::div: return wrap(render(*x.lhs, true) + "/" + render(*x.rhs, true));
      case Kind::sqrt: return "sqrt(" + render(*x.lhs, false) + ")";
      case Kind::pow: {
        std::string e = std::to_string(x.num);
        if (x.den != 1) e = "(" + e + "/" + std::to_string(x.den) + ")";
        return render(*x.lhs, true) + "^" + e;
      }
    }
    return "?";
  }

  std::shared_ptr<const Node> node_;
};

}  // namespace degbound
