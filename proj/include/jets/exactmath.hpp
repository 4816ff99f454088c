#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jets {

using Integer = boost::multiprecision::cpp_int;

/// Thrown when an operation receives input outside its stated domain
/// (non-positive eps, Seshadri value above the degree root, ...).
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Exact fraction, stored reduced with positive denominator.
/// Reduction is eager, so equality is structural.
class Rational {
public:
  Rational() : num_(0), den_(1) {}

  Rational(Integer n) : num_(std::move(n)), den_(1) {}

  Rational(long long n) : num_(n), den_(1) {}

  Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0)
      throw invalid_input("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    reduce();
  }

  Rational(long long n, long long d) : Rational(Integer(n), Integer(d)) {}

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const Integer lhs = a.num_ * b.den_;
    const Integer rhs = b.num_ * a.den_;
    return lhs < rhs   ? std::strong_ordering::less
           : lhs > rhs ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// Prints "p/q", or just "p" when the value is an integer.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) {
      s += '/';
      s += den_.str();
    }
    return s;
  }

  /// Parses "p/q" or "p" (ASCII, no spaces, sign on the numerator only).
  static Rational parse(std::string_view text) {
    const auto bad = [&] {
      throw invalid_input("Rational: cannot parse '" + std::string(text) +
                          "'");
    };
    if (text.empty())
      bad();
    const auto slash = text.find('/');
    const auto digits = [&](std::string_view part, bool allow_sign) {
      if (part.empty())
        return false;
      std::size_t i = 0;
      if (allow_sign && part[0] == '-')
        i = 1;
      if (i == part.size())
        return false;
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9')
          return false;
      return true;
    };
    if (slash == std::string_view::npos) {
      if (!digits(text, true))
        bad();
      return Rational(Integer(std::string(text)));
    }
    const auto p = text.substr(0, slash);
    const auto q = text.substr(slash + 1);
    if (!digits(p, true) || !digits(q, false))
      bad();
    return Rational(Integer(std::string(p)), Integer(std::string(q)));
  }

private:
  void reduce() {
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    const Integer g = boost::multiprecision::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  Integer num_;
  Integer den_;
};

/// Result of comparing a rational against the real n-th root of an integer.
/// Equal occurs only when the rational is itself an exact root.
enum class RootOrdering { Below, Equal, Above };

/// floor(k * eps) by exact integer division; k >= 1, eps > 0.
inline Integer floor_scale(const Integer& k, const Rational& eps) {
  if (k < 1)
    throw invalid_input("floor_scale: k must be positive");
  if (eps.sign() <= 0)
    throw invalid_input("floor_scale: eps must be positive");
  return (k * eps.num()) / eps.den();
}

/// Exact binomial coefficient; zero when b > a.
inline Integer binomial(const Integer& a, const Integer& b) {
  if (a < 0 || b < 0)
    throw invalid_input("binomial: arguments must be nonnegative");
  if (b > a)
    return 0;
  const Integer m = (a - b < b) ? Integer(a - b) : b;
  Integer result = 1;
  for (Integer i = 1; i <= m; ++i) {
    result *= a - m + i;
    result /= i;
  }
  return result;
}

/// floor(M^(1/n)) by integer binary search; M >= 1, n >= 1.
inline Integer integer_nth_root(const Integer& M, const Integer& n) {
  if (M < 1 || n < 1)
    throw invalid_input("integer_nth_root: M and n must be positive");
  if (n == 1 || M == 1)
    return n == 1 ? M : Integer(1);
  Integer lo = 1;
  Integer hi = 1;
  while (boost::multiprecision::pow(hi, static_cast<unsigned>(n)) <= M)
    hi <<= 1;
  // invariant: lo^n <= M < hi^n
  while (hi - lo > 1) {
    const Integer mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, static_cast<unsigned>(n)) <= M)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

/// The integer e with e^n = M, if one exists.
inline std::optional<Integer> perfect_nth_root(const Integer& M,
                                               const Integer& n) {
  const Integer r = integer_nth_root(M, n);
  if (boost::multiprecision::pow(r, static_cast<unsigned>(n)) == M)
    return r;
  return std::nullopt;
}

/// Exact ordering of eps against M^(1/n), by comparing num^n with M * den^n.
inline RootOrdering cmp_to_nth_root(const Rational& eps, const Integer& M,
                                    const Integer& n) {
  if (eps.sign() <= 0)
    throw invalid_input("cmp_to_nth_root: eps must be positive");
  if (M < 1 || n < 1)
    throw invalid_input("cmp_to_nth_root: M and n must be positive");
  const auto e = static_cast<unsigned>(n);
  const Integer lhs = boost::multiprecision::pow(eps.num(), e);
  const Integer rhs = M * boost::multiprecision::pow(eps.den(), e);
  return lhs < rhs   ? RootOrdering::Below
         : lhs > rhs ? RootOrdering::Above
                     : RootOrdering::Equal;
}

}  // namespace jets
