#pragma once

#include <cctype>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "realsnf/bigint.hpp"
#include "realsnf/error.hpp"
#include "realsnf/ring_spec.hpp"

namespace realsnf {

/// Which real quadratic ring an element lives in.
struct QuadField {
  long d = 2;
  QuadForm form = QuadForm::Sqrt;

  // w^2 = w + k in the half-integer basis.
  long half_k() const { return (d - 1) / 4; }
  friend bool operator==(const QuadField&, const QuadField&) = default;
};

/// Signs under sqrt d -> +sqrt d and sqrt d -> -sqrt d.
struct SignPattern {
  int at_plus = 0;
  int at_minus = 0;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
  friend auto operator<=>(const SignPattern&, const SignPattern&) = default;
  SignPattern operator*(const SignPattern& o) const { return {at_plus * o.at_plus, at_minus * o.at_minus}; }
};

inline std::string to_string(const SignPattern& s) {
  auto c = [](int v) { return v > 0 ? '+' : (v < 0 ? '-' : '0'); };
  return std::string("(") + c(s.at_plus) + "," + c(s.at_minus) + ")";
}

namespace detail {

// Sign of u + v*sqrt(d), exactly.
inline int sign_of_surd(const Integer& u, const Integer& v, long d) {
  int su = sgn(u), sv = sgn(v);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  Integer uu = u * u;
  Integer dvv = v * v * d;
  return uu > dvv ? su : sv;
}

}  // namespace detail

/// x + y*w with w = sqrt d or (1 + sqrt d)/2, integer coordinates.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(Integer x, Integer y, QuadField field) : x_(std::move(x)), y_(std::move(y)), f_(field) {}

  const Integer& x() const { return x_; }
  const Integer& y() const { return y_; }
  const QuadField& field() const { return f_; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }
  bool is_rational() const { return y_ == 0; }

  /// Image under sqrt d -> -sqrt d, in the same basis.
  QuadElem conjugate() const {
    if (f_.form == QuadForm::Sqrt) return {x_, Integer(-y_), f_};
    return {Integer(x_ + y_), Integer(-y_), f_};
  }

  Integer norm() const {
    if (f_.form == QuadForm::Sqrt) return x_ * x_ - y_ * y_ * f_.d;
    return x_ * x_ + x_ * y_ - y_ * y_ * f_.half_k();
  }

  /// Value = (u + v*sqrt d) / 2 for the half form, u + v*sqrt d otherwise.
  std::pair<Integer, Integer> surd_coords() const {
    if (f_.form == QuadForm::Sqrt) return {x_, y_};
    return {Integer(2 * x_ + y_), y_};
  }

  SignPattern sign_pattern() const {
    auto [u, v] = surd_coords();
    return {detail::sign_of_surd(u, v, f_.d), detail::sign_of_surd(u, Integer(-v), f_.d)};
  }

  QuadElem operator-() const { return {Integer(-x_), Integer(-y_), f_}; }

  friend QuadElem operator+(const QuadElem& a, const QuadElem& b) {
    check_same(a, b);
    return {Integer(a.x_ + b.x_), Integer(a.y_ + b.y_), a.f_};
  }
  friend QuadElem operator-(const QuadElem& a, const QuadElem& b) {
    check_same(a, b);
    return {Integer(a.x_ - b.x_), Integer(a.y_ - b.y_), a.f_};
  }
  friend QuadElem operator*(const QuadElem& a, const QuadElem& b) {
    check_same(a, b);
    const QuadField& f = a.f_;
    Integer yy = a.y_ * b.y_;
    if (f.form == QuadForm::Sqrt)
      return {Integer(a.x_ * b.x_ + yy * f.d), Integer(a.x_ * b.y_ + a.y_ * b.x_), f};
    return {Integer(a.x_ * b.x_ + yy * f.half_k()), Integer(a.x_ * b.y_ + a.y_ * b.x_ + yy), f};
  }
  friend bool operator==(const QuadElem& a, const QuadElem& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.f_ == b.f_;
  }

  /// "x+yw", or "x-|y|w" when y < 0.
  std::string to_string() const {
    if (y_ < 0) return x_.get_str() + "-" + Integer(-y_).get_str() + "w";
    return x_.get_str() + "+" + y_.get_str() + "w";
  }

  /// Accepts "x+yw", "x-yw", "x+-yw", "yw" and plain integers.
  static QuadElem parse(std::string_view text, QuadField field) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw Error(Errc::ParseError, "empty quadratic element");
    if (s.back() != 'w') return {parse_integer(s), Integer(0), field};
    s.pop_back();
    // Split at the last '+'/'-' that is not the leading sign or part of "+-".
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
      if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '+' && s[i - 1] != '-') {
        split = i;
        break;
      }
    }
    Integer x = 0, y;
    std::string ypart = s;
    if (split != std::string::npos) {
      x = parse_integer(s.substr(0, split));
      ypart = s.substr(split);
    }
    if (ypart.rfind("+-", 0) == 0) ypart = ypart.substr(1);
    if (ypart == "+" || ypart.empty()) {
      y = 1;
    } else if (ypart == "-") {
      y = -1;
    } else {
      y = parse_integer(ypart);
    }
    return {x, y, field};
  }

 private:
  static void check_same(const QuadElem& a, const QuadElem& b) {
    if (!(a.f_ == b.f_)) throw Error(Errc::UnsupportedRing, "mixing elements of different quadratic rings");
  }

  Integer x_ = 0;
  Integer y_ = 0;
  QuadField f_{};
};

inline std::ostream& operator<<(std::ostream& os, const QuadElem& a) { return os << a.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const SignPattern& s) { return os << to_string(s); }

/// Element u + v*sqrt d of the field Q(sqrt d), rational coordinates.
struct FieldElem {
  Rational u = 0;
  Rational v = 0;
  long d = 2;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) { return {a.u + b.u, a.v + b.v, a.d}; }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return {a.u - b.u, a.v - b.v, a.d}; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    return {a.u * b.u + a.v * b.v * a.d, a.u * b.v + a.v * b.u, a.d};
  }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.u == b.u && a.v == b.v && a.d == b.d;
  }

  std::string to_string() const {
    if (v == 0) return realsnf::to_string(u);
    std::string root = "sqrt" + std::to_string(d);
    return realsnf::to_string(u) + (v < 0 ? " - " : " + ") + realsnf::to_string(Rational(abs(v))) + "*" + root;
  }
};

/// Coordinates in the integral basis of `field`, if the number is an algebraic integer there.
inline std::optional<QuadElem> to_integral(const FieldElem& e, QuadField field) {
  if (e.d != field.d) throw Error(Errc::UnsupportedRing, "field mismatch");
  if (field.form == QuadForm::Sqrt) {
    if (e.u.get_den() != 1 || e.v.get_den() != 1) return std::nullopt;
    return QuadElem(e.u.get_num(), e.v.get_num(), field);
  }
  // u + v sqrt d = (u - v) + 2v * w
  Rational y = e.v * 2;
  Rational x = e.u - e.v;
  if (x.get_den() != 1 || y.get_den() != 1) return std::nullopt;
  return QuadElem(x.get_num(), y.get_num(), field);
}

inline FieldElem to_field(const QuadElem& a) {
  auto [u, v] = a.surd_coords();
  if (a.field().form == QuadForm::Sqrt) return {Rational(u), Rational(v), a.field().d};
  return {make_rational(u, 2), make_rational(v, 2), a.field().d};
}

}  // namespace realsnf
