#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "grpd/report.hpp"

namespace grpd::affine {

  // Exact rational number, always in lowest terms with a positive denominator.
  class Rat {
   public:
    using value_type = boost::multiprecision::cpp_rational;

    Rat() = default;
    Rat(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(std::int64_t num, std::int64_t den);
    explicit Rat(value_type v) : value_(std::move(v)) {}

    boost::multiprecision::cpp_int numerator() const;
    boost::multiprecision::cpp_int denominator() const;

    bool is_zero() const { return value_.is_zero(); }

    friend Rat operator+(Rat const& a, Rat const& b) { return Rat(value_type(a.value_ + b.value_)); }
    friend Rat operator-(Rat const& a, Rat const& b) { return Rat(value_type(a.value_ - b.value_)); }
    friend Rat operator*(Rat const& a, Rat const& b) { return Rat(value_type(a.value_ * b.value_)); }
    // Throws std::domain_error on division by zero.
    friend Rat operator/(Rat const& a, Rat const& b);
    friend Rat operator-(Rat const& a) { return Rat(value_type(-a.value_)); }

    friend bool operator==(Rat const& a, Rat const& b) { return a.value_ == b.value_; }
    friend bool operator<(Rat const& a, Rat const& b) { return a.value_ < b.value_; }

    // "3", "-1/2"
    std::string str() const;

    // Accepts "3", "-1/2". Throws std::invalid_argument.
    static Rat parse(std::string const& text);

   private:
    value_type value_;
  };

  std::ostream& operator<<(std::ostream& os, Rat const& r);

  struct Vec2 {
    Rat x1;
    Rat x2;

    friend bool operator==(Vec2 const&, Vec2 const&) = default;
    friend Vec2 operator+(Vec2 const& a, Vec2 const& b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
    friend Vec2 operator-(Vec2 const& a) { return {-a.x1, -a.x2}; }

    // "(1/2, 1)"
    std::string str() const;
  };

  std::ostream& operator<<(std::ostream& os, Vec2 const& v);

  // Structure maps of the group-groupoid on R^2 over R.
  Rat  source(Vec2 const& x);   // x1 + 2 x2
  Rat  target(Vec2 const& x);   // x1 + x2
  Vec2 unit(Rat const& u);      // (u, 0)
  Vec2 inverse(Vec2 const& x);  // (x1 + 3 x2, -x2)

  bool composable(Vec2 const& x, Vec2 const& y);

  // (x1 - 2 y2, x2 + y2). Throws NotComposable naming both sides of
  // x2 = -x1 + y1 + 2 y2.
  Vec2 product(Vec2 const& x, Vec2 const& y);

  enum class Fn { alpha, beta, eps, inv };

  using Point = std::variant<Rat, Vec2>;

  // Throws InvalidInput when the argument kind does not fit fn.
  Point evaluate(Fn fn, Point const& p);

  // Exact check of every groupoid, group-homomorphism and interchange
  // identity on `samples` pseudorandom configurations. Composable partners
  // are built by solving the composability equation for the free first
  // coordinate. Sampling uses std::mt19937_64 seeded with `seed`;
  // numerators are uniform in [-100, 100], denominators in [1, 10].
  ValidationReport verify(std::size_t samples, std::uint64_t seed);

  enum class QuadKind { A, B };

  struct Quadrilateral {
    QuadKind            kind;
    std::array<Vec2, 4> points;
    Vec2                diagonal_midpoint_13;
    Vec2                diagonal_midpoint_24;
    bool                parallelogram = false;
    bool                degenerate    = false;
    // Set only when not degenerate: slopes and squared lengths of the two
    // sides the construction singles out (A1A4/A2A3 or B1B2/B3B4).
    std::optional<std::array<Rat, 2>> slopes;
    std::optional<std::array<Rat, 2>> squared_lengths;
    std::optional<Rat>                expected_squared_length;  // 5 c^2 or 5 x2^2
    ValidationReport                  report;
  };

  // Kind A from (a, b, c): x = (a, -a + b + 2c), y = (b, c); points are
  // unit(target(x)), x, x.y, y.
  Quadrilateral quadrilateral_a(Rat const& a, Rat const& b, Rat const& c);

  // Kind B from x: points are unit(source(x)), x, unit(target(x)), x^-1.
  Quadrilateral quadrilateral_b(Vec2 const& x);

}  // namespace grpd::affine
