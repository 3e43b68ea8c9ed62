#include "grpd/affine.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "grpd/error.hpp"

namespace grpd::affine {

  ////////////////////////////////////////////////////////////////////////
  // Rat / Vec2
  ////////////////////////////////////////////////////////////////////////

  Rat::Rat(std::int64_t num, std::int64_t den) {
    if (den == 0) {
      throw std::domain_error("zero denominator");
    }
    // Boost rejects negative denominators; move the sign to the numerator.
    boost::multiprecision::cpp_int n = num, d = den;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    value_ = value_type(n, d);
  }

  boost::multiprecision::cpp_int Rat::numerator() const {
    return boost::multiprecision::numerator(value_);
  }

  boost::multiprecision::cpp_int Rat::denominator() const {
    return boost::multiprecision::denominator(value_);
  }

  Rat operator/(Rat const& a, Rat const& b) {
    if (b.is_zero()) {
      throw std::domain_error("division by zero");
    }
    return Rat(Rat::value_type(a.value_ / b.value_));
  }

  std::string Rat::str() const {
    std::ostringstream os;
    os << numerator();
    if (denominator() != 1) {
      os << '/' << denominator();
    }
    return os.str();
  }

  Rat Rat::parse(std::string const& text) {
    auto slash = text.find('/');
    try {
      std::size_t  used = 0;
      std::int64_t num  = std::stoll(text.substr(0, slash), &used);
      if (used != (slash == std::string::npos ? text.size() : slash)) {
        throw std::invalid_argument(text);
      }
      if (slash == std::string::npos) {
        return Rat(num);
      }
      std::string  rest = text.substr(slash + 1);
      std::int64_t den  = std::stoll(rest, &used);
      if (used != rest.size() || den == 0) {
        throw std::invalid_argument(text);
      }
      return Rat(num, den);
    } catch (std::logic_error const&) {
      throw std::invalid_argument("not a rational number: '" + text + "'");
    }
  }

  std::ostream& operator<<(std::ostream& os, Rat const& r) {
    return os << r.str();
  }

  std::string Vec2::str() const {
    return "(" + x1.str() + ", " + x2.str() + ")";
  }

  std::ostream& operator<<(std::ostream& os, Vec2 const& v) {
    return os << v.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure maps
  ////////////////////////////////////////////////////////////////////////

  Rat source(Vec2 const& x) {
    return x.x1 + Rat(2) * x.x2;
  }

  Rat target(Vec2 const& x) {
    return x.x1 + x.x2;
  }

  Vec2 unit(Rat const& u) {
    return {u, Rat(0)};
  }

  Vec2 inverse(Vec2 const& x) {
    return {x.x1 + Rat(3) * x.x2, -x.x2};
  }

  namespace {

    Rat composability_rhs(Vec2 const& x, Vec2 const& y) {
      return -x.x1 + y.x1 + Rat(2) * y.x2;
    }

  }  // namespace

  bool composable(Vec2 const& x, Vec2 const& y) {
    return x.x2 == composability_rhs(x, y);
  }

  Vec2 product(Vec2 const& x, Vec2 const& y) {
    if (!composable(x, y)) {
      throw NotComposable("not composable: " + x.x2.str() + " != " + composability_rhs(x, y).str()
                          + " (x2 versus -x1 + y1 + 2 y2)");
    }
    return {x.x1 - Rat(2) * y.x2, x.x2 + y.x2};
  }

  Point evaluate(Fn fn, Point const& p) {
    if (fn == Fn::eps) {
      if (auto const* u = std::get_if<Rat>(&p)) {
        return unit(*u);
      }
      throw InvalidInput("eps takes a single coordinate");
    }
    auto const* x = std::get_if<Vec2>(&p);
    if (x == nullptr) {
      throw InvalidInput("alpha, beta and inv take a point (x1, x2)");
    }
    switch (fn) {
      case Fn::alpha:
        return source(*x);
      case Fn::beta:
        return target(*x);
      default:
        return inverse(*x);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Sampled verification
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class Sampler {
     public:
      explicit Sampler(std::uint64_t seed) : rng_(seed) {}

      Rat rat() {
        std::int64_t num = numerators_(rng_);
        std::int64_t den = denominators_(rng_);
        return Rat(num, den);
      }

      Vec2 vec() {
        Rat a = rat();
        Rat b = rat();
        return {a, b};
      }

      // A partner y with (x, y) composable: y1 solved from a random y2.
      Vec2 right_partner(Vec2 const& x) {
        Rat y2 = rat();
        return {x.x1 + x.x2 - Rat(2) * y2, y2};
      }

     private:
      std::mt19937_64                             rng_;
      std::uniform_int_distribution<std::int64_t> numerators_{-100, 100};
      std::uniform_int_distribution<std::int64_t> denominators_{1, 10};
    };

  }  // namespace

  ValidationReport verify(std::size_t samples, std::uint64_t seed) {
    ValidationReport report;
    Sampler          draw(seed);
    // Zero-padded so witnesses sort by sample index.
    std::size_t const width = std::to_string(samples == 0 ? 0 : samples - 1).size();

    for (std::size_t i = 0; i < samples; ++i) {
      Vec2 const x = draw.vec();
      Vec2 const z = draw.vec();
      Rat const  u = draw.rat();
      Rat const  v = draw.rat();
      Vec2 const y = draw.right_partner(x);
      Vec2 const t = draw.right_partner(z);
      Vec2 const w = draw.right_partner(y);

      std::string index = std::to_string(i);
      std::string const tag = "sample " + std::string(width - index.size(), '0') + index;
      auto fail = [&](char const* rule, std::initializer_list<std::string> pts, char const* msg) {
        Witness witness{tag};
        witness.insert(witness.end(), pts);
        report.add(rule, std::move(witness), msg);
      };

      // Products and associativity.
      if (!composable(x, y) || !composable(z, t) || !composable(y, w)) {
        fail("sampling", {x.str(), y.str()}, "constructed partner is not composable");
        continue;
      }
      Vec2 const xy = product(x, y);
      Vec2 const yw = product(y, w);
      if (source(xy) != source(x)) {
        fail("product-source", {x.str(), y.str()}, "source(x.y) differs from source(x)");
      }
      if (target(xy) != target(y)) {
        fail("product-target", {x.str(), y.str()}, "target(x.y) differs from target(y)");
      }
      if (!composable(xy, w) || !composable(x, yw)) {
        fail("associativity", {x.str(), y.str(), w.str()}, "a bracketing is undefined");
      } else if (product(xy, w) != product(x, yw)) {
        fail("associativity", {x.str(), y.str(), w.str()}, "(x.y).w differs from x.(y.w)");
      }

      // Units and inverses, at x and at the unit arrow over u.
      for (Vec2 const& p : {x, unit(u)}) {
        Vec2 const left  = unit(source(p));
        Vec2 const right = unit(target(p));
        if (!composable(left, p) || product(left, p) != p) {
          fail("left-unit", {p.str()}, "unit(source(p)).p differs from p");
        }
        if (!composable(p, right) || product(p, right) != p) {
          fail("right-unit", {p.str()}, "p.unit(target(p)) differs from p");
        }
        Vec2 const pi = inverse(p);
        if (!composable(pi, p) || product(pi, p) != right) {
          fail("left-inverse", {p.str()}, "p^-1.p differs from unit(target(p))");
        }
        if (!composable(p, pi) || product(p, pi) != left) {
          fail("right-inverse", {p.str()}, "p.p^-1 differs from unit(source(p))");
        }
      }

      // Identities between the structure maps.
      if (source(inverse(x)) != target(x)) {
        fail("source-of-inverse", {x.str()}, "source(x^-1) differs from target(x)");
      }
      if (target(inverse(x)) != source(x)) {
        fail("target-of-inverse", {x.str()}, "target(x^-1) differs from source(x)");
      }
      if (inverse(inverse(x)) != x) {
        fail("inverse-involution", {x.str()}, "(x^-1)^-1 differs from x");
      }
      if (inverse(unit(u)) != unit(u)) {
        fail("unit-self-inverse", {u.str()}, "unit(u)^-1 differs from unit(u)");
      }
      if (source(unit(u)) != u || target(unit(u)) != u) {
        fail("unit-endpoints", {u.str()}, "unit(u) does not start and end at u");
      }

      // Structure maps are additive.
      if (source(x + z) != source(x) + source(z)) {
        fail("source-hom", {x.str(), z.str()}, "source(x+z) differs from source(x)+source(z)");
      }
      if (target(x + z) != target(x) + target(z)) {
        fail("target-hom", {x.str(), z.str()}, "target(x+z) differs from target(x)+target(z)");
      }
      if (inverse(x + z) != inverse(x) + inverse(z)) {
        fail("inversion-hom", {x.str(), z.str()}, "(x+z)^-1 differs from x^-1+z^-1");
      }
      if (unit(u + v) != unit(u) + unit(v)) {
        fail("unit-hom", {u.str(), v.str()}, "unit(u+v) differs from unit(u)+unit(v)");
      }
      if (x + z != z + x || u + v != v + u) {
        fail("commutative", {x.str(), z.str()}, "addition does not commute");
      }

      // Interchange law.
      Vec2 const xz = x + z;
      Vec2 const yt = y + t;
      if (!composable(xz, yt)) {
        fail("interchange", {x.str(), y.str(), z.str(), t.str()}, "(x+z, y+t) is not composable");
      } else if (product(x, y) + product(z, t) != product(xz, yt)) {
        fail("interchange", {x.str(), y.str(), z.str(), t.str()},
             "(x.y)+(z.t) differs from (x+z).(y+t)");
      }
    }
    report.note("samples", "checked", std::to_string(samples) + " samples, seed " + std::to_string(seed));
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Quadrilaterals
  ////////////////////////////////////////////////////////////////////////

  namespace {

    Vec2 midpoint(Vec2 const& p, Vec2 const& q) {
      Rat const half(1, 2);
      return {(p.x1 + q.x1) * half, (p.x2 + q.x2) * half};
    }

    Rat squared_distance(Vec2 const& p, Vec2 const& q) {
      Rat dx = q.x1 - p.x1;
      Rat dy = q.x2 - p.x2;
      return dx * dx + dy * dy;
    }

    std::optional<Rat> slope(Vec2 const& p, Vec2 const& q) {
      Rat dx = q.x1 - p.x1;
      if (dx.is_zero()) {
        return std::nullopt;
      }
      return (q.x2 - p.x2) / dx;
    }

    // Diagonals P1P3 and P2P4; sides (s0, s1) and (s2, s3) are compared for
    // slope -1/2 and the expected squared length.
    void assess(Quadrilateral& q, std::array<std::size_t, 4> sides, Rat const& free) {
      auto const& P          = q.points;
      q.diagonal_midpoint_13 = midpoint(P[0], P[2]);
      q.diagonal_midpoint_24 = midpoint(P[1], P[3]);
      q.parallelogram        = q.diagonal_midpoint_13 == q.diagonal_midpoint_24;
      if (!q.parallelogram) {
        q.report.add("parallelogram", {q.diagonal_midpoint_13.str(), q.diagonal_midpoint_24.str()},
                     "diagonal midpoints differ");
      }
      if (free.is_zero()) {
        q.degenerate = true;
        q.report.note("degenerate", "degenerate", "free parameter is zero; two vertices coincide");
        return;
      }
      auto s1 = slope(P[sides[0]], P[sides[1]]);
      auto s2 = slope(P[sides[2]], P[sides[3]]);
      if (!s1 || !s2) {
        q.report.add("slope", {}, "a side is vertical");
      } else {
        q.slopes = {*s1, *s2};
        for (auto const& s : *q.slopes) {
          if (s != Rat(-1, 2)) {
            q.report.add("slope", {s.str()}, "side slope differs from -1/2");
          }
        }
      }
      Rat const expected     = Rat(5) * free * free;
      q.expected_squared_length = expected;
      q.squared_lengths      = std::array<Rat, 2>{squared_distance(P[sides[0]], P[sides[1]]),
                                             squared_distance(P[sides[2]], P[sides[3]])};
      for (auto const& d : *q.squared_lengths) {
        if (d != expected) {
          q.report.add("squared-length", {d.str(), expected.str()},
                       "squared side length differs from 5 times the squared parameter");
        }
      }
    }

  }  // namespace

  Quadrilateral quadrilateral_a(Rat const& a, Rat const& b, Rat const& c) {
    Vec2 const    x{a, -a + b + Rat(2) * c};
    Vec2 const    y{b, c};
    Quadrilateral q{};
    q.kind   = QuadKind::A;
    q.points = {unit(target(x)), x, product(x, y), y};
    assess(q, {0, 3, 1, 2}, c);
    return q;
  }

  Quadrilateral quadrilateral_b(Vec2 const& x) {
    Quadrilateral q{};
    q.kind   = QuadKind::B;
    q.points = {unit(source(x)), x, unit(target(x)), inverse(x)};
    assess(q, {0, 1, 2, 3}, x.x2);
    return q;
  }

}  // namespace grpd::affine
