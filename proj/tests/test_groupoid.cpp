#include <doctest.h>

#include <random>

#include "grpd/constructions.hpp"
#include "grpd/error.hpp"
#include "grpd/groupoid.hpp"
#include "oracle.hpp"

using namespace grpd;

namespace {

  std::string p(std::string const& a, std::string const& b) { return pair_token(a, b); }

}  // namespace

TEST_CASE("pair groupoid on two objects validates") {
  auto g = pair_groupoid({"a", "b"});
  CHECK(g.num_arrows() == 4);
  CHECK(validate_groupoid(g).valid());
  CHECK(oracle::is_groupoid(g.tables()));
  CHECK(g.arrow(g.inverse(g.arrow_index(p("a", "b")))) == p("b", "a"));
}

TEST_CASE("null groupoid on one object validates") {
  auto g = null_groupoid({"u"});
  CHECK(g.num_arrows() == 1);
  CHECK(validate_groupoid(g).valid());
}

TEST_CASE("rewritten product entry is caught with its witness") {
  auto t                                = pair_groupoid({"a", "b"}).tables();
  t.product[{p("a", "b"), p("b", "a")}] = p("b", "b");
  auto report                           = validate_groupoid(FiniteGroupoid(t));
  CHECK(report.has_violation("product-source", {p("a", "b"), p("b", "a")}));
  CHECK_FALSE(oracle::is_groupoid(t));
}

TEST_CASE("product table domain must equal the composable pairs") {
  auto t = pair_groupoid({"a", "b"}).tables();
  t.product.erase({p("a", "b"), p("b", "b")});
  t.product[{p("a", "b"), p("a", "b")}] = p("a", "b");
  auto report = validate_groupoid(FiniteGroupoid(t));
  CHECK(report.has_violation("product-domain-missing", {p("a", "b"), p("b", "b")}));
  CHECK(report.has_violation("product-domain-extra", {p("a", "b"), p("a", "b")}));
}

TEST_CASE("dangling identifiers are errors, not violations") {
  auto t             = pair_groupoid({"a", "b"}).tables();
  t.source[p("a", "b")] = "c";
  CHECK_THROWS_AS(FiniteGroupoid{t}, MalformedStructure);

  auto u = pair_groupoid({"a", "b"}).tables();
  u.inverse.erase(p("a", "b"));
  CHECK_THROWS_AS(FiniteGroupoid{u}, MalformedStructure);

  auto v = pair_groupoid({"a", "b"}).tables();
  v.arrows.push_back(p("a", "a"));
  CHECK_THROWS_AS(FiniteGroupoid{v}, MalformedStructure);
}

TEST_CASE("composable") {
  auto g = pair_groupoid({"a", "b"});
  CHECK(composable(g, p("a", "b"), p("b", "a")));
  CHECK_FALSE(composable(g, p("a", "b"), p("a", "b")));
  CHECK_THROWS_AS(composable(g, "x", p("a", "b")), UnknownArrow);

  auto z2 = group_as_single_unit_groupoid(cyclic_group(2));
  for (auto const& x : z2.arrows()) {
    for (auto const& y : z2.arrows()) {
      CHECK(composable(z2, x, y));
    }
  }
  CHECK(z2.num_objects() == 1);
  CHECK(oracle::count_composable(z2.tables()) == 4);
}

TEST_CASE("multiply refuses pairs outside the composable set") {
  auto g = pair_groupoid({"a", "b"});
  auto x = g.arrow_index(p("a", "b"));
  CHECK_THROWS_AS(g.multiply(x, x), NotComposable);
  CHECK(g.arrow(g.multiply(x, g.arrow_index(p("b", "a")))) == p("a", "a"));
}

TEST_CASE("fibres") {
  auto g = pair_groupoid({"a", "b", "c"});
  CHECK(fiber(g, Side::source, "a") == std::set<std::string>{p("a", "a"), p("a", "b"), p("a", "c")});
  CHECK(fiber(g, Side::target, "c") == std::set<std::string>{p("a", "c"), p("b", "c"), p("c", "c")});
  CHECK(fiber(null_groupoid({"u"}), Side::target, "u") == std::set<std::string>{"u"});
  CHECK_THROWS_AS(fiber(g, Side::source, "z"), UnknownObject);
}

TEST_CASE("isotropy groups") {
  auto g = pair_groupoid({"a", "b"});
  CHECK(isotropy_group(g, "a").order() == 1);

  auto z2 = group_as_single_unit_groupoid(cyclic_group(2));
  auto t  = isotropy_group(z2, "0");
  CHECK(t.order() == 2);
  CHECK(t.tables() == cyclic_group(2).tables());
  CHECK_THROWS_AS(isotropy_group(g, "z"), UnknownObject);
}

TEST_CASE("transitivity") {
  CHECK(is_transitive(pair_groupoid({"a", "b", "c"})));
  CHECK_FALSE(is_transitive(null_groupoid({"u", "v"})));
  CHECK(is_transitive(group_as_single_unit_groupoid(symmetric_group(3))));
}

TEST_CASE("conjugation") {
  auto g = pair_groupoid({"a", "b"});
  auto c = conjugation_iso(g, p("a", "b"));
  CHECK(c == std::map<std::string, std::string>{{p("a", "a"), p("b", "b")}});

  auto s3 = group_as_single_unit_groupoid(symmetric_group(3));
  auto id = conjugation_iso(s3, "012");
  for (auto const& [z, w] : id) {
    CHECK(z == w);
  }
  CHECK(id.size() == 6);
  // Conjugation by a transposition moves the other transpositions.
  auto swap = conjugation_iso(s3, "102");
  CHECK(swap.at("021") == "210");
}

TEST_CASE("structure identities hold on valid groupoids") {
  CHECK(structure_identities(pair_groupoid({"a", "b", "c"})).valid());
  CHECK(structure_identities(null_groupoid({"u"})).valid());
  CHECK(structure_identities(group_as_single_unit_groupoid(symmetric_group(3))).valid());
}

TEST_CASE("broken inverse companions flag the involution identity") {
  auto t = pair_groupoid({"a", "b"}).tables();
  // (a|b) still inverts to (b|a), but (b|a) now inverts to (a|a).
  t.inverse[p("b", "a")] = p("a", "a");
  auto g = FiniteGroupoid(t);
  CHECK_FALSE(validate_groupoid(g).valid());
  CHECK(structure_identities(g).has_violation("inverse-involution", {p("a", "b")}));
}

TEST_CASE("isotropy isomorphism is skipped above the search cap") {
  // Pair groupoid times a single-unit groupoid on Z13: transitive, every
  // isotropy group has order 13.
  auto big = direct_product_groupoids(pair_groupoid({"a", "b"}),
                                      group_as_single_unit_groupoid(cyclic_group(13)));
  auto r   = structure_identities(big);
  CHECK(r.valid());
  CHECK(r.has_note("isotropy-isomorphic", "skipped"));

  auto small = direct_product_groupoids(pair_groupoid({"a", "b"}),
                                        group_as_single_unit_groupoid(cyclic_group(3)));
  auto s     = structure_identities(small);
  CHECK(s.valid());
  CHECK_FALSE(s.has_note("isotropy-isomorphic", "skipped"));
}

TEST_CASE("surjectivity can be downgraded to a warning") {
  GroupoidTables t;
  t.objects = {"u", "w"};
  t.arrows  = {"x"};
  t.source  = {{"x", "u"}};
  t.target  = {{"x", "u"}};
  t.unit    = {{"u", "x"}, {"w", "x"}};
  t.inverse = {{"x", "x"}};
  t.product = {{{"x", "x"}, "x"}};
  FiniteGroupoid g(t);

  auto strict = validate_groupoid(g);
  CHECK(strict.has_violation("source-surjective", {"w"}));
  CHECK(strict.has_violation("target-surjective", {"w"}));

  auto relaxed = validate_groupoid(g, {.allow_nonsurjective = true});
  CHECK_FALSE(relaxed.has_rule("source-surjective"));
  CHECK(relaxed.has_note("source-surjective", "warning"));
  // The unit map is still wrong.
  CHECK(relaxed.has_rule("unit-endpoints"));
}

TEST_CASE("property: verdicts agree with the naive oracle under random mutation") {
  std::mt19937 rng(2024);
  std::vector<GroupoidTables> seeds = {
      pair_groupoid({"a", "b", "c"}).tables(),
      null_groupoid({"u", "v"}).tables(),
      group_as_single_unit_groupoid(symmetric_group(3)).tables(),
      direct_product_groupoids(pair_groupoid({"a", "b"}), null_groupoid({"u", "v"})).tables(),
  };
  int rejected = 0;
  for (int round = 0; round < 400; ++round) {
    auto t    = seeds[round % seeds.size()];
    auto pick = [&](auto const& v) { return v[rng() % v.size()]; };
    switch (rng() % 4) {
      case 0: {
        if (t.product.empty()) {
          break;
        }
        auto it = t.product.begin();
        std::advance(it, rng() % t.product.size());
        it->second = pick(t.arrows);
        break;
      }
      case 1:
        t.inverse[pick(t.arrows)] = pick(t.arrows);
        break;
      case 2:
        t.unit[pick(t.objects)] = pick(t.arrows);
        break;
      default:
        t.target[pick(t.arrows)] = pick(t.objects);
        break;
    }
    FiniteGroupoid g(t);
    bool           valid = validate_groupoid(g).valid();
    CHECK(valid == oracle::is_groupoid(t));
    rejected += valid ? 0 : 1;
    if (valid) {
      CHECK(structure_identities(g).valid());
    }
  }
  // The generator must actually produce broken tables.
  CHECK(rejected > 100);
}

TEST_CASE("property: identities on every arrow of valid groupoids") {
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<std::string> objs;
    for (std::size_t i = 0; i < k; ++i) {
      objs.push_back("o" + std::to_string(i));
    }
    auto g = direct_product_groupoids(pair_groupoid(objs), group_as_single_unit_groupoid(cyclic_group(k)));
    REQUIRE(validate_groupoid(g).valid());
    for (std::size_t x = 0; x < g.num_arrows(); ++x) {
      CHECK(g.inverse(g.inverse(x)) == x);
      CHECK(g.source(g.inverse(x)) == g.target(x));
      CHECK(g.target(g.inverse(x)) == g.source(x));
      for (std::size_t y = 0; y < g.num_arrows(); ++y) {
        if (g.composable(x, y)) {
          auto xy = g.multiply(x, y);
          CHECK(g.source(xy) == g.source(x));
          CHECK(g.target(xy) == g.target(y));
          CHECK(g.inverse(xy) == g.multiply(g.inverse(y), g.inverse(x)));
        }
      }
    }
    for (std::size_t u = 0; u < g.num_objects(); ++u) {
      auto e = g.unit(u);
      CHECK(g.multiply(e, e) == e);
      CHECK(g.inverse(e) == e);
    }
  }
}
