#include <doctest.h>

#include <random>

#include "grpd/error.hpp"
#include "grpd/group.hpp"
#include "oracle.hpp"

using namespace grpd;

namespace {

  GroupTable from_oracle(GroupTables const& t) { return GroupTable(t); }

  std::vector<std::size_t> indices(GroupTable const& t, std::vector<std::string> const& tokens) {
    std::vector<std::size_t> out;
    for (auto const& s : tokens) {
      out.push_back(t.index_of(s));
    }
    return out;
  }

}  // namespace

TEST_CASE("cyclic and symmetric groups validate") {
  CHECK(validate_group(cyclic_group(3)).valid());
  CHECK(validate_group(symmetric_group(3)).valid());
  CHECK(symmetric_group(3).order() == 6);
  CHECK(validate_group(named_group("Z2xZ2")).valid());
  CHECK(named_group("Z2xZ2").order() == 4);
  CHECK_THROWS_AS(named_group("Q8"), InvalidInput);
}

TEST_CASE("cyclic group matches modular arithmetic") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(cyclic_group(n).tables() == oracle::cyclic(n));
  }
}

TEST_CASE("constant operation has no identity") {
  GroupTables t;
  t.elements = {"0", "1"};
  for (auto a : {"0", "1"}) {
    for (auto b : {"0", "1"}) {
      t.op[{a, b}] = "0";
    }
  }
  t.identity   = "0";
  t.inverse    = {{"0", "0"}, {"1", "1"}};
  auto report  = validate_group(GroupTable(t));
  CHECK_FALSE(report.valid());
  CHECK(report.has_violation("left-identity", {"1"}));
  CHECK(report.has_violation("right-identity", {"1"}));
  CHECK_FALSE(oracle::is_group(t));
}

TEST_CASE("missing table entries are closure violations, undeclared tokens are errors") {
  auto t = oracle::cyclic(3);
  t.op.erase({"1", "2"});
  auto report = validate_group(GroupTable(t));
  CHECK(report.has_violation("closure", {"1", "2"}));

  auto u            = oracle::cyclic(3);
  u.op[{"1", "2"}] = "7";
  CHECK_THROWS_AS(GroupTable{u}, MalformedTable);

  auto v = oracle::cyclic(3);
  v.inverse.erase("2");
  CHECK_THROWS_AS(GroupTable{v}, MalformedTable);
}

TEST_CASE("S3 has 216 associativity triples and a non-commuting pair") {
  auto s3 = symmetric_group(3);
  CHECK(validate_group(s3).valid());
  CHECK_FALSE(is_commutative(s3));
  auto pair = non_commuting_pair(s3);
  REQUIRE(pair);
  CHECK(s3.op(pair->first, pair->second) != s3.op(pair->second, pair->first));
  CHECK(oracle::is_group(s3.tables()));
  CHECK_FALSE(oracle::is_commutative(s3.tables()));
}

TEST_CASE("homomorphisms out of Z2 x Z2") {
  auto v  = named_group("Z2xZ2");
  auto z2 = cyclic_group(2);

  std::map<std::string, std::string> first, constant, logical_and;
  for (auto a : {"0", "1"}) {
    for (auto b : {"0", "1"}) {
      std::string key    = pair_token(a, b);
      first[key]         = a;
      constant[key]      = "0";
      logical_and[key]   = (std::string(a) == "1" && std::string(b) == "1") ? "1" : "0";
    }
  }
  CHECK(is_group_hom(first, v, z2));
  CHECK(is_group_hom(constant, v, z2));
  CHECK_FALSE(is_group_hom(logical_and, v, z2));

  std::vector<std::size_t> f(v.order());
  for (std::size_t i = 0; i < v.order(); ++i) {
    f[i] = z2.index_of(logical_and.at(v.element(i)));
  }
  auto report = check_group_hom(f, v, z2);
  CHECK(report.has_violation("group-hom", {"(1|0)", "(0|1)"}));

  std::vector<std::size_t> partial{0, 0};
  CHECK_THROWS_AS(check_group_hom(partial, v, z2), DomainMismatch);
}

TEST_CASE("subgroups") {
  auto z4 = cyclic_group(4);
  CHECK(check_subgroup(z4, indices(z4, {"0", "2"})).valid());
  auto bad = check_subgroup(z4, indices(z4, {"0", "1"}));
  CHECK(bad.has_violation("subgroup-op-closed", {"1", "1"}));
  CHECK(bad.has_violation("subgroup-inverse-closed", {"1"}));
  CHECK(check_subgroup(z4, indices(z4, {"2"})).has_rule("subgroup-identity"));
  CHECK(check_subgroup(z4, {}).has_rule("subgroup-nonempty"));
}

TEST_CASE("isomorphism search") {
  CHECK(find_isomorphism(cyclic_group(4), cyclic_group(4)));
  CHECK_FALSE(find_isomorphism(cyclic_group(4), named_group("Z2xZ2")));
  CHECK_FALSE(find_isomorphism(cyclic_group(6), symmetric_group(3)));
  CHECK(find_isomorphism(named_group("Z2xZ3"), cyclic_group(6)));
}

TEST_CASE("property: group inverse is an involution and reverses products") {
  for (auto const* spec : {"Z1", "Z5", "S3", "Z2xZ2", "Z2xS3", "S4"}) {
    auto t = named_group(spec);
    for (std::size_t a = 0; a < t.order(); ++a) {
      CHECK(t.inverse(t.inverse(a)) == a);
      for (std::size_t b = 0; b < t.order(); ++b) {
        CHECK(t.inverse(t.op(a, b)) == t.op(t.inverse(b), t.inverse(a)));
      }
    }
  }
}

TEST_CASE("property: relabelled groups stay groups and agree with the oracle") {
  std::mt19937 rng(11);
  for (int round = 0; round < 40; ++round) {
    auto base = named_group(round % 2 ? "S3" : "Z2xZ3").tables();
    auto t    = oracle::transport(base, rng);
    CHECK(validate_group(from_oracle(t)).valid() == oracle::is_group(t));
    CHECK(validate_group(from_oracle(t)).valid());
  }
}

TEST_CASE("property: random single-entry mutations agree with the oracle") {
  std::mt19937 rng(5);
  auto         base = named_group("S3").tables();
  std::vector<TokenPair> keys;
  for (auto const& [k, v] : base.op) {
    keys.push_back(k);
  }
  for (int round = 0; round < 200; ++round) {
    auto t   = base;
    auto key = keys[rng() % keys.size()];
    t.op[key] = t.elements[rng() % t.elements.size()];
    CHECK(validate_group(from_oracle(t)).valid() == oracle::is_group(t));
  }
}

TEST_CASE("reindexing preserves the group") {
  auto                     s3 = symmetric_group(3);
  std::vector<std::string> order(s3.elements().rbegin(), s3.elements().rend());
  auto                     r = s3.reindexed(order);
  CHECK(r.elements() == order);
  CHECK(r.tables().op == s3.tables().op);
  CHECK(r.tables().identity == s3.tables().identity);
}
