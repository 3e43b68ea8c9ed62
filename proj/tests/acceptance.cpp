// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Thresholds are pinned below.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grpd/affine.hpp"
#include "grpd/cli.hpp"
#include "grpd/constructions.hpp"
#include "grpd/error.hpp"
#include "grpd/group_groupoid.hpp"
#include "grpd/structure_file.hpp"
#include "grpd/substructures.hpp"

using namespace grpd;
using grpd::affine::Rat;

namespace {

  constexpr std::size_t   min_mutations     = 20;
  constexpr std::size_t   max_mutations     = 40;
  constexpr double        max_runtime_s     = 10.0;
  constexpr std::size_t   affine_samples    = 200;
  constexpr std::uint64_t affine_seed       = 1;
  constexpr unsigned      mutation_seed     = 20240;
  constexpr std::size_t   max_pair_size     = 5;
  constexpr std::size_t   interchange_arity = 4;
  constexpr int           cli_repeats       = 3;

  std::string const data_dir = GRPD_DATA_DIR;

  struct Member {
    std::string   name;
    GroupGroupoid gg;
    bool          non_commutative;
  };

  std::vector<Member> corpus() {
    auto                z2 = cyclic_group(2);
    std::vector<Member> c;
    c.push_back({"null(Z2)", null_group_groupoid(z2), false});
    c.push_back({"null(S3)", null_group_groupoid(symmetric_group(3)), true});
    c.push_back({"single-unit(Z2)", single_unit_group_groupoid(z2), false});
    c.push_back({"single-unit(Z4)", single_unit_group_groupoid(cyclic_group(4)), false});
    c.push_back({"single-unit(Z2xZ2)", single_unit_group_groupoid(direct_product_groups(z2, z2)), false});
    c.push_back({"pair(Z2)", group_pair_groupoid(z2), false});
    c.push_back({"pair(Z3)", group_pair_groupoid(cyclic_group(3)), false});
    c.push_back({"pair(Z4)", group_pair_groupoid(cyclic_group(4)), false});
    c.push_back({"pair(Z2)xnull(Z2)",
                 direct_product_group_groupoids(group_pair_groupoid(z2), null_group_groupoid(z2)).product,
                 false});
    return c;
  }

  bool has_prefix(ValidationReport const& r, std::string_view prefix) {
    return std::any_of(r.violations().begin(), r.violations().end(),
                       [&](Violation const& v) { return v.rule.starts_with(prefix); });
  }

  std::string describe(ValidationReport const& r) {
    if (r.valid()) {
      return "valid";
    }
    auto const& v = *r.violations().begin();
    std::string w;
    for (auto const& t : v.witness) {
      w += (w.empty() ? "" : ",") + t;
    }
    return v.rule + "(" + w + ")";
  }

  using Mutation = std::function<void(GroupGroupoidTables&)>;
  using TokenMap = std::map<std::string, std::string>;
  using PairMap  = std::map<TokenPair, std::string>;

  // Entry replaced by each other value, or removed when the table may be partial.
  template <class Map, class Get>
  void perturb(std::vector<Mutation>& out, Map const& table, Get get,
               std::vector<std::string> const& values, bool removable) {
    for (auto const& [key, value] : table) {
      if (removable) {
        out.push_back([=](GroupGroupoidTables& m) { get(m).erase(key); });
      }
      for (auto const& v : values) {
        if (v != value) {
          out.push_back([=](GroupGroupoidTables& m) { get(m)[key] = v; });
        }
      }
    }
  }

  std::vector<Mutation> mutations(GroupGroupoidTables const& t) {
    std::vector<Mutation> out;
    auto const&           arrows  = t.base.arrows;
    auto const&           objects = t.base.objects;
    perturb(out, t.base.product, [](GroupGroupoidTables& m) -> PairMap& { return m.base.product; }, arrows, true);
    perturb(out, t.base.inverse, [](GroupGroupoidTables& m) -> TokenMap& { return m.base.inverse; }, arrows, false);
    perturb(out, t.arrow_group.op, [](GroupGroupoidTables& m) -> PairMap& { return m.arrow_group.op; }, arrows, true);
    perturb(out, t.arrow_group.inverse, [](GroupGroupoidTables& m) -> TokenMap& { return m.arrow_group.inverse; },
            arrows, false);
    perturb(out, t.object_group.op, [](GroupGroupoidTables& m) -> PairMap& { return m.object_group.op; }, objects,
            true);
    perturb(out, t.object_group.inverse, [](GroupGroupoidTables& m) -> TokenMap& { return m.object_group.inverse; },
            objects, false);
    return out;
  }

  struct Outcome {
    bool        pass = true;
    std::string detail;

    void fail(std::string const& why) {
      if (pass) {
        detail = why;
      }
      pass = false;
    }
  };

  // 1. Both characterisations accept the corpus and reject every mutation.
  Outcome definition_equivalence(std::vector<Member> const& c) {
    Outcome         o;
    auto            start = std::chrono::steady_clock::now();
    std::mt19937    rng(mutation_seed);
    std::size_t     fewest = SIZE_MAX;
    for (auto const& m : c) {
      auto r = check_group_groupoid(m.gg, GroupGroupoidMode::both);
      if (!r.valid()) {
        o.fail(m.name + ": " + describe(r));
      }
      auto tables = m.gg.tables();
      auto all    = mutations(tables);
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(std::min(all.size(), max_mutations));
      fewest = std::min(fewest, all.size());
      for (auto const& mutate : all) {
        auto t = tables;
        mutate(t);
        ValidationReport mr;
        try {
          mr = check_group_groupoid(GroupGroupoid(t), GroupGroupoidMode::both);
        } catch (Error const& e) {
          o.fail(m.name + ": mutation did not build: " + e.what());
          continue;
        }
        if (!has_prefix(mr, "def31.") || !has_prefix(mr, "def32.") || mr.has_rule("disagreement")) {
          o.fail(m.name + ": mutation not rejected by both: " + describe(mr));
        }
      }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (fewest < min_mutations) {
      o.fail("only " + std::to_string(fewest) + " mutations for some member");
    }
    if (secs >= max_runtime_s) {
      o.fail("runtime " + std::to_string(secs) + " s");
    }
    if (o.pass) {
      std::ostringstream s;
      s << "min " << fewest << " mutations/member, " << secs << " s";
      o.detail = s.str();
    }
    return o;
  }

  // 2. Products and inverses recomputed from the group structure.
  Outcome reconstruction(std::vector<Member> const& c) {
    Outcome o;
    for (auto const& m : c) {
      auto r = reconstruct_from_group(m.gg);
      if (!r.valid()) {
        o.fail(m.name + ": " + describe(r));
      }
    }
    return o;
  }

  // 3. Derived identities; the commutative-only one is skipped exactly for S3.
  Outcome derived_identities(std::vector<Member> const& c) {
    Outcome o;
    for (auto const& m : c) {
      auto r = check_derived_identities(m.gg);
      r.merge(structure_identities(m.gg.base()), "groupoid.");
      if (!r.valid()) {
        o.fail(m.name + ": " + describe(r));
      }
      bool skipped = std::any_of(r.notes().begin(), r.notes().end(),
                                 [](Note const& n) { return n.status == "not-applicable"; });
      if (skipped != m.non_commutative) {
        o.fail(m.name + ": not-applicable note " + (skipped ? "present" : "missing"));
      }
    }
    return o;
  }

  // Closed under the arrow group, with identity and inverses.
  bool is_arrow_subgroup(GroupGroupoid const& gg, std::set<std::string> const& s) {
    std::vector<std::size_t> idx;
    for (auto const& a : s) {
      idx.push_back(gg.base().arrow_index(a));
    }
    return check_subgroup(gg.arrow_group(), idx).valid();
  }

  // 4. Isotropy bundle and unit fibres.
  Outcome substructures(std::vector<Member> const& c) {
    Outcome o;
    for (auto const& m : c) {
      try {
        auto const& g   = m.gg.base();
        auto        is  = isotropy_bundle(m.gg);
        auto        fib = unit_fiber_subgroups(m.gg);
        auto        e0  = g.object(m.gg.object_group().identity());
        auto        r   = check_group_subgroupoid(m.gg, is);
        r.merge(check_group_subgroupoid(m.gg, SubStructure{fib.isotropy, {e0}}), "loops.");
        if (!r.valid()) {
          o.fail(m.name + ": " + describe(r));
        }
        if (!is_arrow_subgroup(m.gg, fib.source_fiber) || !is_arrow_subgroup(m.gg, fib.target_fiber)) {
          o.fail(m.name + ": unit fibre is not a subgroup");
        }
        if (m.name.starts_with("pair(Z") && m.name.find('x') == std::string::npos) {
          std::size_t n = g.num_objects();
          if (is.arrows.size() != n || fib.source_fiber.size() != n) {
            o.fail(m.name + ": |Is| = " + std::to_string(is.arrows.size()) + ", |source fibre| = "
                   + std::to_string(fib.source_fiber.size()));
          }
        }
      } catch (Error const& e) {
        o.fail(m.name + ": " + e.what());
      }
    }
    return o;
  }

  // 9 collects every morphism accepted along the way.
  std::vector<Morphism> accepted;

  // 5. Anchor morphism into the pair groupoid over the objects.
  Outcome anchor(std::vector<Member> const& c) {
    Outcome o;
    for (auto const& m : c) {
      try {
        auto a = anchor_morphism(m.gg);
        auto r = validate_gg_morphism(a.map, m.gg, a.target);
        if (!r.valid()) {
          o.fail(m.name + ": " + describe(r));
        } else {
          accepted.push_back(a.map);
        }
      } catch (Error const& e) {
        o.fail(m.name + ": " + e.what());
      }
    }
    return o;
  }

  // 6. Single-unit overlay on S3 violates interchange.
  Outcome negative_control() {
    Outcome o;
    auto    r = check_group_groupoid(single_unit_overlay(symmetric_group(3)), GroupGroupoidMode::both);
    auto    it =
        std::find_if(r.violations().begin(), r.violations().end(), [](Violation const& v) {
          return v.rule == "def32.interchange" && v.witness.size() == interchange_arity;
        });
    if (r.valid() || it == r.violations().end()) {
      o.fail("no interchange witness: " + describe(r));
    } else {
      std::string w;
      for (auto const& t : it->witness) {
        w += (w.empty() ? "" : ",") + t;
      }
      o.detail = "witness (" + w + ")";
    }
    return o;
  }

  // 7. Affine example in exact arithmetic.
  Outcome affine_example() {
    Outcome o;
    auto    v = affine::verify(affine_samples, affine_seed);
    if (!v.valid()) {
      o.fail("verify: " + describe(v));
    }
    auto       a    = affine::quadrilateral_a(1, 0, 1);
    affine::Vec2 mid{Rat(1, 2), 1};
    if (!(a.diagonal_midpoint_13 == mid && a.diagonal_midpoint_24 == mid && a.parallelogram)) {
      o.fail("kind A midpoints");
    }
    if (!a.slopes || (*a.slopes)[0] != Rat(-1, 2) || (*a.slopes)[1] != Rat(-1, 2)) {
      o.fail("kind A slopes");
    }
    if (!a.squared_lengths || (*a.squared_lengths)[0] != 5 || (*a.squared_lengths)[1] != 5) {
      o.fail("kind A squared lengths");
    }
    auto       b     = affine::quadrilateral_b({1, 1});
    affine::Vec2 mid_b{Rat(5, 2), 0};
    if (!(b.diagonal_midpoint_13 == mid_b && b.diagonal_midpoint_24 == mid_b && b.parallelogram)) {
      o.fail("kind B midpoints");
    }
    return o;
  }

  // 8. Pair groupoids are transitive with trivial isotropy.
  Outcome pair_groupoids() {
    Outcome                  o;
    std::vector<std::string> xs;
    for (std::size_t n = 1; n <= max_pair_size; ++n) {
      xs.push_back("p" + std::to_string(n));
      auto g = pair_groupoid(xs);
      auto r = validate_groupoid(g);
      if (!r.valid()) {
        o.fail("|X| = " + std::to_string(n) + ": " + describe(r));
      }
      if (!is_transitive(g)) {
        o.fail("|X| = " + std::to_string(n) + ": not transitive");
      }
      for (auto const& u : xs) {
        if (isotropy_group(g, u).order() != 1) {
          o.fail("|X| = " + std::to_string(n) + ": isotropy at " + u);
        }
      }
    }
    return o;
  }

  // 9. Accepted morphisms commute with units and inverses, checked directly.
  Outcome morphism_consequences(std::vector<Member> const& c) {
    auto z2 = cyclic_group(2);
    auto p  = direct_product_group_groupoids(group_pair_groupoid(z2), null_group_groupoid(z2));
    for (auto const* m : {&p.first_projection, &p.second_projection}) {
      if (validate_gg_morphism(*m, p.product, m == &p.first_projection ? group_pair_groupoid(z2)
                                                                          : null_group_groupoid(z2))
              .valid()) {
        accepted.push_back(*m);
      }
    }
    for (auto const& m : c) {
      auto base = m.gg.base_ptr();
      std::vector<std::size_t> ida(base->num_arrows()), ido(base->num_objects());
      std::iota(ida.begin(), ida.end(), std::size_t{0});
      std::iota(ido.begin(), ido.end(), std::size_t{0});
      Morphism id(base, base, ida, ido);
      if (validate_morphism(id).valid()) {
        accepted.push_back(id);
      }
    }
    for (auto const* file : {"identityZ2.gpd", "shiftZ2.gpd"}) {
      auto path = data_dir + "/" + file;
      auto lm   = load_morphism(path, std::get<MorphismTables>(read_structure_file(path)));
      if (validate_morphism(lm.morphism).valid()) {
        accepted.push_back(lm.morphism);
      }
    }

    Outcome o;
    for (auto const& f : accepted) {
      auto const& a = f.source();
      auto const& b = f.target();
      for (std::size_t u = 0; u < a.num_objects(); ++u) {
        if (f(a.unit(u)) != b.unit(f.on_object(u))) {
          o.fail("unit not preserved at " + a.object(u));
        }
      }
      for (std::size_t x = 0; x < a.num_arrows(); ++x) {
        if (f(a.inverse(x)) != b.inverse(f(x))) {
          o.fail("inverse not preserved at " + a.arrow(x));
        }
      }
    }
    if (accepted.empty()) {
      o.fail("no accepted morphisms");
    }
    if (o.pass) {
      o.detail = std::to_string(accepted.size()) + " morphisms";
    }
    return o;
  }

  // 10. CLI output is reproducible and exit codes are 0 / 1 / 2.
  Outcome cli_determinism() {
    Outcome o;
    struct Case {
      std::vector<std::string> args;
      int                      code;
    };
    std::vector<Case> cases = {
        {{"validate", data_dir + "/pairZ2.gpd"}, 0},
        {{"check", data_dir + "/s3-single-unit.gpd", "--mode", "both"}, 1},
        {{"validate", data_dir + "/malformed.gpd"}, 2},
    };
    for (auto const& fmt : {"text", "machine"}) {
      for (auto const& cs : cases) {
        auto args = cs.args;
        args.insert(args.begin(), {"--format", fmt});
        std::string first;
        for (int i = 0; i < cli_repeats; ++i) {
          std::ostringstream out, err;
          int                code = cli::run_command(args, out, err);
          if (code != cs.code) {
            o.fail(args[2] + " " + args[3] + ": exit " + std::to_string(code));
          }
          auto text = out.str() + "\x1f" + err.str();
          if (i == 0) {
            first = text;
          } else if (text != first) {
            o.fail(args[2] + " " + args[3] + ": output differs between runs");
          }
        }
      }
    }
    return o;
  }

}  // namespace

int main() {
  auto c = corpus();

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"definition equivalence", [&] { return definition_equivalence(c); }},
      {"reconstruction", [&] { return reconstruction(c); }},
      {"derived identities", [&] { return derived_identities(c); }},
      {"substructures", [&] { return substructures(c); }},
      {"anchor morphism", [&] { return anchor(c); }},
      {"negative control", [] { return negative_control(); }},
      {"affine example", [] { return affine_example(); }},
      {"pair groupoids", [] { return pair_groupoids(); }},
      {"morphism consequences", [&] { return morphism_consequences(c); }},
      {"cli determinism", [] { return cli_determinism(); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first;
    if (!o.detail.empty()) {
      std::cout << " (" << o.detail << ")";
    }
    std::cout << "\n";
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "acceptance: PASS" : "acceptance: FAIL") << " (" << criteria.size() - failed << "/"
            << criteria.size() << ")\n";
  return failed == 0 ? 0 : 1;
}
