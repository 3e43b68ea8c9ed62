#include "grpd/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>

#include "grpd/affine.hpp"
#include "grpd/constructions.hpp"
#include "grpd/error.hpp"
#include "grpd/group_groupoid.hpp"
#include "grpd/structure_file.hpp"
#include "grpd/substructures.hpp"

namespace grpd::cli {

  namespace {

    using Json = nlohmann::ordered_json;

    // Bad command-line use that CLI11 cannot see (wrong file kind, wrong
    // parameter count).
    class UsageError : public Error {
     public:
      using Error::Error;
    };

    struct Outcome {
      explicit Outcome(std::string cmd = {}) : command(std::move(cmd)) {}

      std::string      command;
      ValidationReport report;
      Json             data = Json::object();
      // Printed verbatim in text mode instead of the report layout.
      std::optional<std::string> raw_text;
    };

    ////////////////////////////////////////////////////////////////////////
    // Rendering
    ////////////////////////////////////////////////////////////////////////

    std::string scalar_text(Json const& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    }

    std::string value_text(Json const& v) {
      if (v.is_array()) {
        std::string out;
        for (auto const& e : v) {
          if (!out.empty()) {
            out += ' ';
          }
          out += e.is_array() ? "[" + value_text(e) + "]" : scalar_text(e);
        }
        return out;
      }
      if (v.is_object()) {
        std::string out;
        for (auto const& [k, e] : v.items()) {
          if (!out.empty()) {
            out += ' ';
          }
          out += k + "=" + value_text(e);
        }
        return out;
      }
      return scalar_text(v);
    }

    bool flat_object(Json const& v) {
      for (auto const& [k, e] : v.items()) {
        if (e.is_object()) {
          return false;
        }
      }
      return true;
    }

    void render_data(std::ostream& out, std::string const& prefix, Json const& data) {
      for (auto const& [k, v] : data.items()) {
        std::string key = prefix.empty() ? k : prefix + "." + k;
        if (v.is_object() && !flat_object(v)) {
          render_data(out, key, v);
        } else {
          out << key << ": " << value_text(v) << '\n';
        }
      }
    }

    std::string join_witness(Witness const& w) {
      std::string out;
      for (auto const& t : w) {
        if (!out.empty()) {
          out += ", ";
        }
        out += t;
      }
      return "(" + out + ")";
    }

    void render_text(std::ostream& out, Outcome const& o) {
      if (o.raw_text) {
        out << *o.raw_text;
        return;
      }
      render_data(out, "", o.data);
      for (auto const& v : o.report.violations()) {
        out << "violation " << v.rule << ' ' << join_witness(v.witness) << ": " << v.message << '\n';
      }
      for (auto const& n : o.report.notes()) {
        out << "note " << n.rule << " [" << n.status << "]: " << n.message << '\n';
      }
      std::size_t const count = o.report.violations().size();
      out << o.command << ": " << (count == 0 ? "PASS" : "FAIL") << " (" << count
          << (count == 1 ? " violation" : " violations") << ")\n";
    }

    void render_machine(std::ostream& out, Outcome const& o) {
      Json j;
      j["command"]    = o.command;
      j["valid"]      = o.report.valid();
      j["violations"] = Json::array();
      for (auto const& v : o.report.violations()) {
        j["violations"].push_back({{"rule", v.rule}, {"witness", v.witness}, {"message", v.message}});
      }
      j["notes"] = Json::array();
      for (auto const& n : o.report.notes()) {
        j["notes"].push_back({{"rule", n.rule}, {"status", n.status}, {"message", n.message}});
      }
      j["data"] = o.data;
      out << j.dump(2) << '\n';
    }

    ////////////////////////////////////////////////////////////////////////
    // Loading
    ////////////////////////////////////////////////////////////////////////

    GroupGroupoid require_gg(StructureFile const& file, std::string const& path, char const* command) {
      if (auto const* t = std::get_if<GroupGroupoidTables>(&file)) {
        return GroupGroupoid(*t);
      }
      throw UsageError(std::string(command) + " needs a group_groupoid file; '" + path + "' is a "
                       + std::string(kind_name(file)) + " file");
    }

    FiniteGroupoid require_groupoid(StructureFile const& file, std::string const& path, char const* command) {
      if (auto const* t = std::get_if<GroupoidTables>(&file)) {
        return FiniteGroupoid(*t);
      }
      if (auto const* t = std::get_if<GroupGroupoidTables>(&file)) {
        return GroupGroupoid(*t).base();
      }
      throw UsageError(std::string(command) + " needs a groupoid or group_groupoid file; '" + path
                       + "' is a " + std::string(kind_name(file)) + " file");
    }

    Json token_map(std::vector<std::string> const& keys,
                   std::vector<std::size_t> const& map,
                   std::vector<std::string> const& values) {
      Json j = Json::object();
      for (std::size_t i = 0; i < keys.size(); ++i) {
        j[keys[i]] = values[map[i]];
      }
      return j;
    }

    Json sizes(FiniteGroupoid const& g) {
      return {{"objects", g.num_objects()}, {"arrows", g.num_arrows()}};
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    Outcome morphism_outcome(std::string const& path, MorphismTables const& tables, char const* command) {
      Outcome o{command};
      auto    loaded = load_morphism(path, tables);
      o.data["from"] = tables.from;
      o.data["to"]   = tables.to;
      if (loaded.from && loaded.to) {
        o.data["level"] = "group-groupoid";
        o.report        = validate_gg_morphism(loaded.morphism, *loaded.from, *loaded.to);
      } else {
        o.data["level"] = "groupoid";
        o.report        = validate_morphism(loaded.morphism);
      }
      return o;
    }

    Outcome cmd_validate(std::string const& path, GroupoidOptions const& opts) {
      auto    file = read_structure_file(path);
      Outcome o{"validate"};
      o.data["kind"] = std::string(kind_name(file));
      if (auto const* g = std::get_if<GroupoidTables>(&file)) {
        FiniteGroupoid grpd(*g);
        o.data["size"] = sizes(grpd);
        o.report       = validate_groupoid(grpd, opts);
      } else if (auto const* gg = std::get_if<GroupGroupoidTables>(&file)) {
        GroupGroupoid s(*gg);
        o.data["size"] = sizes(s.base());
        o.report       = check_group_groupoid(s, GroupGroupoidMode::both);
      } else if (auto const* t = std::get_if<GroupTables>(&file)) {
        GroupTable table(*t);
        o.data["order"] = table.order();
        o.report        = validate_group(table);
      } else {
        Outcome m      = morphism_outcome(path, std::get<MorphismTables>(file), "validate");
        m.data["kind"] = "morphism";
        return m;
      }
      return o;
    }

    Outcome cmd_check(std::string const& path, std::string const& mode) {
      auto    gg = require_gg(read_structure_file(path), path, "check");
      Outcome o{"check"};
      o.data["mode"] = mode;
      auto m         = mode == "def31"   ? GroupGroupoidMode::def31
                       : mode == "def32" ? GroupGroupoidMode::def32
                                         : GroupGroupoidMode::both;
      o.report       = check_group_groupoid(gg, m);
      return o;
    }

    // Runs a group-groupoid check that needs valid parts; otherwise reports
    // why the parts are not valid.
    ValidationReport with_prerequisites(GroupGroupoid const&                                        gg,
                                        std::function<ValidationReport(GroupGroupoid const&)> const& check) {
      try {
        return check(gg);
      } catch (InvalidInput const& e) {
        ValidationReport r;
        r.add("prerequisites", {}, e.what());
        r.merge(validate_groupoid(gg.base()), "groupoid.");
        r.merge(validate_group(gg.arrow_group()), "arrow-group.");
        r.merge(validate_group(gg.object_group()), "object-group.");
        return r;
      }
    }

    Outcome cmd_identities(std::string const& path) {
      auto    file = read_structure_file(path);
      Outcome o{"identities"};
      o.data["kind"] = std::string(kind_name(file));
      if (std::holds_alternative<GroupGroupoidTables>(file)) {
        auto gg = require_gg(file, path, "identities");
        o.report.merge(structure_identities(gg.base()), "groupoid.");
        o.report.merge(with_prerequisites(gg, check_derived_identities));
      } else {
        o.report = structure_identities(require_groupoid(file, path, "identities"));
      }
      return o;
    }

    Outcome cmd_reconstruct(std::string const& path) {
      auto    gg = require_gg(read_structure_file(path), path, "reconstruct");
      Outcome o{"reconstruct"};
      o.data["size"] = sizes(gg.base());
      o.report       = with_prerequisites(gg, reconstruct_from_group);
      return o;
    }

    Outcome cmd_construct(std::string const&              what,
                          std::vector<std::string> const& args,
                          std::string const&              overlay,
                          bool                            unchecked) {
      auto one_arg = [&]() -> std::string const& {
        if (args.size() != 1) {
          throw UsageError("construct " + what + " takes exactly one group name");
        }
        return args.front();
      };

      Outcome o{"construct"};
      std::optional<StructureFile> result;
      try {
        if (what == "pair") {
          result = pair_groupoid(args).tables();
        } else if (what == "null") {
          result = null_groupoid(args).tables();
        } else if (what == "group") {
          GroupTable t = named_group(one_arg());
          if (overlay == "none") {
            result = t.tables();
          } else if (overlay == "groupoid") {
            result = group_as_single_unit_groupoid(t).tables();
          } else if (overlay == "null") {
            result = null_group_groupoid(t).tables();
          } else if (unchecked) {
            result = single_unit_overlay(t).tables();
          } else {
            result = single_unit_group_groupoid(t).tables();
          }
        } else if (what == "group-pair") {
          result = group_pair_groupoid(named_group(one_arg())).tables();
        } else {
          if (args.size() != 2) {
            throw UsageError("construct product takes two structure files");
          }
          auto a = read_structure_file(args[0]);
          auto b = read_structure_file(args[1]);
          if (std::holds_alternative<GroupGroupoidTables>(a) && std::holds_alternative<GroupGroupoidTables>(b)) {
            result = direct_product_group_groupoids(GroupGroupoid(std::get<GroupGroupoidTables>(a)),
                                                    GroupGroupoid(std::get<GroupGroupoidTables>(b)))
                         .product.tables();
          } else {
            result = direct_product_groupoids(require_groupoid(a, args[0], "construct product"),
                                              require_groupoid(b, args[1], "construct product"))
                         .tables();
          }
        }
      } catch (NonCommutativeGroup const& e) {
        o.report.add("commutative", {e.left(), e.right()}, e.what());
        return o;
      } catch (InvalidGroup const& e) {
        o.report.add("group", {}, e.what());
        return o;
      }
      std::string text  = emit_structure_file(*result);
      o.data["kind"]    = std::string(kind_name(*result));
      o.data["structure"] = text;
      o.raw_text        = text;
      return o;
    }

    Outcome cmd_sub(std::string const&              path,
                    std::vector<std::string> const& arrows,
                    std::vector<std::string> const& objects) {
      auto         file = read_structure_file(path);
      SubStructure s{{arrows.begin(), arrows.end()}, {objects.begin(), objects.end()}};
      Outcome      o{"sub"};
      if (std::holds_alternative<GroupGroupoidTables>(file)) {
        o.data["level"] = "group-subgroupoid";
        o.report        = check_group_subgroupoid(require_gg(file, path, "sub"), s);
      } else {
        o.data["level"] = "subgroupoid";
        o.report        = check_subgroupoid(require_groupoid(file, path, "sub"), s);
      }
      return o;
    }

    Json token_list(std::set<std::string> const& s) {
      return Json(std::vector<std::string>(s.begin(), s.end()));
    }

    Outcome cmd_isotropy(std::string const& path, std::optional<std::string> const& object, bool bundle) {
      auto    file = read_structure_file(path);
      Outcome o{"isotropy"};
      try {
        if (object) {
          FiniteGroupoid g = require_groupoid(file, path, "isotropy");
          GroupTable     t = isotropy_group(g, *object);
          o.data["object"]   = *object;
          o.data["order"]    = t.order();
          o.data["elements"] = t.elements();
          o.report           = validate_group(t);
        } else if (bundle) {
          SubStructure s      = isotropy_bundle(require_gg(file, path, "isotropy --bundle"));
          o.data["arrows"]    = token_list(s.arrows);
          o.data["objects"]   = token_list(s.objects);
          o.data["size"]      = s.arrows.size();
        } else if (std::holds_alternative<GroupGroupoidTables>(file)) {
          auto       gg = require_gg(file, path, "isotropy");
          UnitFibers u  = unit_fiber_subgroups(gg);
          o.data["object_identity"] = gg.object_group().element(gg.object_group().identity());
          o.data["source_fiber"]    = token_list(u.source_fiber);
          o.data["target_fiber"]    = token_list(u.target_fiber);
          o.data["isotropy"]        = token_list(u.isotropy);
        } else {
          FiniteGroupoid g = require_groupoid(file, path, "isotropy");
          o.report         = validate_groupoid(g);
          if (o.report.valid()) {
            Json orders = Json::object();
            for (auto const& u : g.objects()) {
              orders[u] = isotropy_group(g, u).order();
            }
            o.data["transitive"] = is_transitive(g);
            o.data["order"]      = orders;
          }
        }
      } catch (InternalCheckFailed const& e) {
        o.report.add("internal-check", {}, e.what());
      }
      return o;
    }

    Outcome cmd_morphism(std::string const& path) {
      auto file = read_structure_file(path);
      if (auto const* m = std::get_if<MorphismTables>(&file)) {
        return morphism_outcome(path, *m, "morphism");
      }
      throw UsageError("morphism needs a morphism file; '" + path + "' is a " + std::string(kind_name(file))
                       + " file");
    }

    Outcome cmd_anchor(std::string const& path) {
      auto    gg = require_gg(read_structure_file(path), path, "anchor");
      Outcome o{"anchor"};
      try {
        auto a      = anchor_morphism(gg);
        auto const& g = gg.base();
        o.data["f"]  = token_map(g.arrows(), a.map.arrow_map(), a.target.base().arrows());
        o.data["f0"] = token_map(g.objects(), a.map.object_map(), a.target.base().objects());
        o.report     = validate_gg_morphism(a.map, gg, a.target);
      } catch (InternalCheckFailed const& e) {
        o.report.add("internal-check", {}, e.what());
      }
      return o;
    }

    Outcome cmd_affine_verify(std::size_t samples, std::uint64_t seed) {
      Outcome o{"affine verify"};
      o.data["samples"] = samples;
      o.data["seed"]    = seed;
      o.report          = affine::verify(samples, seed);
      return o;
    }

    Outcome cmd_affine_quad(std::string const& kind, std::vector<std::string> const& params) {
      std::vector<affine::Rat> p;
      for (auto const& s : params) {
        p.push_back(affine::Rat::parse(s));
      }
      affine::Quadrilateral q{};
      if (kind == "A") {
        if (p.size() != 3) {
          throw UsageError("kind A takes three parameters: a b c");
        }
        q = affine::quadrilateral_a(p[0], p[1], p[2]);
      } else {
        if (p.size() != 2) {
          throw UsageError("kind B takes two parameters: x1 x2");
        }
        q = affine::quadrilateral_b({p[0], p[1]});
      }
      Outcome o{"affine quad"};
      o.data["kind"] = kind;
      Json points    = Json::object();
      for (std::size_t i = 0; i < 4; ++i) {
        points[kind + std::to_string(i + 1)] = q.points[i].str();
      }
      o.data["points"]               = points;
      o.data["diagonal_midpoint_13"] = q.diagonal_midpoint_13.str();
      o.data["diagonal_midpoint_24"] = q.diagonal_midpoint_24.str();
      o.data["parallelogram"]        = q.parallelogram;
      o.data["degenerate"]           = q.degenerate;
      if (q.slopes) {
        o.data["slopes"] = {(*q.slopes)[0].str(), (*q.slopes)[1].str()};
      }
      if (q.squared_lengths) {
        o.data["squared_lengths"] = {(*q.squared_lengths)[0].str(), (*q.squared_lengths)[1].str()};
      }
      if (q.expected_squared_length) {
        o.data["expected_squared_length"] = q.expected_squared_length->str();
      }
      o.report = q.report;
      return o;
    }

  }  // namespace

  int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite groupoid and group-groupoid checker", "grpd"};
    app.require_subcommand(1);

    std::string format = "text";
    bool        allow_nonsurjective = false;
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "machine"}));
    app.add_flag("--allow-nonsurjective", allow_nonsurjective,
                 "Report non-surjective source/target maps as warnings");

    std::string                path;
    std::string                mode = "both";
    std::string                what;
    std::vector<std::string>   params;
    std::string                overlay = "none";
    bool                       unchecked = false;
    std::vector<std::string>   sub_arrows, sub_objects;
    std::optional<std::string> iso_object;
    bool                       iso_bundle = false;
    std::size_t                samples    = 200;
    std::uint64_t              seed       = 1;
    std::string                quad_kind;

    auto file_arg = [&](CLI::App* cmd) {
      cmd->add_option("file", path, "Structure file")->required();
      cmd->fallthrough();
      return cmd;
    };

    auto* validate    = file_arg(app.add_subcommand("validate", "Validate a structure file of any kind"));
    auto* check       = file_arg(app.add_subcommand("check", "Check the group-groupoid definitions"));
    auto* identities  = file_arg(app.add_subcommand("identities", "Check consequences of the axioms"));
    auto* reconstruct = file_arg(app.add_subcommand("reconstruct", "Recompute product and inverse from the group"));
    auto* sub         = file_arg(app.add_subcommand("sub", "Check a candidate substructure"));
    auto* isotropy    = file_arg(app.add_subcommand("isotropy", "Isotropy groups, bundle and unit fibres"));
    auto* morphism    = file_arg(app.add_subcommand("morphism", "Validate a morphism file"));
    auto* anchor      = file_arg(app.add_subcommand("anchor", "Anchor map into the pair groupoid"));

    check->add_option("--mode", mode)->check(CLI::IsMember({"def31", "def32", "both"}));
    sub->add_option("--arrows", sub_arrows)->expected(0, CLI::detail::expected_max_vector_size);
    sub->add_option("--objects", sub_objects)->expected(0, CLI::detail::expected_max_vector_size);
    auto* obj_opt = isotropy->add_option("--object", iso_object, "Isotropy group at one object");
    isotropy->add_flag("--bundle", iso_bundle, "Isotropy bundle of a group-groupoid")->excludes(obj_opt);

    auto* construct = app.add_subcommand("construct", "Emit a standard structure");
    construct->fallthrough();
    construct->add_option("what", what)
        ->required()
        ->check(CLI::IsMember({"pair", "null", "group", "group-pair", "product"}));
    construct->add_option("args", params, "Objects, a group name (Z4, S3, Z2xZ2) or two files");
    construct->add_option("--overlay", overlay, "For `group`: none, groupoid, null, single-unit")
        ->check(CLI::IsMember({"none", "groupoid", "null", "single-unit"}));
    construct->add_flag("--unchecked", unchecked, "Skip the commutativity requirement for single-unit");

    auto* affine_cmd = app.add_subcommand("affine", "The group-groupoid on R^2 over R");
    affine_cmd->require_subcommand(1);
    auto* verify = affine_cmd->add_subcommand("verify", "Sampled exact check of every identity");
    verify->fallthrough();
    verify->add_option("--samples", samples);
    verify->add_option("--seed", seed);
    auto* quad = affine_cmd->add_subcommand("quad", "Quadrilateral constructions");
    quad->fallthrough();
    quad->add_option("--kind", quad_kind)->required()->check(CLI::IsMember({"A", "B"}));
    quad->add_option("--params", params)->required()->allow_extra_args();
    affine_cmd->fallthrough();

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return 2;
    }

    try {
      Outcome o;
      if (validate->parsed()) {
        o = cmd_validate(path, GroupoidOptions{allow_nonsurjective});
      } else if (check->parsed()) {
        o = cmd_check(path, mode);
      } else if (identities->parsed()) {
        o = cmd_identities(path);
      } else if (reconstruct->parsed()) {
        o = cmd_reconstruct(path);
      } else if (construct->parsed()) {
        o = cmd_construct(what, params, overlay, unchecked);
      } else if (sub->parsed()) {
        o = cmd_sub(path, sub_arrows, sub_objects);
      } else if (isotropy->parsed()) {
        o = cmd_isotropy(path, iso_object, iso_bundle);
      } else if (morphism->parsed()) {
        o = cmd_morphism(path);
      } else if (anchor->parsed()) {
        o = cmd_anchor(path);
      } else if (verify->parsed()) {
        o = cmd_affine_verify(samples, seed);
      } else {
        o = cmd_affine_quad(quad_kind, params);
      }
      if (format == "machine") {
        render_machine(out, o);
      } else {
        render_text(out, o);
      }
      return o.report.valid() ? 0 : 1;
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << '\n';
    } catch (Error const& e) {
      err << "input error: " << e.what() << '\n';
    } catch (std::invalid_argument const& e) {
      err << "input error: " << e.what() << '\n';
    } catch (std::domain_error const& e) {
      err << "input error: " << e.what() << '\n';
    }
    return 2;
  }

}  // namespace grpd::cli
