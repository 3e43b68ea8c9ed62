#include "grpd/structure_file.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "grpd/error.hpp"

namespace grpd {

  std::string_view kind_name(StructureFile const& s) {
    static constexpr std::string_view names[] = {"groupoid", "group_groupoid", "group", "morphism"};
    return names[s.index()];
  }

  namespace {

    using Kind = ParseError::Kind;

    [[noreturn]] void fail(Kind kind, std::size_t line, std::string msg) {
      throw ParseError(kind, line, msg);
    }

    struct Item {
      std::string text;
      std::size_t line;
    };

    struct Section {
      std::vector<Item> items;
      std::size_t       line = 0;  // first occurrence
    };

    bool is_space(char c) {
      return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
      }
      while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
      }
      return s;
    }

    // Whitespace around '=' is not significant: "x.y = z" reads as "x.y=z".
    std::string glue_assignments(std::string_view s) {
      std::string out;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '=') {
          while (!out.empty() && is_space(out.back())) {
            out.pop_back();
          }
          out += '=';
          while (i + 1 < s.size() && is_space(s[i + 1])) {
            ++i;
          }
        } else {
          out += s[i];
        }
      }
      return out;
    }

    std::vector<std::string> split_ws(std::string_view s) {
      std::vector<std::string> out;
      std::size_t              i = 0;
      while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) {
          ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !is_space(s[j])) {
          ++j;
        }
        if (j > i) {
          out.emplace_back(s.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    // Keys allowed per kind; scalar keys take exactly one token and may not
    // repeat.
    struct KeySpec {
      std::set<std::string> lists;
      std::set<std::string> scalars;
    };

    KeySpec const& keys_for(std::string const& kind) {
      static std::map<std::string, KeySpec> const specs = {
          {"groupoid", {{"objects", "arrows", "source", "target", "unit", "inverse", "product"}, {}}},
          {"group_groupoid",
           {{"objects", "arrows", "source", "target", "unit", "inverse", "product", "arrow_group_op",
             "arrow_group_inv", "object_group_op", "object_group_inv"},
            {"arrow_group_id", "object_group_id"}}},
          {"group", {{"elements", "op", "inv"}, {"id"}}},
          {"morphism", {{"f", "f0"}, {"from", "to"}}},
      };
      return specs.at(kind);
    }

    struct RawFile {
      std::string                    kind;
      std::size_t                    kind_line = 0;
      std::map<std::string, Section> sections;

      Section const* find(std::string const& key) const {
        auto it = sections.find(key);
        return it == sections.end() ? nullptr : &it->second;
      }

      std::vector<Item> const& items(std::string const& key) const {
        static std::vector<Item> const none;
        auto const*                    s = find(key);
        return s ? s->items : none;
      }

      Item const& scalar(std::string const& key) const {
        auto const* s = find(key);
        if (s == nullptr) {
          fail(Kind::syntax, kind_line, "missing '" + key + ":' line");
        }
        return s->items.front();
      }
    };

    RawFile read_sections(std::string_view text) {
      RawFile     raw;
      std::size_t line_no = 0;
      std::size_t pos     = 0;
      while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos                   = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
          line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
          continue;
        }
        auto colon = line.find(':');
        if (colon == std::string_view::npos) {
          fail(Kind::syntax, line_no, "expected 'key: ...'");
        }
        std::string key(trim(line.substr(0, colon)));
        auto        tokens = split_ws(glue_assignments(line.substr(colon + 1)));

        if (key == "kind") {
          if (!raw.kind.empty()) {
            fail(Kind::duplicate_declaration, line_no, "kind declared twice");
          }
          if (tokens.size() != 1) {
            fail(Kind::syntax, line_no, "kind takes exactly one value");
          }
          if (tokens[0] != "groupoid" && tokens[0] != "group_groupoid" && tokens[0] != "group"
              && tokens[0] != "morphism") {
            fail(Kind::syntax, line_no, "unknown kind '" + tokens[0] + "'");
          }
          raw.kind      = tokens[0];
          raw.kind_line = line_no;
          continue;
        }
        if (raw.kind.empty()) {
          fail(Kind::syntax, line_no, "'kind:' must come before '" + key + ":'");
        }
        KeySpec const& spec = keys_for(raw.kind);
        bool const     list = spec.lists.contains(key);
        if (!list && !spec.scalars.contains(key)) {
          fail(Kind::syntax, line_no, "unknown key '" + key + "' for kind " + raw.kind);
        }
        auto [it, fresh] = raw.sections.try_emplace(key);
        if (fresh) {
          it->second.line = line_no;
        }
        if (!list) {
          if (!fresh) {
            fail(Kind::duplicate_declaration, line_no, "'" + key + "' given twice");
          }
          if (tokens.size() != 1) {
            fail(Kind::syntax, line_no, "'" + key + "' takes exactly one value");
          }
        }
        for (auto& t : tokens) {
          it->second.items.push_back({std::move(t), line_no});
        }
      }
      if (raw.kind.empty()) {
        fail(Kind::syntax, line_no == 0 ? 1 : line_no, "missing 'kind:' line");
      }
      return raw;
    }

    // Declared tokens with their lines, in declaration order.
    struct Declared {
      std::vector<std::string>                     tokens;
      std::unordered_map<std::string, std::size_t> line;

      bool contains(std::string const& t) const { return line.contains(t); }
    };

    Declared declare(std::vector<Item> const& items, char const* what) {
      Declared d;
      for (auto const& item : items) {
        if (item.text.find('=') != std::string::npos) {
          fail(Kind::syntax, item.line, std::string(what) + " token may not contain '=': " + item.text);
        }
        if (!d.line.emplace(item.text, item.line).second) {
          fail(Kind::duplicate_declaration, item.line, std::string(what) + " '" + item.text + "' declared twice");
        }
        d.tokens.push_back(item.text);
      }
      return d;
    }

    std::pair<std::string, std::string> split_assignment(Item const& item) {
      auto eq = item.text.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == item.text.size()
          || item.text.find('=', eq + 1) != std::string::npos) {
        fail(Kind::syntax, item.line, "expected 'a=b', got '" + item.text + "'");
      }
      return {item.text.substr(0, eq), item.text.substr(eq + 1)};
    }

    void require_declared(Declared const& d, std::string const& token, Item const& item, char const* what) {
      if (!d.contains(token)) {
        fail(Kind::unknown_identifier, item.line, "undeclared " + std::string(what) + " '" + token + "'");
      }
    }

    // `key: a=b ...` with a in `from`, b in `to` (either may be null for
    // unchecked sides).
    std::map<std::string, std::string> parse_map(RawFile const&     raw,
                                                 std::string const& key,
                                                 Declared const*    from,
                                                 char const*        from_what,
                                                 Declared const*    to,
                                                 char const*        to_what) {
      std::map<std::string, std::string> out;
      for (auto const& item : raw.items(key)) {
        auto [a, b] = split_assignment(item);
        if (from) {
          require_declared(*from, a, item, from_what);
        }
        if (to) {
          require_declared(*to, b, item, to_what);
        }
        if (!out.emplace(a, b).second) {
          fail(Kind::duplicate_declaration, item.line, key + " given twice for '" + a + "'");
        }
      }
      return out;
    }

    void require_total(std::map<std::string, std::string> const& m,
                       Declared const&                           d,
                       std::string const&                        key,
                       char const*                               what) {
      for (auto const& t : d.tokens) {
        if (!m.contains(t)) {
          fail(Kind::syntax, d.line.at(t), "no '" + key + "' entry for " + what + " '" + t + "'");
        }
      }
    }

    // `key: x.y=z ...` over one declared set.
    std::map<TokenPair, std::string> parse_table(RawFile const& raw, std::string const& key, Declared const& d) {
      std::map<TokenPair, std::string> out;
      for (auto const& item : raw.items(key)) {
        auto [lhs, z] = split_assignment(item);
        std::vector<TokenPair> splits;
        bool                   any_dot = false;
        for (std::size_t dot = lhs.find('.'); dot != std::string::npos; dot = lhs.find('.', dot + 1)) {
          any_dot = true;
          std::string x = lhs.substr(0, dot);
          std::string y = lhs.substr(dot + 1);
          if (d.contains(x) && d.contains(y)) {
            splits.emplace_back(std::move(x), std::move(y));
          }
        }
        if (!any_dot) {
          fail(Kind::syntax, item.line, "expected 'x.y=z', got '" + item.text + "'");
        }
        if (splits.empty()) {
          fail(Kind::unknown_identifier, item.line, "'" + lhs + "' is not a pair of declared tokens");
        }
        if (splits.size() > 1) {
          fail(Kind::syntax, item.line, "'" + lhs + "' splits into declared tokens in more than one way");
        }
        require_declared(d, z, item, "token");
        if (!out.emplace(splits.front(), z).second) {
          fail(Kind::duplicate_declaration, item.line, key + " entry for '" + lhs + "' given twice");
        }
      }
      return out;
    }

    GroupoidTables parse_groupoid(RawFile const& raw, Declared& objects, Declared& arrows) {
      objects = declare(raw.items("objects"), "object");
      arrows  = declare(raw.items("arrows"), "arrow");
      // Objects and arrows are separate namespaces; a token may be both.
      GroupoidTables g;
      g.objects = objects.tokens;
      g.arrows  = arrows.tokens;
      g.source  = parse_map(raw, "source", &arrows, "arrow", &objects, "object");
      g.target  = parse_map(raw, "target", &arrows, "arrow", &objects, "object");
      g.unit    = parse_map(raw, "unit", &objects, "object", &arrows, "arrow");
      g.inverse = parse_map(raw, "inverse", &arrows, "arrow", &arrows, "arrow");
      g.product = parse_table(raw, "product", arrows);
      require_total(g.source, arrows, "source", "arrow");
      require_total(g.target, arrows, "target", "arrow");
      require_total(g.unit, objects, "unit", "object");
      require_total(g.inverse, arrows, "inverse", "arrow");
      return g;
    }

    GroupTables parse_group_sections(RawFile const&     raw,
                                     Declared const&    d,
                                     std::string const& op,
                                     std::string const& id,
                                     std::string const& inv) {
      GroupTables t;
      t.elements        = d.tokens;
      t.op              = parse_table(raw, op, d);
      Item const& ident = raw.scalar(id);
      require_declared(d, ident.text, ident, "element");
      t.identity = ident.text;
      t.inverse  = parse_map(raw, inv, &d, "element", &d, "element");
      require_total(t.inverse, d, inv, "element");
      return t;
    }

    ////////////////////////////////////////////////////////////////////////
    // Emitting
    ////////////////////////////////////////////////////////////////////////

    void check_token(std::string const& t) {
      if (t.empty() || t.find_first_of(" \t\r\n\f\v=#") != std::string::npos) {
        throw InvalidInput("token cannot be written to a structure file: '" + t + "'");
      }
    }

    void emit_list(std::ostream& os, char const* key, std::vector<std::string> const& tokens) {
      os << key << ':';
      for (auto const& t : tokens) {
        check_token(t);
        os << ' ' << t;
      }
      os << '\n';
    }

    void emit_map(std::ostream&                             os,
                  char const*                               key,
                  std::vector<std::string> const&           order,
                  std::map<std::string, std::string> const& m) {
      os << key << ':';
      std::set<std::string> seen;
      for (auto const& a : order) {
        if (auto it = m.find(a); it != m.end()) {
          check_token(it->second);
          os << ' ' << a << '=' << it->second;
          seen.insert(a);
        }
      }
      // Entries outside the declared order (morphism maps) in key order.
      for (auto const& [a, b] : m) {
        if (!seen.contains(a)) {
          check_token(a);
          check_token(b);
          os << ' ' << a << '=' << b;
        }
      }
      os << '\n';
    }

    // One line per left factor that has entries.
    void emit_table(std::ostream&                           os,
                    char const*                             key,
                    std::vector<std::string> const&         order,
                    std::map<TokenPair, std::string> const& table) {
      std::size_t lines = 0;
      for (auto const& x : order) {
        bool open = false;
        for (auto const& y : order) {
          auto it = table.find({x, y});
          if (it == table.end()) {
            continue;
          }
          if (!open) {
            os << key << ':';
            open = true;
            ++lines;
          }
          os << ' ' << x << '.' << y << '=' << it->second;
        }
        if (open) {
          os << '\n';
        }
      }
      if (lines == 0) {
        os << key << ":\n";
      }
    }

    void emit_groupoid(std::ostream& os, GroupoidTables const& g) {
      emit_list(os, "objects", g.objects);
      emit_list(os, "arrows", g.arrows);
      emit_map(os, "source", g.arrows, g.source);
      emit_map(os, "target", g.arrows, g.target);
      emit_map(os, "unit", g.objects, g.unit);
      emit_map(os, "inverse", g.arrows, g.inverse);
      emit_table(os, "product", g.arrows, g.product);
    }

    void emit_group(std::ostream&                   os,
                    std::string const&              prefix,
                    std::vector<std::string> const& elements,
                    GroupTables const&              t) {
      check_token(t.identity);
      os << prefix << "id: " << t.identity << '\n';
      emit_map(os, (prefix + "inv").c_str(), elements, t.inverse);
      emit_table(os, (prefix + "op").c_str(), elements, t.op);
    }

  }  // namespace

  StructureFile parse_structure_file(std::string_view text) {
    RawFile const raw = read_sections(text);

    if (raw.kind == "groupoid") {
      Declared objects, arrows;
      return parse_groupoid(raw, objects, arrows);
    }
    if (raw.kind == "group_groupoid") {
      Declared            objects, arrows;
      GroupGroupoidTables gg;
      gg.base         = parse_groupoid(raw, objects, arrows);
      gg.arrow_group  = parse_group_sections(raw, arrows, "arrow_group_op", "arrow_group_id", "arrow_group_inv");
      gg.object_group = parse_group_sections(raw, objects, "object_group_op", "object_group_id", "object_group_inv");
      return gg;
    }
    if (raw.kind == "group") {
      Declared elements = declare(raw.items("elements"), "element");
      return parse_group_sections(raw, elements, "op", "id", "inv");
    }
    MorphismTables m;
    m.from = raw.scalar("from").text;
    m.to   = raw.scalar("to").text;
    m.f    = parse_map(raw, "f", nullptr, "", nullptr, "");
    m.f0   = parse_map(raw, "f0", nullptr, "", nullptr, "");
    return m;
  }

  std::string emit_structure_file(StructureFile const& s) {
    std::ostringstream os;
    os << "kind: " << kind_name(s) << '\n';
    std::visit(
        [&](auto const& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, GroupoidTables>) {
            emit_groupoid(os, v);
          } else if constexpr (std::is_same_v<T, GroupGroupoidTables>) {
            emit_groupoid(os, v.base);
            emit_group(os, "arrow_group_", v.base.arrows, v.arrow_group);
            emit_group(os, "object_group_", v.base.objects, v.object_group);
          } else if constexpr (std::is_same_v<T, GroupTables>) {
            emit_list(os, "elements", v.elements);
            emit_group(os, "", v.elements, v);
          } else {
            check_token(v.from);
            check_token(v.to);
            os << "from: " << v.from << '\n' << "to: " << v.to << '\n';
            emit_map(os, "f", {}, v.f);
            emit_map(os, "f0", {}, v.f0);
          }
        },
        s);
    return os.str();
  }

  StructureFile read_structure_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError(Kind::io, 0, "cannot read '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
      return parse_structure_file(buffer.str());
    } catch (ParseError const& e) {
      throw ParseError(e.kind(), e.line(), e.detail(), path.string());
    }
  }

  LoadedMorphism load_morphism(std::filesystem::path const& path, MorphismTables const& m) {
    auto const dir = path.parent_path();

    struct End {
      std::shared_ptr<FiniteGroupoid const> base;
      std::optional<GroupGroupoid>          gg;
    };
    auto load_end = [&](std::string const& rel) {
      auto file = read_structure_file(dir / rel);
      End  end;
      if (auto const* g = std::get_if<GroupoidTables>(&file)) {
        end.base = std::make_shared<FiniteGroupoid const>(*g);
      } else if (auto const* gg = std::get_if<GroupGroupoidTables>(&file)) {
        end.gg.emplace(*gg);
        end.base = end.gg->base_ptr();
      } else {
        throw ParseError(Kind::syntax, 0,
                         "'" + rel + "' is a " + std::string(kind_name(file)) + " file, not a groupoid");
      }
      return end;
    };
    End from = load_end(m.from);
    End to   = load_end(m.to);

    LoadedMorphism out{Morphism::from_tokens(from.base, to.base, m.f, m.f0), std::nullopt, std::nullopt};
    if (from.gg && to.gg) {
      out.from = std::move(from.gg);
      out.to   = std::move(to.gg);
    }
    return out;
  }

}  // namespace grpd
