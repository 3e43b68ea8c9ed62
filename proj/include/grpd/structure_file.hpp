#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "grpd/group.hpp"
#include "grpd/group_groupoid.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/morphism.hpp"

namespace grpd {

  // A morphism file as written: `from` and `to` are paths relative to the
  // directory of the morphism file.
  struct MorphismTables {
    std::string                        from;
    std::string                        to;
    std::map<std::string, std::string> f;
    std::map<std::string, std::string> f0;

    friend bool operator==(MorphismTables const&, MorphismTables const&) = default;
  };

  using StructureFile = std::variant<GroupoidTables, GroupGroupoidTables, GroupTables, MorphismTables>;

  // "groupoid", "group_groupoid", "group" or "morphism".
  std::string_view kind_name(StructureFile const& s);

  // Line-oriented format:
  //
  //   kind: groupoid | group_groupoid | group | morphism
  //   objects: u v          arrows: x y
  //   source: x=u y=v       target: ...     unit: u=x ...   inverse: x=y ...
  //   product: x.y=z ...
  //   arrow_group_op: x.y=z ...   arrow_group_id: x   arrow_group_inv: x=y ...
  //   object_group_op / object_group_id / object_group_inv likewise
  //   elements / op / id / inv                   (kind group)
  //   from: FILE   to: FILE   f: x=x' ...   f0: u=u' ...   (kind morphism)
  //
  // `#` starts a comment. A key may repeat; its entries accumulate. Section
  // order is free. Tokens may not contain whitespace, '=' or '#'. In `x.y=z`
  // the left side is split at the '.' that leaves two declared tokens.
  //
  // Throws ParseError (syntax, unknown_identifier, duplicate_declaration)
  // with a 1-based line number. Source, target, unit, inverse and group
  // inverse maps must be total; a missing entry is a syntax error at the line
  // declaring the token. Product and group tables may be partial: gaps are
  // validation failures, not parse errors.
  StructureFile parse_structure_file(std::string_view text);

  // Canonical text; parse_structure_file(emit_structure_file(s)) == s for
  // every s that parses. Throws InvalidInput for tokens the format cannot
  // carry.
  std::string emit_structure_file(StructureFile const& s);

  // Reads and parses a file. I/O failures throw ParseError of kind io.
  StructureFile read_structure_file(std::filesystem::path const& path);

  // A morphism file with both ends loaded. The group-groupoids are set when
  // both ends are group_groupoid files.
  struct LoadedMorphism {
    Morphism                     morphism;
    std::optional<GroupGroupoid> from;
    std::optional<GroupGroupoid> to;
  };

  // Resolves `from` and `to` against the directory of `path`. Each end must
  // be a groupoid or group_groupoid file. Throws ParseError for unreadable or
  // unsuitable ends, MalformedStructure for structures that do not build,
  // and DomainMismatch / UnknownArrow / UnknownObject for bad maps.
  LoadedMorphism load_morphism(std::filesystem::path const& path, MorphismTables const& m);

}  // namespace grpd
