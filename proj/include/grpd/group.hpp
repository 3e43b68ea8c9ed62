#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "grpd/report.hpp"

namespace grpd {

  inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

  using TokenPair = std::pair<std::string, std::string>;

  // Token-level description of a finite group, as written in structure files.
  struct GroupTables {
    std::vector<std::string>           elements;
    std::map<TokenPair, std::string>   op;
    std::string                        identity;
    std::map<std::string, std::string> inverse;

    friend bool operator==(GroupTables const&, GroupTables const&) = default;
  };

  // A finite group given by its Cayley table. Elements are addressed by their
  // position in `elements()`. Missing table entries are stored as npos so that
  // validate_group can report non-closure instead of refusing the table.
  class GroupTable {
   public:
    // Throws MalformedTable on duplicate elements, undeclared tokens, or a
    // non-total inverse map.
    explicit GroupTable(GroupTables const& tables);

    static GroupTable from_indices(std::vector<std::string> elements,
                                   std::vector<std::size_t> op,
                                   std::size_t              identity,
                                   std::vector<std::size_t> inverse);

    std::size_t order() const noexcept { return elements_.size(); }

    std::vector<std::string> const& elements() const noexcept { return elements_; }
    std::string const&              element(std::size_t i) const { return elements_.at(i); }

    std::optional<std::size_t> find(std::string_view token) const;
    // Throws MalformedTable for an unknown token.
    std::size_t index_of(std::string_view token) const;

    // npos when the table has no entry.
    std::size_t op(std::size_t a, std::size_t b) const noexcept {
      return op_[a * elements_.size() + b];
    }
    std::size_t identity() const noexcept { return identity_; }
    std::size_t inverse(std::size_t a) const noexcept { return inverse_[a]; }

    // Same group with elements listed in `order`, which must be a permutation
    // of elements().
    GroupTable reindexed(std::span<std::string const> order) const;

    GroupTables tables() const;

    friend bool operator==(GroupTable const&, GroupTable const&) = default;

   private:
    GroupTable() = default;
    void build_index();

    std::vector<std::string>                     elements_;
    std::vector<std::size_t>                     op_;
    std::size_t                                  identity_ = 0;
    std::vector<std::size_t>                     inverse_;
    std::unordered_map<std::string, std::size_t> index_;
  };

  // Exhaustive check of closure, associativity, identity and inverse laws.
  ValidationReport validate_group(GroupTable const& t);

  // First non-commuting pair in element order, if any.
  std::optional<std::pair<std::size_t, std::size_t>> non_commuting_pair(GroupTable const& t);
  bool is_commutative(GroupTable const& t);

  // `f[i]` is the image of element i of `from`. Throws DomainMismatch if f is
  // not total into `to`.
  ValidationReport check_group_hom(std::span<std::size_t const> f,
                                   GroupTable const&            from,
                                   GroupTable const&            to,
                                   std::string const&           rule = "group-hom");
  bool is_group_hom(std::span<std::size_t const> f, GroupTable const& from, GroupTable const& to);
  bool is_group_hom(std::map<std::string, std::string> const& f,
                    GroupTable const&                         from,
                    GroupTable const&                         to);

  // Subgroup test for a subset given by element indices: non-empty, contains
  // the identity, closed under op and inverse.
  ValidationReport check_subgroup(GroupTable const&            t,
                                  std::span<std::size_t const> subset,
                                  std::string const&           prefix = "subgroup");

  inline constexpr std::size_t isomorphism_search_cap = 12;

  // Brute-force search for a group isomorphism a -> b over images of a
  // generating set. Only meaningful for valid groups.
  std::optional<std::vector<std::size_t>> find_isomorphism(GroupTable const& a, GroupTable const& b);

  // Standard groups. Element tokens: Z<n> uses "0".."n-1"; S<n> uses one-line
  // permutation notation ("012", "102", ...) composed left to right.
  GroupTable cyclic_group(std::size_t n);
  GroupTable symmetric_group(std::size_t n);
  GroupTable direct_product_groups(GroupTable const& a, GroupTable const& b);

  // Parses "Z4", "S3", "Z2xZ2", "Z2xS3", ... Throws InvalidInput.
  GroupTable named_group(std::string_view spec);

  std::string pair_token(std::string_view left, std::string_view right);

}  // namespace grpd
