#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "grpd/group.hpp"
#include "grpd/report.hpp"

namespace grpd {

  // Token-level description of a finite groupoid, as written in structure
  // files. `product` may contain entries outside the composable pairs; such
  // entries are reported by validate_groupoid rather than rejected.
  struct GroupoidTables {
    std::vector<std::string>           objects;
    std::vector<std::string>           arrows;
    std::map<std::string, std::string> source;
    std::map<std::string, std::string> target;
    std::map<std::string, std::string> unit;
    std::map<std::string, std::string> inverse;
    std::map<TokenPair, std::string>   product;

    friend bool operator==(GroupoidTables const&, GroupoidTables const&) = default;
  };

  // Explicit finite groupoid: objects, arrows, source/target/unit/inverse
  // maps and a partial product table. Immutable once built. Objects and
  // arrows are addressed by their position in declaration order.
  class FiniteGroupoid {
   public:
    // Throws MalformedStructure if a token is duplicated or undeclared, or if
    // source, target, unit or inverse is not total.
    explicit FiniteGroupoid(GroupoidTables const& tables);

    // `product` is row-major |arrows| x |arrows| with npos for "no entry".
    static FiniteGroupoid from_indices(std::vector<std::string> objects,
                                       std::vector<std::string> arrows,
                                       std::vector<std::size_t> source,
                                       std::vector<std::size_t> target,
                                       std::vector<std::size_t> unit,
                                       std::vector<std::size_t> inverse,
                                       std::vector<std::size_t> product);

    std::size_t num_objects() const noexcept { return objects_.size(); }
    std::size_t num_arrows() const noexcept { return arrows_.size(); }

    std::vector<std::string> const& objects() const noexcept { return objects_; }
    std::vector<std::string> const& arrows() const noexcept { return arrows_; }
    std::string const&              object(std::size_t u) const { return objects_.at(u); }
    std::string const&              arrow(std::size_t x) const { return arrows_.at(x); }

    std::optional<std::size_t> find_object(std::string_view token) const;
    std::optional<std::size_t> find_arrow(std::string_view token) const;
    std::size_t                object_index(std::string_view token) const;  // UnknownObject
    std::size_t                arrow_index(std::string_view token) const;   // UnknownArrow

    std::size_t source(std::size_t x) const noexcept { return source_[x]; }
    std::size_t target(std::size_t x) const noexcept { return target_[x]; }
    std::size_t unit(std::size_t u) const noexcept { return unit_[u]; }
    std::size_t inverse(std::size_t x) const noexcept { return inverse_[x]; }

    bool composable(std::size_t x, std::size_t y) const noexcept {
      return target_[x] == source_[y];
    }

    // Stored table entry, or npos. Does not check composability.
    std::size_t product_entry(std::size_t x, std::size_t y) const noexcept {
      return product_[x * arrows_.size() + y];
    }

    // Product of a composable pair. Throws NotComposable for pairs outside
    // the composable set and MalformedStructure for a missing entry.
    std::size_t multiply(std::size_t x, std::size_t y) const;

    GroupoidTables tables() const;

    friend bool operator==(FiniteGroupoid const& a, FiniteGroupoid const& b) {
      return a.objects_ == b.objects_ && a.arrows_ == b.arrows_ && a.source_ == b.source_
             && a.target_ == b.target_ && a.unit_ == b.unit_ && a.inverse_ == b.inverse_
             && a.product_ == b.product_;
    }

   private:
    FiniteGroupoid() = default;
    void build_indices();
    void check_ranges() const;

    std::vector<std::string>                     objects_;
    std::vector<std::string>                     arrows_;
    std::vector<std::size_t>                     source_;
    std::vector<std::size_t>                     target_;
    std::vector<std::size_t>                     unit_;
    std::vector<std::size_t>                     inverse_;
    std::vector<std::size_t>                     product_;
    std::unordered_map<std::string, std::size_t> object_index_;
    std::unordered_map<std::string, std::size_t> arrow_index_;
  };

  struct GroupoidOptions {
    // Report non-surjective source/target maps as warnings instead of
    // violations.
    bool allow_nonsurjective = false;
  };

  // Exhaustive check of the groupoid axioms:
  //   product-domain-missing / product-domain-extra  table domain = composable pairs
  //   product-source / product-target                endpoints of products
  //   associativity                                  every composable triple
  //   left-unit / right-unit                         unit laws
  //   left-inverse / right-inverse                   inverse laws
  //   unit-endpoints / unit-injective                the unit map
  //   source-surjective / target-surjective
  ValidationReport validate_groupoid(FiniteGroupoid const& g, GroupoidOptions const& opts = {});

  bool composable(FiniteGroupoid const& g, std::string_view x, std::string_view y);

  enum class Side { source, target };

  std::vector<std::size_t> fiber_indices(FiniteGroupoid const& g, Side side, std::size_t u);
  std::set<std::string>    fiber(FiniteGroupoid const& g, Side side, std::string_view u);

  // Arrows with source and target at u, in declaration order.
  std::vector<std::size_t> isotropy_indices(FiniteGroupoid const& g, std::size_t u);

  // The restricted multiplication on G(u) as a group table. Throws
  // InternalCheckFailed if the result is not a group.
  GroupTable isotropy_group(FiniteGroupoid const& g, std::string_view u);

  bool is_transitive(FiniteGroupoid const& g);

  // z -> x^-1 z x from G(source(x)) to G(target(x)), verified to be a group
  // isomorphism before it is returned.
  std::map<std::string, std::string> conjugation_iso(FiniteGroupoid const& g, std::string_view x);

  // Consequences of the axioms, checked independently by exhaustion. Needs
  // only a well-formed structure; on an invalid groupoid it reports which
  // consequences break.
  ValidationReport structure_identities(FiniteGroupoid const& g);

}  // namespace grpd
