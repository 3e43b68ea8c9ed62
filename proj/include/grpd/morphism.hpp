#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "grpd/groupoid.hpp"
#include "grpd/report.hpp"

namespace grpd {

  // A pair of maps (f on arrows, f0 on objects) between two groupoids. The
  // groupoids are shared and immutable.
  class Morphism {
   public:
    // Throws DomainMismatch unless f and f0 are total and land inside target.
    Morphism(std::shared_ptr<FiniteGroupoid const> source,
             std::shared_ptr<FiniteGroupoid const> target,
             std::vector<std::size_t>              arrow_map,
             std::vector<std::size_t>              object_map);

    static Morphism from_tokens(std::shared_ptr<FiniteGroupoid const>     source,
                                std::shared_ptr<FiniteGroupoid const>     target,
                                std::map<std::string, std::string> const& arrow_map,
                                std::map<std::string, std::string> const& object_map);

    FiniteGroupoid const& source() const noexcept { return *source_; }
    FiniteGroupoid const& target() const noexcept { return *target_; }
    std::shared_ptr<FiniteGroupoid const> const& source_ptr() const noexcept { return source_; }
    std::shared_ptr<FiniteGroupoid const> const& target_ptr() const noexcept { return target_; }

    std::size_t operator()(std::size_t x) const noexcept { return arrow_map_[x]; }
    std::size_t on_object(std::size_t u) const noexcept { return object_map_[u]; }

    std::vector<std::size_t> const& arrow_map() const noexcept { return arrow_map_; }
    std::vector<std::size_t> const& object_map() const noexcept { return object_map_; }

    std::map<std::string, std::string> arrow_tokens() const;
    std::map<std::string, std::string> object_tokens() const;

   private:
    std::shared_ptr<FiniteGroupoid const> source_;
    std::shared_ptr<FiniteGroupoid const> target_;
    std::vector<std::size_t>              arrow_map_;
    std::vector<std::size_t>              object_map_;
  };

  // Checks, by exhaustion:
  //   source-compatible / target-compatible   source'(f(x)) = f0(source(x)), same for target
  //   preserves-product                       f(x.y) = f(x).f(y) on composable pairs
  // When both hold, also checks that units and inverses are preserved; a
  // failure there is reported under "internal-inconsistency.*" since it can
  // only happen for invalid source or target groupoids.
  ValidationReport validate_morphism(Morphism const& m);

}  // namespace grpd
