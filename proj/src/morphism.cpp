#include "grpd/morphism.hpp"

#include "grpd/error.hpp"

namespace grpd {

  Morphism::Morphism(std::shared_ptr<FiniteGroupoid const> source,
                     std::shared_ptr<FiniteGroupoid const> target,
                     std::vector<std::size_t>              arrow_map,
                     std::vector<std::size_t>              object_map)
      : source_(std::move(source)),
        target_(std::move(target)),
        arrow_map_(std::move(arrow_map)),
        object_map_(std::move(object_map)) {
    if (!source_ || !target_) {
      throw DomainMismatch("morphism needs a source and a target groupoid");
    }
    if (arrow_map_.size() != source_->num_arrows()
        || object_map_.size() != source_->num_objects()) {
      throw DomainMismatch("morphism is not total on the source groupoid");
    }
    for (auto x : arrow_map_) {
      if (x >= target_->num_arrows()) {
        throw DomainMismatch("arrow image outside the target groupoid");
      }
    }
    for (auto u : object_map_) {
      if (u >= target_->num_objects()) {
        throw DomainMismatch("object image outside the target groupoid");
      }
    }
  }

  Morphism Morphism::from_tokens(std::shared_ptr<FiniteGroupoid const>     source,
                                 std::shared_ptr<FiniteGroupoid const>     target,
                                 std::map<std::string, std::string> const& arrow_map,
                                 std::map<std::string, std::string> const& object_map) {
    if (!source || !target) {
      throw DomainMismatch("morphism needs a source and a target groupoid");
    }
    std::vector<std::size_t> f(source->num_arrows(), npos);
    std::vector<std::size_t> f0(source->num_objects(), npos);
    for (auto const& [x, y] : arrow_map) {
      auto xi = source->find_arrow(x);
      auto yi = target->find_arrow(y);
      if (!xi || !yi) {
        throw DomainMismatch("arrow map entry " + x + "=" + y + " names an unknown arrow");
      }
      f[*xi] = *yi;
    }
    for (auto const& [u, v] : object_map) {
      auto ui = source->find_object(u);
      auto vi = target->find_object(v);
      if (!ui || !vi) {
        throw DomainMismatch("object map entry " + u + "=" + v + " names an unknown object");
      }
      f0[*ui] = *vi;
    }
    return Morphism(std::move(source), std::move(target), std::move(f), std::move(f0));
  }

  std::map<std::string, std::string> Morphism::arrow_tokens() const {
    std::map<std::string, std::string> out;
    for (std::size_t x = 0; x < arrow_map_.size(); ++x) {
      out.emplace(source_->arrow(x), target_->arrow(arrow_map_[x]));
    }
    return out;
  }

  std::map<std::string, std::string> Morphism::object_tokens() const {
    std::map<std::string, std::string> out;
    for (std::size_t u = 0; u < object_map_.size(); ++u) {
      out.emplace(source_->object(u), target_->object(object_map_[u]));
    }
    return out;
  }

  ValidationReport validate_morphism(Morphism const& m) {
    ValidationReport      report;
    FiniteGroupoid const& G = m.source();
    FiniteGroupoid const& H = m.target();
    std::size_t const     n = G.num_arrows();

    for (std::size_t x = 0; x < n; ++x) {
      if (H.source(m(x)) != m.on_object(G.source(x))) {
        report.add("source-compatible", {G.arrow(x)}, "source'(f(x)) differs from f0(source(x))");
      }
      if (H.target(m(x)) != m.on_object(G.target(x))) {
        report.add("target-compatible", {G.arrow(x)}, "target'(f(x)) differs from f0(target(x))");
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!G.composable(x, y)) {
          continue;
        }
        std::size_t xy = G.product_entry(x, y);
        if (xy == npos) {
          report.add("preserves-product", {G.arrow(x), G.arrow(y)},
                     "x.y is undefined in the source");
          continue;
        }
        std::size_t fx = m(x);
        std::size_t fy = m(y);
        if (!H.composable(fx, fy)) {
          report.add("preserves-product", {G.arrow(x), G.arrow(y)},
                     "f(x), f(y) are not composable in the target");
        } else if (H.product_entry(fx, fy) != m(xy)) {
          report.add("preserves-product", {G.arrow(x), G.arrow(y)},
                     "f(x.y) differs from f(x).f(y)");
        }
      }
    }
    if (!report.valid()) {
      return report;
    }

    for (std::size_t u = 0; u < G.num_objects(); ++u) {
      if (m(G.unit(u)) != H.unit(m.on_object(u))) {
        report.add("internal-inconsistency.preserves-units", {G.object(u)},
                   "f(unit(u)) differs from unit'(f0(u)) for an accepted morphism");
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (m(G.inverse(x)) != H.inverse(m(x))) {
        report.add("internal-inconsistency.preserves-inverses", {G.arrow(x)},
                   "f(x^-1) differs from f(x)^-1 for an accepted morphism");
      }
    }
    return report;
  }

}  // namespace grpd
