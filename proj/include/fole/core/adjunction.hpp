#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fole/fincat/passage.hpp"
#include "fole/fincat/report.hpp"

namespace fole {

// left: C -> D, right: D -> C, unit: id => left;right, counit: right;left => id.
template <Category C, Category D>
struct AdjunctionWitness {
  Functor<C, D> left;
  Functor<D, C> right;
  std::function<typename C::Morphism(const typename C::Object&)> unit;
  std::function<typename D::Morphism(const typename D::Object&)> counit;
  // Optional closed form of to_right that avoids materializing right(f); check_direct_right compares the two.
  std::function<typename C::Morphism(const typename C::Object&, const typename D::Morphism&)> direct_right = nullptr;

  // f: left(c) -> d  |->  unit(c);right(f): c -> right(d)
  typename C::Morphism to_right(const typename C::Object& c, const typename D::Morphism& f) const {
    if (direct_right) return direct_right(c, f);
    return left.source.compose(unit(c), right.map(f));
  }
  // g: c -> right(d)  |->  left(g);counit(d): left(c) -> d
  typename D::Morphism to_left(const typename D::Object& d, const typename C::Morphism& g) const {
    return left.target.compose(left.map(g), counit(d));
  }

  CheckReport check_triangles(const std::vector<typename C::Object>& cs, const std::vector<typename D::Object>& ds) const {
    CheckReport r;
    const auto& cc = left.source;
    const auto& dd = left.target;
    for (std::size_t n = 0; n < cs.size(); ++n) {
      auto lc = left(cs[n]);
      if (!(dd.compose(left.map(unit(cs[n])), counit(lc)) == dd.identity(lc)))
        r.fail_with("left triangle fails at source object #" + std::to_string(n));
    }
    for (std::size_t n = 0; n < ds.size(); ++n) {
      auto rd = right(ds[n]);
      if (!(cc.compose(unit(rd), right.map(counit(ds[n]))) == cc.identity(rd)))
        r.fail_with("right triangle fails at target object #" + std::to_string(n));
    }
    return r;
  }

  // Both transposes are mutually inverse between the supplied (complete) hom-sets.
  CheckReport check_hom_bijection(const typename C::Object& c, const typename D::Object& d,
                                  const std::vector<typename D::Morphism>& left_homs,
                                  const std::vector<typename C::Morphism>& right_homs) const {
    CheckReport r;
    if (left_homs.size() != right_homs.size())
      r.fail_with("hom-set sizes differ: " + std::to_string(left_homs.size()) + " vs " + std::to_string(right_homs.size()));
    if (left_homs.empty() && right_homs.empty()) return r;
    std::optional<typename C::Morphism> eta;
    if (!direct_right) eta = unit(c);
    auto eps = counit(d);
    auto up = [&](const typename D::Morphism& f) { return eta ? left.source.compose(*eta, right.map(f)) : direct_right(c, f); };
    auto down = [&](const typename C::Morphism& g) { return left.target.compose(left.map(g), eps); };
    for (std::size_t n = 0; n < left_homs.size(); ++n)
      if (!(down(up(left_homs[n])) == left_homs[n])) r.fail_with("round trip fails at left morphism #" + std::to_string(n));
    for (std::size_t n = 0; n < right_homs.size(); ++n)
      if (!(up(down(right_homs[n])) == right_homs[n])) r.fail_with("round trip fails at right morphism #" + std::to_string(n));
    return r;
  }

  // The closed-form transpose agrees with unit(c);right(f) on every supplied f.
  CheckReport check_direct_right(const typename C::Object& c, const std::vector<typename D::Morphism>& left_homs) const {
    CheckReport r;
    if (!direct_right || left_homs.empty()) return r;
    auto eta = unit(c);
    for (std::size_t n = 0; n < left_homs.size(); ++n)
      if (!(direct_right(c, left_homs[n]) == left.source.compose(eta, right.map(left_homs[n]))))
        r.fail_with("closed-form transpose differs at left morphism #" + std::to_string(n));
    return r;
  }
};

}  // namespace fole
