#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidrep/drinfeld.hpp"
#include "braidrep/infrep.hpp"

namespace braidrep {

// A color is a coordinate vector; natural colors have a single coordinate.
using Color = Vec;

struct BratteliVertex {
  std::string label;
  size_t dim = 0;
  size_t multiplicity = 1;     // multiplicity in the restriction of the sink
  std::optional<Color> color;  // T_r
  std::optional<Color> z;      // Z_r = 2 T_r / r(r-1)
  Matrix basis;                // isotypic subspace, when built from a representation
};

struct BratteliEdge {
  size_t from = 0, to = 0;  // indices in consecutive levels
  size_t multiplicity = 1;
  std::optional<Color> color;  // Y_r(p -> q)
  Matrix basis;                // components of q isomorphic to p
};

// levels[0] is the source O (level 1); edges[k] runs from levels[k] to levels[k+1].
struct BratteliDiagram {
  std::vector<std::vector<BratteliVertex>> levels;
  std::vector<std::vector<BratteliEdge>> edges;
  int n() const { return static_cast<int>(levels.size()); }
  bool multiplicity_free() const;
  // dim(q) = sum of mult * dim(p) over incoming edges
  std::vector<std::string> invariant_failures() const;
  std::vector<size_t> parents(int level, size_t v) const;  // level >= 2, 1-based level
};

// Isotypic splitting along B_1 c .. c B_n with natural colors; throws InputError
// when T_r has eigenvalues outside Q or acts non-scalarly on a component.
BratteliDiagram build_from_chain(const InfRep& r);

// Z_r by barycentres from the level-2 colors, T_r = r(r-1) Z_r / 2, Y_r = T_r(q) - T_{r-1}(p).
// throws InputError on a diagram with multiplicity
BratteliDiagram formal_coloring(const BratteliDiagram& d, const std::vector<Color>& level2);

// weights w over the level-2 vertices with Z_r(v) = sum w_p Z_2(p)
std::vector<Rational> barycentric_weights(const BratteliDiagram& d, int level, size_t v);

// whether the vertex colors agree (and edge colors, when both carry them)
bool same_coloring(const BratteliDiagram& a, const BratteliDiagram& b);

struct InjectivityVerdict {
  size_t paths = 0;
  bool injective = false;
  bool checked = false;  // is_agregating was run (only when injective)
  AgregatingResult witness;
  bool holds() const { return !injective || witness.found; }
};
InjectivityVerdict injectivity_agregation(const BratteliDiagram& colored, const InfRep& r, uint64_t seed,
                                          int trials = 50);
// vertex-color tuples along all paths from O to the given level
std::vector<std::vector<Color>> path_colors(const BratteliDiagram& colored, int level);

// additive exponents of z_r from those at `level`; out[k] is level `level + k`
std::vector<std::vector<Color>> zn_recovery(const BratteliDiagram& d, int level, const std::vector<Color>& exponents);
// h-linear coefficient of log det R(sigma_1)
FieldElem log_det_linear(const BraidRep& R);

}  // namespace braidrep
