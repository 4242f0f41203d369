#pragma once

// Orbit of the base triangle (0, 1, z) on C_inf under words in the vertex
// stabilizer generators {z1, p, z2*}, rendered as an SVG picture of the
// cusp tiling (a spiral of similar triangles accumulating at the fixed
// point v for the surgered structures).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gieseking/moebius.hpp"

namespace gieseking {

struct Viewport {
  double min_re = -4.0;
  double min_im = -4.0;
  double max_re = 4.0;
  double max_im = 4.0;

  double width() const { return max_re - min_re; }
  double height() const { return max_im - min_im; }
  double diagonal() const;
  bool contains(Complex u) const;
};

struct Tile {
  std::array<BoundaryPoint, 3> vertices;
  bool has_infinite_vertex = false;
  GroupWord word;
  int depth = 0;

  /// Euclidean diameter over the finite vertices.
  double diameter() const;
};

struct TileOrbit {
  std::vector<Tile> tiles;
  Viewport viewport;
  std::optional<Complex> fixed_point;
  Complex base_shape{0.0, 0.0};
};

/// Breadth-first enumeration of words of length <= depth over
/// {z1^+-1, p^+-1, z2*^+-1}; duplicate transformations are pruned by hashing
/// quantized scale-free matrix invariants, with hash collisions re-checked by
/// exact projective comparison. Tiles lying entirely outside the viewport
/// with diameter below 0.5% of the viewport diagonal are culled from the
/// output (enumeration itself is not truncated).
/// depth must lie in [0, 12]; the viewport must be nondegenerate.
TileOrbit orbit_tiles(Complex z, int depth, const Viewport& viewport);

struct TileStyle {
  double stroke_width = 0.0;  // 0 = auto (0.1% of the viewport diagonal)
  std::vector<std::string> palette;  // fill colors cycled by depth; empty = default
  bool show_fixed_point = true;
};

/// Deterministic SVG 1.1 document: byte-identical output for identical
/// input; one path per tile, ordered by depth then word text. Tiles with an
/// ideal vertex are drawn as open wedges clipped at the viewport boundary.
std::string render_svg(const TileOrbit& orbit, const TileStyle& style = {});

}  // namespace gieseking
