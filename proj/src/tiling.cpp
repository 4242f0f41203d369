#include "gieseking/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>

#include "gieseking/holonomy.hpp"
#include "gieseking/surgery.hpp"

namespace gieseking {

namespace {

// Scale-free, phase-free invariants of a projective matrix class, quantized
// for hashing: the four entry moduli normalized by the largest one, plus the
// reversing flag. Collisions are re-checked exactly.
struct OrbitKey {
  std::array<std::int64_t, 4> q;
  bool reversing;
  bool operator==(const OrbitKey&) const = default;
};

struct OrbitKeyHash {
  std::size_t operator()(const OrbitKey& k) const {
    std::size_t h = k.reversing ? 0x9e3779b97f4a7c15ull : 0;
    for (auto v : k.q) h ^= std::hash<std::int64_t>()(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

OrbitKey make_key(const ExtendedMoebius& t) {
  const double scale = t.m.cwiseAbs().maxCoeff();
  OrbitKey k;
  k.reversing = t.reversing;
  int i = 0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      k.q[i++] = static_cast<std::int64_t>(std::llround(std::abs(t.m(r, c)) / scale / 1e-8));
  return k;
}

std::string format_coord(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

double Viewport::diagonal() const { return std::hypot(width(), height()); }

bool Viewport::contains(Complex u) const {
  return u.real() >= min_re && u.real() <= max_re && u.imag() >= min_im &&
         u.imag() <= max_im;
}

double Tile::diameter() const {
  double d = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!vertices[i].is_infinity() && !vertices[j].is_infinity())
        d = std::max(d, std::abs(vertices[i].value() - vertices[j].value()));
  return d;
}

TileOrbit orbit_tiles(Complex z, int depth, const Viewport& viewport) {
  if (depth < 0 || depth > 12)
    throw std::invalid_argument("orbit depth must lie in [0, 12]");
  if (!(viewport.width() > 0.0) || !(viewport.height() > 0.0))
    throw std::invalid_argument("degenerate viewport");

  const GeneratorSet stab = stabilizer_generators(generators(z));
  const std::array<std::pair<GroupLetter, ExtendedMoebius>, 6> letters = {{
      {{"z1", 1}, stab.at("z1")},
      {{"z1", -1}, inverse(stab.at("z1"))},
      {{"p", 1}, stab.at("p")},
      {{"p", -1}, inverse(stab.at("p"))},
      {{"z2*", 1}, stab.at("z2*")},
      {{"z2*", -1}, inverse(stab.at("z2*"))},
  }};

  struct Element {
    ExtendedMoebius t;
    GroupWord word;
    int depth;
  };
  std::vector<Element> elements;
  std::unordered_map<OrbitKey, std::vector<std::size_t>, OrbitKeyHash> index;

  auto try_insert = [&](const ExtendedMoebius& t, const GroupWord& w, int d) {
    const ExtendedMoebius n = normalized(t);
    const OrbitKey key = make_key(n);
    auto& bucket = index[key];
    for (std::size_t i : bucket)
      if (projectively_equal(elements[i].t, n, 1e-9)) return false;
    bucket.push_back(elements.size());
    elements.push_back({n, w, d});
    return true;
  };

  try_insert(ExtendedMoebius::identity(), {}, 0);
  std::size_t frontier_begin = 0;
  for (int d = 1; d <= depth; ++d) {
    const std::size_t frontier_end = elements.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      const Element parent = elements[i];  // copy: elements may reallocate
      for (const auto& [letter, gen] : letters) {
        GroupWord w = parent.word;
        w.push_back(letter);
        try_insert(compose(parent.t, gen), w, d);
      }
    }
    frontier_begin = frontier_end;
  }

  TileOrbit orbit;
  orbit.viewport = viewport;
  orbit.base_shape = z;
  if (std::abs(std::abs(z) - 1.0) >= 1e-12)
    orbit.fixed_point = fixed_point_v(z);

  const std::array<BoundaryPoint, 3> base = {BoundaryPoint::finite({0.0, 0.0}),
                                             BoundaryPoint::finite({1.0, 0.0}),
                                             BoundaryPoint::finite(z)};
  const double cull_diameter = 0.005 * viewport.diagonal();
  for (const Element& e : elements) {
    Tile tile;
    tile.word = e.word;
    tile.depth = e.depth;
    bool any_inside = false;
    for (int i = 0; i < 3; ++i) {
      tile.vertices[i] = apply(e.t, base[i]);
      if (tile.vertices[i].is_infinity())
        tile.has_infinite_vertex = true;
      else if (viewport.contains(tile.vertices[i].value()))
        any_inside = true;
    }
    if (!tile.has_infinite_vertex && !any_inside && tile.diameter() < cull_diameter)
      continue;
    orbit.tiles.push_back(std::move(tile));
  }

  std::sort(orbit.tiles.begin(), orbit.tiles.end(), [](const Tile& a, const Tile& b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    return word_to_string(a.word) < word_to_string(b.word);
  });
  return orbit;
}

std::string render_svg(const TileOrbit& orbit, const TileStyle& style) {
  static const std::vector<std::string> kDefaultPalette = {
      "#4e79a7", "#f28e2b", "#76b7b2", "#e15759",
      "#59a14f", "#edc948", "#b07aa1", "#9c755f"};
  const auto& palette = style.palette.empty() ? kDefaultPalette : style.palette;
  const Viewport& vp = orbit.viewport;
  const double stroke =
      style.stroke_width > 0.0 ? style.stroke_width : 0.001 * vp.diagonal();

  // The complex plane has Im pointing up; SVG y points down.
  auto sx = [&](double re) { return re; };
  auto sy = [&](double im) { return -im; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         format_coord(vp.width()) + "\" height=\"" + format_coord(vp.height()) +
         "\" viewBox=\"" + format_coord(sx(vp.min_re)) + " " +
         format_coord(sy(vp.max_im)) + " " + format_coord(vp.width()) + " " +
         format_coord(vp.height()) + "\">\n";
  svg += "<rect x=\"" + format_coord(sx(vp.min_re)) + "\" y=\"" +
         format_coord(sy(vp.max_im)) + "\" width=\"" + format_coord(vp.width()) +
         "\" height=\"" + format_coord(vp.height()) +
         "\" fill=\"white\" stroke=\"#333333\" stroke-width=\"" +
         format_coord(stroke) + "\"/>\n";

  for (const Tile& tile : orbit.tiles) {
    const std::string color = palette[tile.depth % palette.size()];
    if (!tile.has_infinite_vertex) {
      std::string d;
      for (int i = 0; i < 3; ++i) {
        const Complex u = tile.vertices[i].value();
        d += (i == 0 ? "M" : " L") + format_coord(sx(u.real())) + "," +
             format_coord(sy(u.imag()));
      }
      d += " Z";
      svg += "<path d=\"" + d + "\" fill=\"" + color +
             "\" fill-opacity=\"0.45\" stroke=\"#222222\" stroke-width=\"" +
             format_coord(stroke) + "\"/>\n";
      continue;
    }
    // One vertex is ideal: draw the finite edge plus rays escaping from the
    // finite vertices, clipped at the viewport boundary (SVG cannot hold a
    // point at infinity).
    std::vector<Complex> finite;
    for (const auto& v : tile.vertices)
      if (!v.is_infinity()) finite.push_back(v.value());
    if (finite.size() < 2) continue;
    const Complex mid = 0.5 * (finite[0] + finite[1]);
    const double reach = 2.0 * vp.diagonal();
    std::string d;
    for (int i = 0; i < 2; ++i) {
      Complex dir = finite[i] - mid;
      const double len = std::abs(dir);
      dir = len > 0.0 ? dir / len : Complex(1.0, 0.0);
      const Complex far = finite[i] + reach * dir;
      d += (i == 0 ? "M" : " L") + format_coord(sx(far.real())) + "," +
           format_coord(sy(far.imag()));
      d += " L" + format_coord(sx(finite[i].real())) + "," +
           format_coord(sy(finite[i].imag()));
    }
    svg += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"" + format_coord(stroke) + "\"/>\n";
  }

  if (style.show_fixed_point && orbit.fixed_point) {
    const Complex v = *orbit.fixed_point;
    svg += "<circle cx=\"" + format_coord(sx(v.real())) + "\" cy=\"" +
           format_coord(sy(v.imag())) + "\" r=\"" +
           format_coord(0.008 * vp.diagonal()) +
           "\" fill=\"#d62728\" stroke=\"none\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace gieseking
