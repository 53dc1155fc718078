#include "diagen/geom/types.hpp"

#include <cassert>

#include "diagen/geom/catalog.hpp"

namespace diagen::geom {

std::string AttrKey::to_string() const {
  switch (tag) {
    case Tag::Side:
      return "side" + std::to_string(index);
    case Tag::Angle:
      return "angle" + std::to_string(index);
    case Tag::Radius:
      return "radius";
    case Tag::ArcAngle:
      return "arc_angle";
    case Tag::Height:
      return "height";
    case Tag::Perimeter:
      return "perimeter";
    case Tag::Area:
      return "area";
    case Tag::ArcLength:
      return "arc_length";
    case Tag::Expression:
      return "expression";
    case Tag::Domain:
      return "domain";
  }
  return "?";
}

std::optional<AttrKey> AttrKey::parse(std::string_view text) {
  auto indexed = [&](std::string_view prefix, Tag tag) -> std::optional<AttrKey> {
    if (text.size() <= prefix.size() || text.substr(0, prefix.size()) != prefix)
      return std::nullopt;
    int idx = 0;
    for (char c : text.substr(prefix.size())) {
      if (c < '0' || c > '9') return std::nullopt;
      idx = idx * 10 + (c - '0');
    }
    return AttrKey{tag, idx};
  };
  if (auto k = indexed("side", Tag::Side)) return k;
  if (auto k = indexed("angle", Tag::Angle)) return k;
  if (text == "radius") return radius();
  if (text == "arc_angle") return arc_angle();
  if (text == "height") return height();
  if (text == "perimeter") return perimeter();
  if (text == "area") return area();
  if (text == "arc_length") return arc_length();
  if (text == "expression") return expression();
  if (text == "domain") return domain();
  return std::nullopt;
}

std::string ShapeInstance::name() const {
  std::string out;
  for (const auto& l : labels) out += l;
  return out;
}

int ShapeInstance::edge_count() const { return kind_info(kind).edge_count; }

std::pair<Point, Point> ShapeInstance::edge(int i) const {
  assert(i >= 0 && i < edge_count());
  // The circle's vertex list carries its center behind the two chord
  // endpoints, so its edge cycle spans only the first two vertices.
  int m = kind == ShapeKind::Circle ? 2 : static_cast<int>(vertices.size());
  return {vertices[i % m], vertices[(i + 1) % m]};
}

double ShapeInstance::edge_length(int i) const {
  auto [a, b] = edge(i);
  return dist(a, b);
}

std::string ShapeInstance::edge_name(int i) const {
  int m = kind == ShapeKind::Circle ? 2 : edge_count();
  return labels[i % m] + labels[(i + 1) % m];
}

Point ShapeInstance::centroid() const {
  // Mean of boundary sample points: adequate for placement orientation.
  auto poly = boundary_polygon(*this, 32);
  Point c{0, 0};
  for (auto p : poly) c = c + p;
  return c * (1.0 / static_cast<double>(poly.size()));
}

}  // namespace diagen::geom
