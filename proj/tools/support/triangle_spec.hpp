#pragma once

#include <json.hpp>

#include "expara/geometry.hpp"

namespace expara::cli {

using json = nlohmann::ordered_json;

// Triangle input, either as three vertices or as side lengths placed in the
// canonical frame A = (0,0), B = (c,0), C = (c1,c2) with c2 > 0.
struct TriangleSpec {
  Triangle tri;
  json echo; // verbatim input, replayed into reports
};

// Accepts {"vertices": [[x,y],[x,y],[x,y]]} or
// {"sides": {"a": .., "b": .., "c": ..}}.
TriangleSpec parse_triangle_spec(const json& in);

// Canonical placement via the law of cosines: c1 = b cos(alpha),
// c2 = b sin(alpha) with cos(alpha) = (b^2 + c^2 - a^2) / (2bc).
Triangle triangle_from_sides(double a, double b, double c);

Homogeneous3 parse_barycentric(const json& arr);

json point_json(Point2 p);
json vec_json(Vec2 v);
json triple_json(const Homogeneous3& h);
json triangle_json(const Triangle& t);

} // namespace expara::cli
