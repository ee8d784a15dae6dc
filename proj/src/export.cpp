#include "laguerre/export.hpp"

#include <regex>

#include "laguerre/error.hpp"

namespace laguerre {

using nlohmann::json;

json plane_to_json(const Plane& plane) {
  json points = json::array();
  for (const Point& p : plane.points()) points.push_back(to_json(p));
  json circles = json::array();
  for (const Circle& c : plane.circles()) circles.push_back(to_json(c));
  json generators = json::array();
  for (const Generator& g : plane.generators()) generators.push_back(to_json(g));
  return {{"q", plane.q()}, {"points", points}, {"circles", circles}, {"generators", generators}};
}

Pencil parse_pencil(const Plane& plane, const std::string& text) {
  if (text == "canonical") return canonical_pencil();
  static const std::regex grammar(R"((p:(-?\d+),(-?\d+)|ideal:(-?\d+))(@K:(-?\d+),(-?\d+),(-?\d+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, grammar))
    throw Error(Errc::invalid_argument, "pencil must be canonical, p:x,y[@K:a,b,c] or ideal:a[@K:a,b,c]; got '" + text + "'");
  auto num = [&](int i) {
    long long v = std::stoll(m[i].str());
    if (v < 0 || v >= plane.q())
      throw Error(Errc::out_of_range, "pencil coordinate " + m[i].str() + " outside [0, " + std::to_string(plane.q()) + ")");
    return static_cast<int>(v);
  };
  Pencil pencil;
  if (m[2].matched) {
    pencil.p = Point::affine(num(2), num(3));
    pencil.K = {0, 0, pencil.p.y};
  } else {
    pencil.p = Point::at_infinity(num(4));
    pencil.K = {pencil.p.x, 0, 0};
  }
  if (m[5].matched) pencil.K = {num(6), num(7), num(8)};
  if (!plane.incident(pencil.p, pencil.K))
    throw Error(Errc::not_incident, to_string(pencil.p) + " is not on " + to_string(pencil.K));
  return pencil;
}

}  // namespace laguerre
