#pragma once
// Origin-symmetric convex bodies as norm unit balls: gauge evaluation,
// support points, planar boundary parameterization, inscribed affine-regular
// hexagons, and the planar hull/area helpers the area certificates need.

#include <array>
#include <functional>
#include <utility>
#include <vector>

namespace minkarr {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
double norm_inf(const Vec& a);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, double s);

enum class BodyKind { polytope, ball, affine_ball };

// A symmetric convex body: V-polytope (vertex list), the Euclidean unit
// ball, or a nonsingular linear image of it. Polytope vertices are deduped
// and sorted at construction; planar polytopes also precompute their CCW
// hull so gauge queries can walk boundary edges directly.
class ConvexBody {
 public:
  ConvexBody() = default;  // invalid placeholder (dim 0); factories validate

  static ConvexBody polytope(std::vector<Vec> vertices);
  static ConvexBody ball(int dim);
  static ConvexBody affine_ball(std::vector<Vec> matrix);  // rows of a d x d matrix

  BodyKind kind() const { return kind_; }
  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Vec>& matrix() const { return matrix_; }
  const std::vector<Vec>& hull2d() const { return hull2d_; }
  double circumradius() const { return circumradius_; }

  // Minkowski functional min{t >= 0 : x in tK}
  double gauge(const Vec& x) const;

  // maximizer of <direction, .> over the body and whether it is unique
  std::pair<Vec, bool> support_point(const Vec& direction) const;

  // boundary point in direction theta (planar bodies only)
  Vec boundary_point_2d(double theta) const;

  // CCW boundary polygon; exact vertices for polytopes, sampled otherwise
  std::vector<Vec> boundary_polygon(int samples = 256) const;

  // axis-aligned box containing the body, as (lo, hi)
  std::pair<Vec, Vec> bounding_box() const;

 private:
  double gauge_ray2d(const Vec& y) const;
  double gauge_lp(const Vec& y) const;
  void finish_polytope();

  BodyKind kind_ = BodyKind::ball;
  int dim_ = 0;
  std::vector<Vec> vertices_;       // polytope: deduped, lexicographically sorted
  std::vector<Vec> hull2d_;         // polytope d=2: CCW hull
  std::vector<Vec> matrix_;         // affine_ball: A
  std::vector<Vec> inverse_;        // affine_ball: A^-1
  std::vector<Vec> scaled_vertices_;  // vertices_ / pscale_, keeps the gauge LP well-scaled
  std::vector<Vec> scaled_hull2d_;
  double pscale_ = 1.0;
  double circumradius_ = 1.0;
};

// common bodies
ConvexBody make_cube(int d);  // [-1,1]^d
ConvexBody make_cross_polytope(int d);
ConvexBody make_square();
ConvexBody make_disc();
ConvexBody make_regular_hexagon();
ConvexBody make_hexagonal_prism();

struct BoundaryPoint2D {
  double theta = 0.0;
  Vec point;
};

// Origin-symmetric inscribed affine-regular hexagon, vertices
// +-w, +-v, +-(v-w), all on the boundary (gauge 1).
struct Hexagon {
  Vec w, v;
  std::array<Vec, 6> ring() const;  // w, v, v-w, -w, -v, w-v (CCW)
};

Hexagon inscribe_affine_regular_hexagon(const ConvexBody& body);

// Same inscription driven by an arbitrary planar gauge; used for the
// central plane section of a higher-dimensional body.
Hexagon inscribe_hexagon_in_gauge(const std::function<double(double, double)>& gauge2);

// Monotone-chain hull, CCW, strict turns (no collinear output vertices).
// Fewer than 3 independent points degenerate to a shorter chain.
std::vector<Vec> convex_hull_2d(std::vector<Vec> points);
double polygon_area(const std::vector<Vec>& polygon);

}  // namespace minkarr
