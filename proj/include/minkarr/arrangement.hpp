#pragma once
// Arrangements of positive homothets lambda*K + c and the pairwise verifier
// for intersecting arrangements of order mu: every pair must intersect
// (gauge distance of centers <= lambda_i + lambda_j) while no interior may
// reach another body's mu-kernel (gauge distance >= lambda_i + mu*lambda_j,
// both ways). verify() runs the pair checks in an OpenMP kernel;
// verify_serial() is the plain reference loop kept for testing and
// benchmarking against it.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "minkarr/geometry.hpp"

namespace minkarr {

struct Homothet {
  Vec center;
  double ratio = 1.0;
};

struct Arrangement {
  ConvexBody body;
  double mu = 0.0;
  std::vector<Homothet> items;
};

// throws std::invalid_argument on dimension/range violations
void validate_arrangement(const Arrangement& arr);

enum class ViolationKind { disjoint, kernel_overlap };

struct Violation {
  int i = 0, j = 0;
  ViolationKind kind = ViolationKind::disjoint;
  double measured_gauge = 0.0;
  double threshold = 0.0;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;  // sorted by (i, j)
  bool translates_only = true;        // all ratios equal
  bool all_ratios_one = true;
};

VerificationReport verify(const Arrangement& arr, double tol = 1e-9);
VerificationReport verify_serial(const Arrangement& arr, double tol = 1e-9);

// Canonical contact point of two touching homothets: the point of the
// segment [c_i, c_j] on both boundaries. For polytopal bodies the contact
// set may be a segment; this returns its ray representative.
Vec touch_point(const ConvexBody& body, const Homothet& a, const Homothet& b,
                double tol = 1e-9);

// For pairwise touching arrangements: all (i,j,k) where the canonical touch
// point of (i,j) lies in body k. Empty result certifies no triple contact
// through canonical points.
struct TripleHit {
  int i = 0, j = 0, k = 0;
  Vec witness;
};
std::vector<TripleHit> triple_point_check(const Arrangement& arr, double tol = 1e-6);

// Planar area certificate for translate arrangements with pairwise gauge
// distances in [1, lambda_max]:
//   n/4 * area(K)  <=  area(conv U (c_i + K/2))  <=  ((lambda_max+1)/2)^2 * area(K).
// Throws if the inequalities fail beyond tol — that would falsify the
// packing argument the verifier relies on.
struct VolumeCertificate {
  double lhs = 0.0, mid = 0.0, rhs = 0.0;
};
VolumeCertificate volume_certificate(const Arrangement& arr, double lambda_max,
                                     double tol = 1e-9);

}  // namespace minkarr
