#pragma once
// Closed-form cardinality bounds for order-mu arrangements of translates
// and the dominance check asserting them on concrete arrangements.

#include "minkarr/arrangement.hpp"

namespace minkarr {

// (1 + 2/(1+mu))^d; mu=0 gives 3^d, mu=1 gives 2^d
double upper_bound(int d, double mu);
long long upper_bound_floor(int d, double mu);

// (lambda+1)^d for point sets with pairwise gauge distances in [1, lambda]
double packing_bound(int d, double lambda);

// guaranteed size of a maximal translate arrangement, d >= 2
int lower_bound_translates(int d);

// item count <= floor(upper_bound); expects a verified translate arrangement
bool check_dominance(const Arrangement& arr);

}  // namespace minkarr
