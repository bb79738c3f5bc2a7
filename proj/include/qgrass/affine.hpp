#ifndef QGRASS_AFFINE_HPP
#define QGRASS_AFFINE_HPP

#include "qgrass/report.hpp"
#include "qgrass/superspaces.hpp"

namespace qgrass
{

// Compares the quadratic presentation of the affine superspace with the algebra
// generated by the q-derivations d_i on Omega:
//  - each relation v_j v_i = c v_i v_j (i < j) and v_i^2 = 0 (i odd) holds in the
//    affine product, and the same relation with v -> d holds as an operator identity;
//  - for every degree t <= t_max the affine component and the span of degree-t
//    derivation words (seen as functionals u -> coefficient of 1 in w(u) on Omega
//    degree t) have the same dimension, both for PBW-ordered words and for all words.
relation_report affine_correspondence(int m, int n, int t_max, field ctx = generic_field());

} // namespace qgrass

#endif
