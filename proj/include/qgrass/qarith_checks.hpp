#ifndef QGRASS_QARITH_CHECKS_HPP
#define QGRASS_QARITH_CHECKS_HPP

#include "qgrass/qarith.hpp"
#include "qgrass/report.hpp"

namespace qgrass
{

// Identity sweep for the q-combinatorics in one field: Pascal (n <= n_max), q_int(-n) = -q_int(n),
// the closed forms of the binomial for r < 0, s < r and s < 0, bar symmetry of the Laurent forms,
// char(q) against a direct scan, and at a root of unity the reduction of q_binom(s, r) to a small
// q-binomial times an ordinary one (0 <= r <= s <= 3 ell) together with q_binom(s, ell).
relation_report qarith_property_sweep(field f, int n_max = 12);

} // namespace qgrass

#endif
