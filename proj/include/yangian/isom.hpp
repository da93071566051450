#pragma once

#include <string>

#include "yangian/check.hpp"
#include "yangian/yangrep.hpp"

namespace yang {

/// Images of v_i, w_i^+- and vtilde_i on a g-module.
struct SpecialImages {
    Mat v, wp, wm, vtilde;
};
SpecialImages special_images(const GRep& rep, int node);

/// J presentation -> current presentation:
///   x_{i1}^+- = J(x_i^+-) - zeta w_i^+-,  h_{i1} = J(h_i) - zeta v_i,
/// higher r by x_{i,r+1}^+- = +-(alpha_i, alpha_i)^-1 [h_{i1} - zeta h_{i0}^2 / 2, x_{ir}^+-]
/// and h_{ir} = [x_{ir}^+, x_{i0}^-].
CurRep phi_cr_from_j(const JRep& rep, int rmax = 4);
/// Current presentation -> J presentation: J(h_i) = h_{i1} + zeta v_i,
/// J(x_i^+-) = x_{i1}^+- + zeta w_i^+-, extended to g by equivariance.
JRep phi_j_from_cur(const CurRep& rep);
/// The g-action generated by the degree-0 current generators.
GRep grep_from_current(const CurRep& rep);
/// RTT presentation -> J presentation: F_ij -> t^(1)_ij,
/// J(F_ij) -> zeta (t^(2)_ij - 1/2 sum_k t^(1)_ik t^(1)_kj). Needs order >= 2.
JRep phi_j_from_rtt(const RTTRep& rep);
/// Pullback along F_ij -> -F_ji, J(F_ij) -> -J(F_ji).
JRep chevalley_involution(const JRep& rep);

/// 4 zeta^-2 [J(F_ii), J(F_jj)] = sum_{a,b} [F_ia F_ai, F_jb F_bj]
///   + 2 sum_a (F_ja F_{a,-i} F_{-i,j} - F_{j,-i} F_{-i,a} F_aj)   for 1 <= i != j <= n.
CheckReport check_cartan_j_commutators(const JRep& rep);
/// t^(2)_ij = -theta_ij t^(2)_{-j,-i} - kappa t^(1)_ij + sum_a t^(1)_ia t^(1)_aj (zeta = 1 units).
CheckReport check_t2_symmetry(const RTTRep& rep);
/// The involution composite: t^(1)_ij = -F_ji and t^(2)_ij = -zeta^-1 J(F_ji) + 1/2 sum_k F_ki F_jk
/// on the pulled-back module.
CheckReport check_involution_composite(const RTTRep& rep);
/// Sums over positive roots of (alpha, alpha_0){x_alpha^+, x_alpha^-} on a module.
Mat root_anticommutator_sum(const GRep& rep, int node);

enum class Route { RttJ, JCur, RttJCur };
/// "rtt-j", "j-cur", "rtt-j-cur"; throws std::invalid_argument otherwise.
Route parse_route(const std::string& s);
std::string route_name(Route r);

/// Transport along the route and run the target checkers.
CheckReport verify_transport(const RTTRep& rep, Route route, int rmax = 3);
CheckReport verify_transport(const JRep& rep, Route route, int rmax = 3);

}  // namespace yang
