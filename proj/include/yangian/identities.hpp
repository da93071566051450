#pragma once

#include "yangian/check.hpp"
#include "yangian/upbw.hpp"

namespace yang {

/// In U(g), for all nodes i, j:
///   [h_i, v_j] = 0, [h_i, w_j^+-] = +-(a_i, a_j) w_j^+-, [vtilde_i, x_j^+-] = +-(a_i, a_j) w_j^+-,
///   [w_i^+, x_j^-] = delta_ij v_i = [x_i^+, w_j^-],
///   [w_i^+-, x_j^+-] - [x_i^+-, w_j^+-] = -+1/2 (a_i, a_j) {x_i^+-, x_j^+-}.
CheckReport check_gnw_identities(const LieAlgebra& g);
/// v_k = kappa/2 h_k - h_k^2/2 + 1/2 sum_{alpha>0} (alpha, alpha_k) x_alpha^- x_alpha^+.
CheckReport check_v_cartan_form(const LieAlgebra& g);
/// U(sl2) with e, f, h: normal form of [w^+, w^-], [v, [w^-, w^+]] = 0 and
/// e{f,h} + {f,h}e = 4efh - 2h - 2h^2.
CheckReport check_sl2_identities();
/// For 1 <= i != j <= n:
///   1/4 sum_{k<l, r<s} [F_sr [F_jj, F_rs], F_lk [F_ii, F_kl]]
///     = sum_{a,b} [F_ia F_ai, F_jb F_bj] + 2 sum_a (F_ja F_{a,-i} F_{-i,j} - F_{j,-i} F_{-i,a} F_aj).
CheckReport check_cartan_commutator_reduction(const LieAlgebra& g);

}  // namespace yang
