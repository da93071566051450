#pragma once

#include <memory>
#include <string>
#include <vector>

#include "yangian/check.hpp"
#include "yangian/liealg.hpp"

namespace yang {

using Spec = std::shared_ptr<const LieAlgebra>;
Spec make_spec(Series s, int n);

/// Representation of g_N: images of every F(i, j), stored as a full N x N table
/// (positions as in LieAlgebra::pos).
struct GRep {
    Spec g;
    int dim = 0;
    std::vector<Mat> F;

    const Mat& f(int i, int j) const { return F[g->pos(i) * g->N() + g->pos(j)]; }
    /// Image of an algebra element given by its natural N x N matrix.
    Mat of(const Mat& X) const;
    /// Images of the F-basis labels in order.
    std::vector<Mat> basis_mats() const;
    /// Fills the table from images of the basis labels.
    static GRep from_basis(Spec g, const std::vector<Mat>& basis_images);
};

GRep trivial_grep(Spec g);
GRep natural_grep(Spec g);
/// Spin module on the exterior algebra of C^n via fermionic operators (orthogonal only).
/// node 0 starts from the vacuum; node 1 (D series) from the first occupied mode.
GRep spin_grep(Spec g, int node);
/// B node 0 and D nodes 0, 1.
bool is_spin_node(const LieAlgebra& g, int node);
/// V(omega_i) realized as a cyclic submodule: spin construction for the spin nodes,
/// antisymmetric tensors e_{-n} ^ ... ^ e_{-(i+1)} otherwise.
GRep fundamental_grep(Spec g, int node);
GRep g_tensor(const GRep& a, const GRep& b);
/// Restriction to an invariant subspace.
GRep g_restrict(const GRep& a, const RowSpace& s);
/// Cyclic span of a seed vector under all basis operators.
RowSpace g_cyclic_span(const GRep& a, const SVec& seed);
CheckReport check_grep(const GRep& rep);

/// Representation of the J presentation: g-action plus images of J(F(i, j)).
struct JRep {
    GRep g;
    K zeta;
    std::vector<Mat> J;

    int dim() const { return g.dim; }
    const Spec& spec() const { return g.g; }
    const Mat& j(int i, int j) const { return J[g.g->pos(i) * g.g->N() + g.g->pos(j)]; }
    Mat J_of(const Mat& X) const;
};

/// b = d_i a + (zeta d_i / 2)(kappa - d_i): the eigenvalue of J(h_i) on the highest weight
/// vector of V(i; a).
K fundamental_b(const LieAlgebra& g, int node, const K& a, const K& zeta);
/// The scalar s with J(X) = s X on V(i; a). Since h_i acts on the highest weight vector by d_i,
/// s = b / d_i = a + (zeta / 2)(kappa - d_i).
K fundamental_j_scalar(const LieAlgebra& g, int node, const K& a, const K& zeta);

/// J(X) = b X on a given g-module.
JRep j_scalar(const GRep& rep, const K& b, const K& zeta);
/// C^N with J acting by zero.
JRep natural_j_rep(Spec g, const K& zeta);
/// V(omega_i) with J = s X, s = fundamental_j_scalar(a); throws for nodes failing the mark condition.
JRep fundamental_j_rep(Spec g, int node, const K& a, const K& zeta);
/// Coproduct: J(X) (x) 1 + 1 (x) J(X) + zeta/2 [X (x) 1, Omega].
JRep j_tensor(const JRep& a, const JRep& b);
/// tau_z: J(X) -> J(X) + z zeta X.
JRep j_shift(const JRep& a, const K& z);
/// Antipode image S(J(X)) = -J(X) + zeta kappa X.
Mat j_antipode(const JRep& a, int i, int j);

/// J0 (equivariance), J1 (linearity and the theta symmetry), J2 on basis triples
/// (all triples when dim g <= 10, else triple_budget evenly spaced ones), and J3 for sp2.
CheckReport check_j_relations(const JRep& rep, int triple_budget = 300);

/// Current-presentation generators x_{ir}^+-, h_{ir} for r <= rmax.
struct CurRep {
    Spec g;
    K zeta;
    int dim = 0;
    int rmax = 0;
    std::vector<std::vector<Mat>> xp, xm, h;  // [node][r]

    const Mat& Xp(int i, int r) const;
    const Mat& Xm(int i, int r) const;
    const Mat& H(int i, int r) const;
    const Mat& X(int sign, int i, int r) const { return sign > 0 ? Xp(i, r) : Xm(i, r); }
};

/// Closed-form evaluation module on C^N.
CurRep natural_current_rep(Spec g, const K& zeta, int rmax = 8);
/// tau_b on the current side: x_{ir} -> sum_s C(r, s) b^{r-s} x_{is}.
CurRep cur_shift(const CurRep& rep, const K& b);
/// Relations 1-4 of the current presentation for r <= rmax, s <= smax; Serre at r = 0.
CheckReport check_current_relations(const CurRep& rep, int rmax = 3, int smax = 3);
/// The finite relation set in degrees 0 and 1, plus the extra relation for sp2.
CheckReport check_minimal_relations(const CurRep& rep);

/// Representation of the RTT presentation:
///   t_ij(u) = phi(u) M_ij(u) / den(u),
/// with phi a scalar series, den a scalar polynomial and M_ij matrix polynomials of
/// degree <= deg den. Coefficients t^(r)_ij are normalized by zeta^r.
struct RTTRep {
    Spec g;
    K zeta;
    int dim = 0;
    int order = 8;
    TruncSeriesU phi;
    PolyU den;
    std::vector<MatPolyU> M;
    std::vector<std::vector<Mat>> coef;  // [r][pos(i)*N + pos(j)], r = 0..order

    const MatPolyU& m(int i, int j) const { return M[g->pos(i) * g->N() + g->pos(j)]; }
    const Mat& t(int r, int i, int j) const;
    /// Recomputes coef from phi, den and M.
    void expand();
};

RTTRep rtt_identity(Spec g, const K& zeta, int order = 8);
/// g(u) (delta + E_ij (u - kappa)^-1 - theta E_{-j,-i} u^-1) with u -> u / zeta.
RTTRep rtt_natural_rep(Spec g, const K& zeta, int order = 8);
/// f(u) (delta + F_kl u^-1) on the spin module of the given node, u -> u / zeta.
RTTRep rtt_spin_rep(Spec g, int node, const K& zeta, int order = 8);
RTTRep rtt_tensor(const RTTRep& a, const RTTRep& b);
/// T(u) -> T(u - c)
RTTRep rtt_shift(const RTTRep& a, const K& c);
RTTRep rtt_restrict(const RTTRep& a, const RowSpace& s);
/// The RTT relation (exact, on a grid) and the unitarity relation (polynomial part exact,
/// scalar prefactor to the stored order).
CheckReport check_rtt_relations(const RTTRep& rep);

/// g(u) g(u + kappa) = u^2 / (u^2 - 1)
TruncSeriesU natural_prefactor(const Q& kappa, int order);
/// f(u) f(u + kappa) = 4u(u + kappa) / (4u(u + kappa) - 2 kappa - 1)
TruncSeriesU spin_prefactor(const Q& kappa, int order);

}  // namespace yang
