#pragma once

#include <string>
#include <vector>

#include "yangian/check.hpp"
#include "yangian/yangrep.hpp"

namespace yang {

/// Matrix of rational functions stored over a common denominator: num(u) / den(u).
struct RatMatrix {
    int dim = 0;
    MatPolyU num;
    PolyU den{K(1)};
    /// Set when built at zeta = 0 (the classical point, R = I).
    bool classical = false;

    /// Throws PoleError when den(u) = 0.
    Mat eval(const K& u) const;
    RatFunU entry(int r, int c) const;
    /// M(u + c)
    RatMatrix shift(const K& c) const;
    /// M(-u)
    RatMatrix negate_arg() const;
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    /// Equality as rational functions (cross multiplication).
    friend bool operator==(const RatMatrix& a, const RatMatrix& b);
    /// a(u) = f(u) b(u) for a scalar rational function f (b nonzero); f is stored in ratio.
    friend bool proportional(const RatMatrix& a, const RatMatrix& b, RatFunU* ratio);
};

/// R(u) = I - (zeta/u) P + zeta/(u - zeta kappa) Q on C^N (x) C^N.
RatMatrix r_matrix(const LieAlgebra& g, const K& zeta);
/// I - (zeta/u) P: the gl_N solution, which still satisfies the Yang-Baxter equation.
RatMatrix r_matrix_without_q(const LieAlgebra& g, const K& zeta);
/// I - (zeta/u) P + zeta/(u - c) Q; a solution only for c = zeta kappa.
RatMatrix r_matrix_with_pole(const LieAlgebra& g, const K& zeta, const K& c);
/// Twisted transposition in tensor slot 1 or 2 of C^N (x) C^N.
Mat partial_transpose(const LieAlgebra& g, const Mat& m, int slot);
RatMatrix partial_transpose(const LieAlgebra& g, const RatMatrix& m, int slot);

/// R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v) on (C^N)^(x)3, checked on a grid
/// large enough for the cleared numerators.
CheckReport check_qybe(const LieAlgebra& g, const RatMatrix& R, const K& zeta);
CheckReport check_qybe(const LieAlgebra& g, const K& zeta);
/// R(u)R(-u) = (1 - zeta^2 u^-2) I and R(u) R(u + zeta kappa)^{t1} = (1 - zeta^2 u^-2) I.
CheckReport check_unitarity_crossing(const LieAlgebra& g, const K& zeta);

/// P^2 = I, Q^2 = N Q, PQ = QP = +-Q, P^{t1} = P^{t2} = Q, Omega = P - Q, [Delta X, Omega] = 0.
CheckReport check_tensor_identities(const LieAlgebra& g);
/// sum over an orthonormal basis of ad(X)^2 = 4 kappa on the adjoint.
CheckReport check_casimir(const LieAlgebra& g);

/// Projectors onto the summands of C^N (x) C^N: three for N > 2, two for N = 2.
std::vector<Mat> projectors(const LieAlgebra& g);
CheckReport check_projectors(const LieAlgebra& g);

/// h with h(u) h(u + zeta kappa) = (1 - zeta^2 u^-2)^-1.
TruncSeriesU h_series(const LieAlgebra& g, const K& zeta, int order = 8);
/// h_2 = zeta^2/2 and h(u)R(u) = 1 - zeta u^-1 (P-Q) + zeta^2 u^-2 (P-Q)^2 / 2 + O(u^-3),
/// with (P-Q)^2 = I + 2 kappa Q.
CheckReport check_log_r(const LieAlgebra& g, const K& zeta);

struct SolutionSpace {
    std::vector<RatMatrix> basis;
    int rank = 0;
    int degree_bound = 0;
    bool stable = true;
    bool reconstructed = true;
    std::string note;
};

/// Series solutions R(w) = sum_{k<=D} R^(k) w^-k of the intertwiner equation
///   ((J_V + wX) (x) 1 + 1 (x) J_W + zeta/2 [X (x) 1, Omega]) R = R ((J_V + wX) (x) 1 + 1 (x) J_W - zeta/2 [X (x) 1, Omega]),
/// with each R^(k) commuting with the diagonal g-action, up to scalar series multiples,
/// followed by Pade reconstruction of every entry.
SolutionSpace solve_intertwiner(const JRep& V, const JRep& W, int degree_bound = 6);

/// Entries A, B, C of a solution of the form A I + B P + C Q (natural (x) natural, N > 2).
struct ABC {
    RatFunU A, B, C;
};
ABC abc_decomposition(const LieAlgebra& g, const RatMatrix& m);
/// The solver on natural (x) natural: rank 1, proportional to R(u), A/B/C relations.
CheckReport check_intertwiner_natural(const LieAlgebra& g, const K& zeta, int degree_bound = 6);

}  // namespace yang
