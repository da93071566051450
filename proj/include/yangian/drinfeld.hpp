#pragma once

#include <string>
#include <vector>

#include "yangian/check.hpp"
#include "yangian/isom.hpp"

namespace yang {

enum class Side { Cur, Rtt };

/// Monic polynomials: Q_0..Q_{n-1} on the current side, P_1..P_n on the RTT side.
struct DrinfeldTuple {
    Side side = Side::Cur;
    std::vector<PolyU> polys;

    friend bool operator==(const DrinfeldTuple& a, const DrinfeldTuple& b) {
        return a.side == b.side && a.polys == b.polys;
    }
    std::string str() const;
};

/// Thrown when a module has no highest weight vector in the stored range, or a weight
/// series is not a ratio of shifted polynomials.
struct HighestWeightError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CurHighestWeight {
    SVec xi;
    std::vector<std::vector<K>> lambda;  // [node][r]
};
struct RttHighestWeight {
    SVec xi;
    std::vector<TruncSeriesU> lambda;  // by pos(k), in powers of u^-1
};

/// xi: common kernel of all x_{ir}^+ in the stored range, cut down to the top g-weight.
CurHighestWeight highest_weight_cur(const CurRep& rep);
/// xi: common kernel of the t^(r)_kl with k < l, cut down to the top g-weight.
RttHighestWeight highest_weight_rtt(const RTTRep& rep);

/// Monic Q of degree deg with Q(u + c) / Q(u) = s(u), by a linear solve in the
/// coefficients; validated by re-expansion.
PolyU polynomial_from_ratio(const TruncSeriesU& s, const K& c, int deg);

/// 1 + zeta sum_r lambda_i^r u^{-r-1} = Q_i(u + zeta d_i) / Q_i(u).
DrinfeldTuple tuple_from_weights(const CurHighestWeight& hw, const LieAlgebra& g, const K& zeta);
/// lambda_{k-1}/lambda_k = P_k(u + zeta)/P_k(u) (k >= 2) and
/// lambda_{k0}/lambda_{k1} = P_1(u + zeta d_0)/P_1(u).
DrinfeldTuple tuple_from_weights(const RttHighestWeight& hw, const LieAlgebra& g, const K& zeta);

/// Offset c_i with Q_i(u) = P_{i+1}(u + zeta c_i):
/// (n + kappa - i)/2 for i >= 1; kappa (C, D) or kappa + n/2 (B) for i = 0.
K translation_offset(const LieAlgebra& g, int node);
/// RTT -> current by the substitutions above; current -> RTT by their inverses.
DrinfeldTuple translate_tuple(const DrinfeldTuple& t, const LieAlgebra& g, const K& zeta);

struct TranslationRow {
    int k;     // RTT index
    int node;  // current index, k - 1
    K offset;
    std::string formula;
};
std::vector<TranslationRow> translation_table(const LieAlgebra& g);

/// C^N (x) (C^N)_{-1} (x) ... (x) (C^N)_{-m+1} restricted to the submodule generated by
/// xi_m = sum_sigma sign(sigma) e_{-n-1+sigma(1)} (x) ... (x) e_{-n-1+sigma(m)}.
struct CnmModule {
    RTTRep rep;
    SVec xi;  // in the basis of the submodule
    int ambient_dim = 0;
};
/// Throws std::invalid_argument unless 1 <= m <= n and N^m <= 4096.
CnmModule build_cnm(Spec g, int m, const K& zeta, int order = 8);
/// g_m(u)^-1 lambda_i(u) for the C^{N,m} highest weight, by index -n..n.
std::vector<RatFunU> cnm_weight_ratios(const LieAlgebra& g, int m, const K& zeta);
/// g_m(u) = g(u) g(u + zeta) ... g(u + (m-1) zeta).
TruncSeriesU cnm_prefactor(const LieAlgebra& g, int m, const K& zeta, int order);
/// Highest weight of C^{N,m} against the closed form, to the series order.
CheckReport check_cnm_highest_weight(Spec g, int m, const K& zeta, int order = 8);

/// RTT module realizing the fundamental node per the construction available for it:
/// spin modules for spin nodes, C^{N,m} (m = n - node, or m = n for sp node 0) otherwise.
RTTRep fundamental_rtt_module(Spec g, int node, const K& zeta, int order = 8);
/// Nodes whose module is built and checked end to end: spin nodes, middle nodes with
/// m <= 2, and sp node 0 (m = n), with an ambient tensor power of dimension at most 512.
bool translation_verifiable(const LieAlgebra& g, int node);
/// Expected evaluation point on the RTT side: 1/2 for spin modules, 1 for C^{N,m}, 2 for sp node 0.
K fundamental_rtt_point(const LieAlgebra& g, int node);
/// End to end: P-tuple of the RTT module, Q-tuple of its transport to the current
/// presentation, compared with translate_tuple.
CheckReport check_translation(Spec g, int node, const K& zeta, int order = 8);

}  // namespace yang
