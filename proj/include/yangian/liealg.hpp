#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "yangian/matrix.hpp"

namespace yang {

enum class Series { B, C, D };

std::string series_name(Series s);
/// "so5", "sp4", ... for the given series and rank.
std::string algebra_name(Series s, int n);

struct Label {
    int i = 0, j = 0;
    friend bool operator==(const Label& a, const Label& b) { return a.i == b.i && a.j == b.j; }
};

struct PosRoot {
    Label label;           // x_alpha^+ = c F(i, j), x_alpha^- = c F(j, i)
    K c;                   // normalization, 1 or 1/sqrt 2
    std::vector<Q> eps;    // coordinates in eps_1..eps_n
    std::vector<Q> simple; // coordinates in the simple roots
    Mat xp, xm;            // natural representation matrices
};

struct Chevalley {
    Mat xp, xm, h;
};

/// so_N or sp_N realized on C^N with indices -n..n (0 only for odd N).
class LieAlgebra {
public:
    /// Throws std::invalid_argument for unsupported (series, n).
    static LieAlgebra build(Series s, int n);

    Series series() const { return series_; }
    int n() const { return n_; }
    int N() const { return N_; }
    bool symplectic() const { return series_ == Series::C; }
    std::string name() const { return algebra_name(series_, n_); }
    /// kappa = N/2 - 1 (so) or N/2 + 1 (sp).
    const Q& kappa() const { return kappa_; }

    const std::vector<int>& indices() const { return idx_; }
    bool valid_index(int i) const;
    /// Position of index i in the standard basis of C^N.
    int pos(int i) const;
    int theta(int i, int j) const;

    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<Label>& labels() const { return labels_; }
    /// Position of F(i, j) in the basis, or -1 if (i, j) is the redundant partner.
    int label_index(int i, int j) const;
    /// F(i, j) = s * F(basis label); returns the label index and sign s (0 if F(i,j)=0).
    std::pair<int, int> canonical(int i, int j) const;

    Mat E(int i, int j) const;
    Mat F(int i, int j) const;
    const std::vector<Mat>& basis() const { return basis_; }
    /// Orthonormal basis for the form (X, Y) = Tr(XY)/2.
    const std::vector<Mat>& orthonormal() const { return ortho_; }
    /// Coordinates of X in the F basis (X must lie in the algebra).
    std::vector<K> coords(const Mat& X) const;
    Mat from_coords(const std::vector<K>& c) const;
    bool contains(const Mat& X) const;
    K form(const Mat& X, const Mat& Y) const;
    /// Twisted transpose (E_ij)^t = theta_ij E_{-j,-i}.
    Mat ttranspose(const Mat& X) const;
    /// Adjoint action of basis element a, in the F basis.
    Mat ad(int a) const;
    Mat ad(const Mat& X) const;

    // Root data, nodes 0..n-1 as in the Dynkin labelling used throughout.
    const std::vector<std::vector<Q>>& simple_roots() const { return simple_; }
    Q pairing(int i, int j) const { return cartan_form_[i][j]; }
    /// d_i = (alpha_i, alpha_i) / 2
    Q d(int i) const { return cartan_form_[i][i] / 2; }
    /// Cartan matrix c_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)
    int cartan(int i, int j) const;
    const std::vector<Chevalley>& chevalley() const { return chev_; }
    const std::vector<PosRoot>& positive_roots() const { return roots_; }
    /// Fundamental weights in eps coordinates.
    const std::vector<std::vector<Q>>& fundamental_weights() const { return fund_; }
    /// Multiplicity of alpha_i in the highest root (per simple factor).
    int mark(int i) const { return marks_[i]; }
    /// Nodes whose fundamental module carries an action J = b X.
    bool node_allowed(int i) const;
    std::vector<int> allowed_nodes() const;

    /// P = sum E_ij (x) E_ji and Q = sum theta_ij E_ij (x) E_{-i,-j} on C^N (x) C^N.
    Mat P() const;
    Mat Qop() const;
    /// sum over the orthonormal basis X (x) X in the natural representation.
    Mat omega_natural() const;

private:
    Series series_ = Series::B;
    int n_ = 0, N_ = 0;
    Q kappa_;
    std::vector<int> idx_;
    std::vector<Label> labels_;
    std::map<std::pair<int, int>, int> label_pos_;
    std::vector<Mat> basis_, ortho_;
    std::vector<std::vector<Q>> simple_, cartan_form_, fund_;
    std::vector<Chevalley> chev_;
    std::vector<PosRoot> roots_;
    std::vector<int> marks_;
};

/// Dense solve of A x = b; false if inconsistent. Free variables are set to 0.
bool solve_linear(std::vector<std::vector<K>> A, std::vector<K> b, std::vector<K>& x);

}  // namespace yang
