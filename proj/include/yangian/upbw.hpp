#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "yangian/liealg.hpp"

namespace yang {

/// PBW monomial: weakly increasing list of basis label indices.
using Word = std::vector<int>;

/// Element of U(g) in PBW normal form.
struct UElement {
    std::map<Word, K> terms;

    bool is_zero() const { return terms.empty(); }
    int degree() const;
    UElement& add(const Word& w, const K& c);
    UElement& operator+=(const UElement& o);
    UElement& operator-=(const UElement& o);
    UElement operator-() const;
    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
    friend UElement operator*(const K& s, const UElement& a);
    friend bool operator==(const UElement& a, const UElement& b) { return a.terms == b.terms; }
    friend bool operator!=(const UElement& a, const UElement& b) { return !(a == b); }
};

/// U(g) with straightening to the PBW basis ordered by label index.
class UAlgebra {
public:
    explicit UAlgebra(const LieAlgebra& g);
    const LieAlgebra& lie() const { return g_; }

    UElement one() const;
    /// F(i, j); the redundant partner is rewritten into the basis on entry.
    UElement gen(int i, int j) const;
    /// Degree-one element from a matrix in the natural representation.
    UElement from_mat(const Mat& X) const;

    UElement mul(const UElement& a, const UElement& b) const;
    UElement comm(const UElement& a, const UElement& b) const;
    UElement anticomm(const UElement& a, const UElement& b) const;
    UElement pow(const UElement& a, int k) const;
    /// Normal form of an arbitrary word.
    const UElement& normal(const Word& w) const;

    /// Image under a representation given by the matrices of the basis elements.
    Mat act(const UElement& a, const std::vector<Mat>& basis_mats) const;
    /// "c * F(i,j)F(k,l) + ..." in PBW order.
    std::string str(const UElement& a) const;

private:
    const LieAlgebra& g_;
    std::vector<std::vector<SVec>> struct_;  // [a][b] -> coords of [F_a, F_b]
    mutable std::map<Word, UElement> cache_;
};

/// Elements built from root vectors at node i, used by the current presentation.
struct SpecialElements {
    UElement v, wp, wm, vtilde;
};

/// v_i = 1/4 sum_{alpha>0} (alpha, alpha_i){x_alpha^+, x_alpha^-} - h_i^2 / 2,
/// w_i^+- = +-1/4 sum_{alpha>0} {[x_i^+-, x_alpha^+-], x_alpha^-+} - 1/4 {x_i^+-, h_i},
/// vtilde_i = v_i + h_i^2 / 2.
SpecialElements special_elements(const UAlgebra& U, int i);

}  // namespace yang
