#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "yangian/scalar.hpp"

namespace yang {

/// Sparse vector: (index, value) pairs sorted by index, no explicit zeros.
using SVec = std::vector<std::pair<int, K>>;

SVec svec_add(const SVec& a, const SVec& b, const K& scale = K(1));
SVec svec_scale(const SVec& a, const K& s);
K svec_get(const SVec& a, int idx);
std::vector<K> svec_dense(const SVec& a, int n);
SVec svec_from_dense(const std::vector<K>& v);

/// Sparse matrix over K with sorted rows.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), r_(rows) {}
    static Mat identity(int n);
    /// Elementary matrix e_{ij} of size n.
    static Mat unit(int n, int i, int j, const K& v = K(1));

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    K get(int i, int j) const;
    void set(int i, int j, const K& v);
    void add(int i, int j, const K& v);
    const SVec& row(int i) const { return r_[i]; }
    SVec& row_mut(int i) { return r_[i]; }

    bool is_zero() const;
    size_t nnz() const;
    K trace() const;
    Mat transpose() const;
    /// First nonzero entry (row, col, value); false if zero.
    bool first_nonzero(int& i, int& j, K& v) const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat operator-() const;
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator*(const K& s, const Mat& a);
    friend bool operator==(const Mat& a, const Mat& b);
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    SVec apply(const SVec& v) const;
    /// Triplet text "(i,j)=value; ..." used in witnesses and JSON.
    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<SVec> r_;
};

Mat kron(const Mat& a, const Mat& b);
Mat comm(const Mat& a, const Mat& b);
Mat anticomm(const Mat& a, const Mat& b);
/// Symmetrized triple product (1/24) sum over S_3 of products, as in the J relations.
Mat sym3(const Mat& a, const Mat& b, const Mat& c);

/// Fully reduced row echelon basis of a subspace of K^dim, built incrementally.
/// Rows keep insertion order; coordinates of a vector in the span are its entries
/// at the pivot columns.
class RowSpace {
public:
    explicit RowSpace(int dim = 0) : dim_(dim) {}
    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<SVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return piv_; }

    SVec reduce(SVec v) const;
    bool contains(const SVec& v) const { return reduce(v).empty(); }
    /// Adds v; returns true if it enlarged the span.
    bool insert(const SVec& v);
    /// Coordinates (dense, length rank) of a vector known to lie in the span.
    std::vector<K> coords(const SVec& v) const;

private:
    int dim_;
    std::vector<SVec> rows_;
    std::vector<int> piv_;
    std::map<int, int> piv_row_;
};

/// Basis of {x : e . x = 0 for every equation e}, equations given as sparse rows
/// over ncols unknowns. Deterministic: one basis vector per free column, in order.
std::vector<SVec> nullspace(const std::vector<SVec>& equations, int ncols);

/// Smallest subspace containing the seeds and stable under every operator.
RowSpace cyclic_span(const std::vector<SVec>& seeds, const std::vector<const Mat*>& ops,
                     int max_dim = 1 << 20);
/// Matrix of op restricted to an invariant subspace, in the RowSpace basis.
Mat restrict_to(const RowSpace& s, const Mat& op);
/// Embedding columns: basis vector k of s as a column of an ambient x rank matrix.
Mat embedding(const RowSpace& s);

/// Polynomial in u with matrix coefficients, lowest degree first.
class MatPolyU {
public:
    MatPolyU() = default;
    explicit MatPolyU(int dim) : dim_(dim) {}
    MatPolyU(const Mat& m, const PolyU& p);
    int dim() const { return dim_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Mat>& coeffs() const { return c_; }
    Mat coeff(int k) const;
    bool is_zero() const { return c_.empty(); }

    MatPolyU& operator+=(const MatPolyU& o);
    MatPolyU& operator-=(const MatPolyU& o);
    friend MatPolyU operator+(MatPolyU a, const MatPolyU& b) { return a += b; }
    friend MatPolyU operator-(MatPolyU a, const MatPolyU& b) { return a -= b; }
    friend MatPolyU operator*(const MatPolyU& a, const MatPolyU& b);
    friend MatPolyU operator*(const PolyU& p, const MatPolyU& a);
    friend bool operator==(const MatPolyU& a, const MatPolyU& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

    Mat eval(const K& x) const;
    /// M(u + c)
    MatPolyU shift(const K& c) const;
    /// Coefficientwise map (e.g. transpose, restriction).
    template <class Fn>
    MatPolyU map(Fn&& f, int new_dim) const {
        MatPolyU r(new_dim);
        for (auto& m : c_) r.c_.push_back(f(m));
        r.trim();
        return r;
    }
    friend MatPolyU kron(const MatPolyU& a, const MatPolyU& b);

private:
    void trim();
    int dim_ = 0;
    std::vector<Mat> c_;
};

}  // namespace yang
