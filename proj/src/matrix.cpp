#include "yangian/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace yang {

SVec svec_add(const SVec& a, const SVec& b, const K& scale) {
    if (scale.is_zero()) return a;
    SVec r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    const bool unit = scale.is_one();
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.emplace_back(b[j].first, unit ? b[j].second : scale * b[j].second);
            ++j;
        } else {
            K v = a[i].second + (unit ? b[j].second : scale * b[j].second);
            if (!v.is_zero()) r.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return r;
}

SVec svec_scale(const SVec& a, const K& s) {
    if (s.is_zero()) return {};
    SVec r = a;
    for (auto& e : r) e.second = s * e.second;
    return r;
}

K svec_get(const SVec& a, int idx) {
    auto it = std::lower_bound(a.begin(), a.end(), idx,
                               [](const std::pair<int, K>& e, int k) { return e.first < k; });
    if (it != a.end() && it->first == idx) return it->second;
    return K();
}

std::vector<K> svec_dense(const SVec& a, int n) {
    std::vector<K> r(n);
    for (auto& [k, v] : a) r[k] = v;
    return r;
}

SVec svec_from_dense(const std::vector<K>& v) {
    SVec r;
    for (int k = 0; k < static_cast<int>(v.size()); ++k)
        if (!v[k].is_zero()) r.emplace_back(k, v[k]);
    return r;
}

// ---------------------------------------------------------------- Mat

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.r_[i].emplace_back(i, K(1));
    return m;
}

Mat Mat::unit(int n, int i, int j, const K& v) {
    Mat m(n, n);
    m.set(i, j, v);
    return m;
}

K Mat::get(int i, int j) const { return svec_get(r_[i], j); }

void Mat::set(int i, int j, const K& v) {
    auto& row = r_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const std::pair<int, K>& e, int k) { return e.first < k; });
    if (it != row.end() && it->first == j) {
        if (v.is_zero())
            row.erase(it);
        else
            it->second = v;
    } else if (!v.is_zero()) {
        row.insert(it, {j, v});
    }
}

void Mat::add(int i, int j, const K& v) {
    if (v.is_zero()) return;
    auto& row = r_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const std::pair<int, K>& e, int k) { return e.first < k; });
    if (it != row.end() && it->first == j) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    } else {
        row.insert(it, {j, v});
    }
}

bool Mat::is_zero() const {
    for (auto& row : r_)
        if (!row.empty()) return false;
    return true;
}

size_t Mat::nnz() const {
    size_t n = 0;
    for (auto& row : r_) n += row.size();
    return n;
}

K Mat::trace() const {
    K t;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += get(i, i);
    return t;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (auto& [j, v] : r_[i]) t.r_[j].emplace_back(i, v);
    return t;
}

bool Mat::first_nonzero(int& i, int& j, K& v) const {
    for (int a = 0; a < rows_; ++a)
        if (!r_[a].empty()) {
            i = a;
            j = r_[a][0].first;
            v = r_[a][0].second;
            return true;
        }
    return false;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch in +");
    for (int i = 0; i < rows_; ++i)
        if (!o.r_[i].empty()) r_[i] = svec_add(r_[i], o.r_[i]);
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch in -");
    for (int i = 0; i < rows_; ++i)
        if (!o.r_[i].empty()) r_[i] = svec_add(r_[i], o.r_[i], K(-1));
    return *this;
}

Mat Mat::operator-() const {
    Mat m = *this;
    for (auto& row : m.r_)
        for (auto& e : row) e.second = -e.second;
    return m;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch in *");
    Mat m(a.rows_, b.cols_);
    std::vector<K> acc(b.cols_);
    std::vector<char> used(b.cols_, 0);
    std::vector<int> touched;
    for (int i = 0; i < a.rows_; ++i) {
        if (a.r_[i].empty()) continue;
        touched.clear();
        for (auto& [k, av] : a.r_[i]) {
            for (auto& [j, bv] : b.r_[k]) {
                if (!used[j]) {
                    used[j] = 1;
                    touched.push_back(j);
                    acc[j] = av * bv;
                } else {
                    acc[j] += av * bv;
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        auto& row = m.r_[i];
        for (int j : touched) {
            if (!acc[j].is_zero()) row.emplace_back(j, acc[j]);
            used[j] = 0;
        }
    }
    return m;
}

Mat operator*(const K& s, const Mat& a) {
    if (s.is_zero()) return Mat(a.rows_, a.cols_);
    Mat m = a;
    for (auto& row : m.r_)
        for (auto& e : row) e.second = s * e.second;
    return m;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.r_ == b.r_;
}

SVec Mat::apply(const SVec& v) const {
    // v is a column vector; result is sparse.
    SVec out;
    for (int i = 0; i < rows_; ++i) {
        const auto& row = r_[i];
        if (row.empty()) continue;
        K acc;
        size_t p = 0, q = 0;
        while (p < row.size() && q < v.size()) {
            if (row[p].first < v[q].first)
                ++p;
            else if (v[q].first < row[p].first)
                ++q;
            else {
                acc += row[p].second * v[q].second;
                ++p;
                ++q;
            }
        }
        if (!acc.is_zero()) out.emplace_back(i, acc);
    }
    return out;
}

std::string Mat::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < rows_; ++i)
        for (auto& [j, v] : r_[i]) {
            if (!first) os << "; ";
            first = false;
            os << "(" << i << "," << j << ")=" << v.str();
        }
    if (first) os << "0";
    return os.str();
}

Mat kron(const Mat& a, const Mat& b) {
    Mat m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (auto& [j, av] : a.row(i))
            for (int k = 0; k < b.rows(); ++k) {
                auto& dst = m.row_mut(i * b.rows() + k);
                for (auto& [l, bv] : b.row(k)) dst.emplace_back(j * b.cols() + l, av * bv);
            }
    return m;
}

Mat comm(const Mat& a, const Mat& b) { return a * b - b * a; }
Mat anticomm(const Mat& a, const Mat& b) { return a * b + b * a; }

Mat sym3(const Mat& a, const Mat& b, const Mat& c) {
    Mat ab = a * b, ba = b * a, ac = a * c, ca = c * a, bc = b * c, cb = c * b;
    Mat s = ab * c + ac * b + ba * c + bc * a + ca * b + cb * a;
    return K(1, 24) * s;
}

// ---------------------------------------------------------------- RowSpace

SVec RowSpace::reduce(SVec v) const {
    // Rows are fully reduced, so a row never touches another pivot column and the
    // multipliers can all be read off v up front.
    std::vector<std::pair<int, K>> hits;
    for (auto& [col, val] : v) {
        auto it = piv_row_.find(col);
        if (it != piv_row_.end()) hits.emplace_back(it->second, val);
    }
    for (auto& [r, f] : hits) v = svec_add(v, rows_[r], -f);
    return v;
}

bool RowSpace::insert(const SVec& v0) {
    SVec v = reduce(v0);
    if (v.empty()) return false;
    int p = v[0].first;
    K inv = v[0].second.inverse();
    v = svec_scale(v, inv);
    for (auto& row : rows_) {
        K f = svec_get(row, p);
        if (!f.is_zero()) row = svec_add(row, v, -f);
    }
    piv_row_[p] = static_cast<int>(rows_.size());
    piv_.push_back(p);
    rows_.push_back(std::move(v));
    return true;
}

std::vector<K> RowSpace::coords(const SVec& v) const {
    std::vector<K> c(rows_.size());
    for (auto& [col, val] : v) {
        auto it = piv_row_.find(col);
        if (it != piv_row_.end()) c[it->second] = val;
    }
    return c;
}

std::vector<SVec> nullspace(const std::vector<SVec>& equations, int ncols) {
    RowSpace rs(ncols);
    for (auto& e : equations) rs.insert(e);
    std::vector<char> is_piv(ncols, 0);
    for (int p : rs.pivots()) is_piv[p] = 1;
    // Column -> list of (row index) having nonzero there, for assembling basis vectors.
    std::vector<SVec> basis;
    std::vector<std::vector<std::pair<int, K>>> colmap(ncols);
    const auto& rows = rs.rows();
    const auto& piv = rs.pivots();
    for (size_t r = 0; r < rows.size(); ++r)
        for (auto& [c, v] : rows[r])
            if (c != piv[r]) colmap[c].emplace_back(piv[r], v);
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        SVec b;
        for (auto& [p, v] : colmap[f]) b.emplace_back(p, -v);
        b.emplace_back(f, K(1));
        std::sort(b.begin(), b.end(), [](auto& x, auto& y) { return x.first < y.first; });
        basis.push_back(std::move(b));
    }
    return basis;
}

RowSpace cyclic_span(const std::vector<SVec>& seeds, const std::vector<const Mat*>& ops, int max_dim) {
    int dim = ops.empty() ? 0 : ops[0]->cols();
    if (dim == 0 && !seeds.empty()) {
        for (auto& s : seeds)
            for (auto& e : s) dim = std::max(dim, e.first + 1);
    }
    RowSpace rs(dim);
    std::vector<SVec> queue;
    for (auto& s : seeds)
        if (rs.insert(s)) queue.push_back(s);
    size_t head = 0;
    while (head < queue.size()) {
        SVec v = queue[head++];
        for (const Mat* op : ops) {
            SVec w = op->apply(v);
            if (w.empty()) continue;
            if (rs.insert(w)) {
                queue.push_back(std::move(w));
                if (rs.rank() > max_dim) throw std::runtime_error("cyclic span exceeds dimension budget");
            }
        }
    }
    return rs;
}

Mat restrict_to(const RowSpace& s, const Mat& op) {
    int r = s.rank();
    Mat m(r, r);
    for (int k = 0; k < r; ++k) {
        SVec img = op.apply(s.rows()[k]);
        std::vector<K> c = s.coords(img);
        for (int a = 0; a < r; ++a)
            if (!c[a].is_zero()) m.set(a, k, c[a]);
    }
    return m;
}

Mat embedding(const RowSpace& s) {
    Mat e(s.dim(), s.rank());
    for (int k = 0; k < s.rank(); ++k)
        for (auto& [i, v] : s.rows()[k]) e.set(i, k, v);
    return e;
}

// ---------------------------------------------------------------- MatPolyU

MatPolyU::MatPolyU(const Mat& m, const PolyU& p) : dim_(m.rows()) {
    for (auto& k : p.coeffs()) c_.push_back(k * m);
    trim();
}

void MatPolyU::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Mat MatPolyU::coeff(int k) const {
    if (k >= 0 && k < static_cast<int>(c_.size())) return c_[k];
    return Mat(dim_, dim_);
}

MatPolyU& MatPolyU::operator+=(const MatPolyU& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Mat(dim_, dim_));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

MatPolyU& MatPolyU::operator-=(const MatPolyU& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Mat(dim_, dim_));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

MatPolyU operator*(const MatPolyU& a, const MatPolyU& b) {
    MatPolyU r(a.dim_);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Mat(a.dim_, a.dim_));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

MatPolyU operator*(const PolyU& p, const MatPolyU& a) {
    MatPolyU r(a.dim_);
    if (p.is_zero() || a.c_.empty()) return r;
    r.c_.assign(a.c_.size() + p.coeffs().size() - 1, Mat(a.dim_, a.dim_));
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        for (size_t j = 0; j < a.c_.size(); ++j) r.c_[i + j] += p.coeffs()[i] * a.c_[j];
    r.trim();
    return r;
}

Mat MatPolyU::eval(const K& x) const {
    Mat r(dim_, dim_);
    for (size_t k = c_.size(); k-- > 0;) r = x * r + c_[k];
    return r;
}

MatPolyU MatPolyU::shift(const K& c) const {
    MatPolyU r(dim_);
    if (c_.empty()) return r;
    r.c_.assign(c_.size(), Mat(dim_, dim_));
    // (u + c)^k = sum_m binom(k, m) c^{k-m} u^m
    for (size_t k = 0; k < c_.size(); ++k)
        for (size_t m = 0; m <= k; ++m) r.c_[m] += (K(binom(k, m)) * c.pow(k - m)) * c_[k];
    r.trim();
    return r;
}

MatPolyU kron(const MatPolyU& a, const MatPolyU& b) {
    MatPolyU r(a.dim_ * b.dim_);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Mat(r.dim_, r.dim_));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += kron(a.c_[i], b.c_[j]);
    r.trim();
    return r;
}

}  // namespace yang
