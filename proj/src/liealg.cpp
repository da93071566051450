#include "yangian/liealg.hpp"

#include <algorithm>
#include <stdexcept>

namespace yang {

std::string series_name(Series s) {
    switch (s) {
        case Series::B: return "B";
        case Series::C: return "C";
        case Series::D: return "D";
    }
    return "?";
}

std::string algebra_name(Series s, int n) {
    switch (s) {
        case Series::B: return "so" + std::to_string(2 * n + 1);
        case Series::C: return "sp" + std::to_string(2 * n);
        case Series::D: return "so" + std::to_string(2 * n);
    }
    return "?";
}

bool solve_linear(std::vector<std::vector<K>> A, std::vector<K> b, std::vector<K>& x) {
    int rows = static_cast<int>(A.size());
    int cols = rows ? static_cast<int>(A[0].size()) : 0;
    std::vector<int> pc;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows && p < 0; ++i)
            if (!A[i][c].is_zero()) p = i;
        if (p < 0) continue;
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        K inv = A[r][c].inverse();
        for (int j = c; j < cols; ++j) A[r][j] *= inv;
        b[r] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            K f = A[i][c];
            for (int j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pc.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!b[i].is_zero()) return false;
    x.assign(cols, K());
    for (int i = 0; i < r; ++i) x[pc[i]] = b[i];
    return true;
}

namespace {

int sgn(int i) { return (i > 0) - (i < 0); }

Q dot(const std::vector<Q>& a, const std::vector<Q>& b) {
    Q s = 0;
    for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

}  // namespace

LieAlgebra LieAlgebra::build(Series s, int n) {
    if (n < 1) throw std::invalid_argument("rank n must be at least 1");
    if (s == Series::D && n < 2) throw std::invalid_argument("series D needs n >= 2 (so4 and up)");
    if (n > 6) throw std::invalid_argument("rank above 6 is outside the supported range");
    LieAlgebra g;
    g.series_ = s;
    g.n_ = n;
    g.N_ = (s == Series::B) ? 2 * n + 1 : 2 * n;
    g.kappa_ = Q(g.N_, 2) + (s == Series::C ? 1 : -1);
    g.kappa_.canonicalize();
    for (int i = -n; i <= n; ++i)
        if (i != 0 || s == Series::B) g.idx_.push_back(i);

    // Basis F(i, j) with i + j > 0 (so) or >= 0 (sp), lexicographic in positions.
    for (int i : g.idx_)
        for (int j : g.idx_) {
            bool keep = g.symplectic() ? (i + j >= 0) : (i + j > 0);
            if (!keep) continue;
            g.label_pos_[{i, j}] = static_cast<int>(g.labels_.size());
            g.labels_.push_back({i, j});
            g.basis_.push_back(g.F(i, j));
        }

    // Orthonormal basis: Cartan part, then a pair per positive root.
    const K r2 = K::sqrt2().inverse(), rm2 = K::sqrtm2().inverse();
    for (int i = 1; i <= n; ++i) g.ortho_.push_back(g.F(i, i));
    for (auto& l : g.labels_) {
        if (l.i >= l.j) continue;
        Mat a = g.F(l.i, l.j), b = g.F(l.j, l.i);
        if (l.i == -l.j) {
            g.ortho_.push_back(K(1, 2) * (a + b));
            g.ortho_.push_back((K(1, 2) * K::imag()) * (a - b));
        } else {
            g.ortho_.push_back(r2 * (a + b));
            g.ortho_.push_back(rm2 * (a - b));
        }
    }

    // Positive roots.
    for (auto& l : g.labels_) {
        if (l.i >= l.j) continue;
        PosRoot r;
        r.label = l;
        r.c = (l.i == -l.j) ? r2 : K(1);
        r.eps.assign(n, Q(0));
        if (l.i != 0) r.eps[std::abs(l.i) - 1] += sgn(l.i);
        if (l.j != 0) r.eps[std::abs(l.j) - 1] -= sgn(l.j);
        r.xp = r.c * g.F(l.i, l.j);
        r.xm = r.c * g.F(l.j, l.i);
        g.roots_.push_back(std::move(r));
    }

    // Simple roots and Chevalley generators.
    std::vector<Label> simple_labels;
    switch (s) {
        case Series::B: simple_labels.push_back({0, 1}); break;
        case Series::C: simple_labels.push_back({-1, 1}); break;
        case Series::D: simple_labels.push_back({-1, 2}); break;
    }
    for (int i = 1; i <= n - 1; ++i) simple_labels.push_back({i, i + 1});
    for (auto& sl : simple_labels) {
        auto it = std::find_if(g.roots_.begin(), g.roots_.end(),
                               [&](const PosRoot& r) { return r.label == sl; });
        if (it == g.roots_.end()) throw std::logic_error("simple root is not a positive root");
        g.simple_.push_back(it->eps);
        Chevalley c{it->xp, it->xm, comm(it->xp, it->xm)};
        g.chev_.push_back(std::move(c));
    }
    g.cartan_form_.assign(n, std::vector<Q>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.cartan_form_[i][j] = dot(g.simple_[i], g.simple_[j]);

    // Positive roots in simple-root coordinates (eps_k rows, simple roots as columns).
    for (auto& r : g.roots_) {
        std::vector<std::vector<K>> A(n, std::vector<K>(n));
        std::vector<K> b(n), x;
        for (int k = 0; k < n; ++k) {
            for (int j = 0; j < n; ++j) A[k][j] = K(g.simple_[j][k]);
            b[k] = K(r.eps[k]);
        }
        if (!solve_linear(A, b, x)) throw std::logic_error("root outside the root lattice");
        for (auto& v : x) r.simple.push_back(v.rational());
    }

    // Marks: coefficient of alpha_i in the highest root of its simple factor, which is
    // the largest coefficient of alpha_i over all positive roots.
    g.marks_.assign(n, 0);
    for (auto& r : g.roots_)
        for (int i = 0; i < n; ++i) g.marks_[i] = std::max(g.marks_[i], static_cast<int>(r.simple[i].get_num().get_si()));

    // Fundamental weights: (omega_i, alpha_j) = delta_ij d_j.
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<K>> A(n, std::vector<K>(n));
        std::vector<K> b(n), x;
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) A[j][k] = K(g.simple_[j][k]);
            b[j] = (i == j) ? K(g.d(j)) : K(0);
        }
        solve_linear(A, b, x);
        std::vector<Q> w;
        for (auto& v : x) w.push_back(v.rational());
        g.fund_.push_back(std::move(w));
    }
    return g;
}

bool LieAlgebra::valid_index(int i) const {
    return i >= -n_ && i <= n_ && (i != 0 || series_ == Series::B);
}

int LieAlgebra::pos(int i) const {
    if (!valid_index(i)) throw std::out_of_range("index " + std::to_string(i) + " outside " + name());
    if (series_ == Series::B) return i + n_;
    return i < 0 ? i + n_ : i + n_ - 1;
}

int LieAlgebra::theta(int i, int j) const {
    if (!symplectic()) return 1;
    return sgn(i) * sgn(j);
}

int LieAlgebra::label_index(int i, int j) const {
    auto it = label_pos_.find({i, j});
    return it == label_pos_.end() ? -1 : it->second;
}

std::pair<int, int> LieAlgebra::canonical(int i, int j) const {
    if (!valid_index(i) || !valid_index(j))
        throw std::out_of_range("F(" + std::to_string(i) + "," + std::to_string(j) + ") outside " + name());
    int a = label_index(i, j);
    if (a >= 0) return {a, 1};
    int b = label_index(-j, -i);
    if (b >= 0) return {b, -theta(i, j)};
    return {-1, 0};  // F(i,-i) in so, F(0,0)
}

Mat LieAlgebra::E(int i, int j) const { return Mat::unit(N_, pos(i), pos(j)); }

Mat LieAlgebra::F(int i, int j) const {
    Mat m(N_, N_);
    m.add(pos(i), pos(j), K(1));
    m.add(pos(-j), pos(-i), K(-theta(i, j)));
    return m;
}

std::vector<K> LieAlgebra::coords(const Mat& X) const {
    std::vector<K> c(labels_.size());
    for (size_t a = 0; a < labels_.size(); ++a) {
        const Label& l = labels_[a];
        K v = X.get(pos(l.i), pos(l.j));
        if (v.is_zero()) continue;
        c[a] = (l.i == -l.j) ? v / K(2) : v;
    }
    return c;
}

Mat LieAlgebra::from_coords(const std::vector<K>& c) const {
    Mat m(N_, N_);
    for (size_t a = 0; a < c.size(); ++a)
        if (!c[a].is_zero()) m += c[a] * basis_[a];
    return m;
}

bool LieAlgebra::contains(const Mat& X) const { return from_coords(coords(X)) == X; }

K LieAlgebra::form(const Mat& X, const Mat& Y) const { return K(1, 2) * (X * Y).trace(); }

Mat LieAlgebra::ttranspose(const Mat& X) const {
    Mat t(N_, N_);
    for (int i : idx_)
        for (auto& [cj, v] : X.row(pos(i))) {
            int j = idx_[cj];
            t.add(pos(-j), pos(-i), K(theta(i, j)) * v);
        }
    return t;
}

Mat LieAlgebra::ad(const Mat& X) const {
    int d = dim();
    Mat m(d, d);
    for (int b = 0; b < d; ++b) {
        std::vector<K> c = coords(comm(X, basis_[b]));
        for (int a = 0; a < d; ++a)
            if (!c[a].is_zero()) m.set(a, b, c[a]);
    }
    return m;
}

Mat LieAlgebra::ad(int a) const { return ad(basis_[a]); }

int LieAlgebra::cartan(int i, int j) const {
    Q c = 2 * cartan_form_[i][j] / cartan_form_[i][i];
    return static_cast<int>(c.get_num().get_si() / c.get_den().get_si());
}

bool LieAlgebra::node_allowed(int i) const {
    if (i < 0 || i >= n_) return false;
    if (marks_[i] == 1) return true;
    // Highest root of the factor: the positive root of largest height containing alpha_i.
    const PosRoot* top = nullptr;
    Q best = -1;
    for (auto& r : roots_) {
        if (sgn(r.simple[i]) == 0) continue;
        Q h = 0;
        for (auto& c : r.simple) h += c;
        if (h > best) {
            best = h;
            top = &r;
        }
    }
    Q ratio = dot(top->eps, top->eps) / cartan_form_[i][i];
    return ratio == marks_[i];
}

std::vector<int> LieAlgebra::allowed_nodes() const {
    std::vector<int> v;
    for (int i = 0; i < n_; ++i)
        if (node_allowed(i)) v.push_back(i);
    return v;
}

Mat LieAlgebra::P() const {
    Mat p(N_ * N_, N_ * N_);
    for (int i : idx_)
        for (int j : idx_) p.add(pos(i) * N_ + pos(j), pos(j) * N_ + pos(i), K(1));
    return p;
}

Mat LieAlgebra::Qop() const {
    // (E_ij (x) E_{-i,-j}) maps e_j (x) e_{-j} to e_i (x) e_{-i}.
    Mat q(N_ * N_, N_ * N_);
    for (int i : idx_)
        for (int j : idx_) q.add(pos(i) * N_ + pos(-i), pos(j) * N_ + pos(-j), K(theta(i, j)));
    return q;
}

Mat LieAlgebra::omega_natural() const {
    Mat o(N_ * N_, N_ * N_);
    for (auto& x : ortho_) o += kron(x, x);
    return o;
}

}  // namespace yang
