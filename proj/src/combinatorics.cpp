#include "foliation/combinatorics.hpp"

#include <algorithm>
#include <sstream>

namespace fol {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = Rational(rows[i][j]);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::inverse() const {
    int n = r_;
    Matrix a = *this, inv = identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!is_zero(a(r, c))) {
                piv = r;
                break;
            }
        if (piv < 0) throw Error(ErrorCode::FormulaMismatch, "singular matrix");
        if (piv != c)
            for (int k = 0; k < n; ++k) {
                std::swap(a(piv, k), a(c, k));
                std::swap(inv(piv, k), inv(c, k));
            }
        Rational d = a(c, c);
        for (int k = 0; k < n; ++k) {
            a(c, k) /= d;
            inv(c, k) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || is_zero(a(r, c))) continue;
            Rational f = a(r, c);
            for (int k = 0; k < n; ++k) {
                a(r, k) -= f * a(c, k);
                inv(r, k) -= f * inv(c, k);
            }
        }
    }
    return inv;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k) {
            if (is_zero(a(i, k))) continue;
            for (int j = 0; j < b.c_; ++j) m(i, j) += a(i, k) * b(k, j);
        }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix m = a;
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Vec operator*(const Matrix& a, const Vec& v) {
    Vec r(a.r_, Rational(0));
    for (int i = 0; i < a.r_; ++i)
        for (int j = 0; j < a.c_; ++j) r[i] += a(i, j) * v[j];
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < r_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec operator-(const Vec& a) {
    Vec r = a;
    for (auto& x : r) x = -x;
    return r;
}

Vec scaled(const Rational& s, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x *= s;
    return r;
}

Rational dot(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec make_vec(const std::vector<long>& v) {
    Vec r;
    for (long x : v) r.emplace_back(x);
    return r;
}

Vec unit_vector(int n) { return Vec(n, Rational(1)); }

std::string str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
    os << ")";
    return os.str();
}

std::string Attachment::describe() const {
    std::ostringstream os;
    os << (coefficient < 0 ? "-" : "+");
    switch (kind) {
    case AttachmentKind::Isolated: os << "isolated"; break;
    case AttachmentKind::Curvette: os << "curvette"; break;
    case AttachmentKind::Curve: os << "curve"; break;
    }
    os << "@E" << component;
    if (kind == AttachmentKind::Curvette) os << "[t=" << coordinate.get_str() << "]";
    if (singularity >= 0) os << "#s" << singularity;
    if (orbit_size > 1) os << "x" << orbit_size;
    if (formal) os << "(formal)";
    return os.str();
}

Vec AttachmentDivisor::incidence(int n) const {
    Vec s(n, Rational(0));
    for (const auto& b : branches) s[b.component - 1] += b.coefficient * b.orbit_size;
    return s;
}

bool AttachmentDivisor::effective() const {
    for (const auto& b : branches)
        if (b.coefficient < 0) return false;
    return true;
}

AttachmentDivisor AttachmentDivisor::operator+(const AttachmentDivisor& o) const {
    AttachmentDivisor r = *this;
    r.branches.insert(r.branches.end(), o.branches.begin(), o.branches.end());
    return r;
}

Matrix proximity_matrix(const ResolutionTree& tree) {
    int n = tree.n();
    Matrix F = Matrix::identity(n);
    for (const auto& p : tree.points)
        for (const auto& h : p.location.hosts) F(p.index, h.component - 1) = -1;
    return F;
}

Matrix intersection_matrix(const ResolutionTree& tree) {
    int n = tree.n();
    Matrix A(n, n);
    for (const auto& c : tree.components) A(c.index - 1, c.index - 1) = c.self_intersection;
    for (const auto& [i, j] : tree.adjacency) {
        A(i - 1, j - 1) = 1;
        A(j - 1, i - 1) = 1;
    }
    Matrix F = proximity_matrix(tree);
    if (A != -(F.transpose() * F))
        throw Error(ErrorCode::ProximityMismatch, "A = " + A.str() + " but -F^T F = " + (-(F.transpose() * F)).str());
    return A;
}

Vec weights_vector(const Matrix& F) {
    Matrix Fi = F.inverse();
    Vec e(F.rows(), Rational(0));
    if (!e.empty()) e[0] = 1;
    return Fi * e;
}

Vec multiplicities_of_divisor(const Matrix& F, const Vec& S) { return F.inverse().transpose() * S; }

Vec pullback_orders(const Matrix& A, const Vec& S) { return (-A.inverse()) * S; }

BalancedDivisor balanced_divisor(const ResolutionTree& tree, int curvette_choice) {
    BalancedDivisor bd;
    for (size_t i = 0; i < tree.singularities.size(); ++i) {
        const auto& s = tree.singularities[i];
        if (!s.non_corner()) continue;
        Attachment a;
        a.kind = AttachmentKind::Isolated;
        a.component = s.location.hosts[0].component;
        a.singularity = static_cast<int>(i);
        a.formal = s.saddle_node() && !s.tangent;
        a.orbit_size = s.orbit_size();
        bd.I.branches.push_back(a);
        bd.B0.branches.push_back(a);
    }
    for (const auto& c : tree.components) {
        if (c.invariant) continue;
        int val = tree.valence(c.index);
        int count = val < 2 ? 2 - val : val - 2;
        int coef = val < 2 ? 1 : -1;
        if (count == 0) continue;
        std::vector<Rational> free = free_coordinates(c, count + curvette_choice);
        for (int k = 0; k < count; ++k) {
            Attachment a;
            a.kind = AttachmentKind::Curvette;
            a.component = c.index;
            a.coefficient = coef;
            a.coordinate = free[curvette_choice + k];
            bd.D.branches.push_back(a);
            (coef > 0 ? bd.B0 : bd.Binf).branches.push_back(a);
        }
    }
    bd.B = bd.I + bd.D;
    return bd;
}

SaddleNodeVectors saddle_node_vectors(const ResolutionTree& tree, const Vec& S_B) {
    int n = tree.n();
    SaddleNodeVectors v;
    v.T.assign(n, Rational(0));
    v.C.assign(n, Rational(0));
    for (const auto& s : tree.singularities) {
        if (!s.saddle_node() || !s.tangent) continue;
        Rational excess = (s.k - 1) * s.orbit_size();
        v.T[s.weak_component - 1] += excess;
        if (s.corner) v.C[s.weak_component - 1] += excess;
    }
    v.S = S_B + v.T;
    return v;
}

Rational transverse_excess(const ResolutionTree& tree, const AttachmentDivisor& C) {
    Rational t = 0;
    for (const auto& b : C.branches) {
        if (b.singularity < 0) continue;
        const auto& s = tree.singularities.at(b.singularity);
        if (s.saddle_node() && !s.tangent) t += b.coefficient * (s.k - 1) * b.orbit_size;
    }
    return t;
}

TangencyExcess tangency_excess_vector(const Matrix& F, const Vec& T) {
    TangencyExcess r;
    r.tau = F.inverse().transpose() * T;
    r.tau0 = r.tau.empty() ? Rational(0) : r.tau[0];
    return r;
}

Matrix Permutation::matrix() const {
    int n = static_cast<int>(sigma.size());
    Matrix S(n, n);
    for (int i = 0; i < n; ++i) S(sigma[i], i) = 1;
    return S;
}

bool Permutation::valid(int n) const {
    if ((int)sigma.size() != n) return false;
    std::vector<int> s = sigma;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < n; ++i)
        if (s[i] != i) return false;
    return true;
}

Permutation parse_permutation(const std::string& s) {
    Permutation p;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        size_t a = tok.find_first_not_of(" ()E");
        if (a == std::string::npos) continue;
        try {
            p.sigma.push_back(std::stoi(tok.substr(a)) - 1);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad permutation '" + s + "'");
        }
    }
    if (!p.valid(static_cast<int>(p.sigma.size()))) throw Error(ErrorCode::ParseError, "not a permutation: '" + s + "'");
    return p;
}

Transported permute(const Matrix& A, const Matrix& F, const std::vector<Vec>& vectors, const Permutation& p) {
    Matrix S = p.matrix();
    Matrix St = S.transpose();
    Transported t;
    t.A = St * A * S;
    t.F = St * F * S;
    for (const auto& v : vectors) t.vectors.push_back(St * v);
    if (-(t.F.transpose() * t.F) != t.A) throw Error(ErrorCode::ProximityMismatch, "transported A differs from -F'^T F'");
    return t;
}

} // namespace fol
