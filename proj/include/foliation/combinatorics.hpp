#ifndef FOLIATION_COMBINATORICS_HPP
#define FOLIATION_COMBINATORICS_HPP

#include "foliation/resolution.hpp"

#include <string>
#include <vector>

namespace fol {

using Vec = std::vector<Rational>;

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {}
    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Matrix transpose() const;
    Matrix inverse() const;  // throws FormulaMismatch when singular
    Matrix operator-() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& v);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec scaled(const Rational& s, const Vec& a);
Rational dot(const Vec& a, const Vec& b);
Vec make_vec(const std::vector<long>& v);
Vec unit_vector(int n);  // u = (1, ..., 1)
std::string str(const Vec& v);

enum class AttachmentKind { Isolated, Curvette, Curve };

struct Attachment {
    AttachmentKind kind = AttachmentKind::Isolated;
    int component = 0;
    int singularity = -1;  // index into tree.singularities, -1 at regular points
    int coefficient = 1;
    bool formal = false;    // weak branch of a saddle-node, possibly divergent
    bool invariant = true;
    int orbit_size = 1;
    Rational coordinate = 0;  // curvette position on its dicritical component
    std::string describe() const;
};

struct AttachmentDivisor {
    std::vector<Attachment> branches;
    Vec incidence(int n) const;  // S_C
    bool effective() const;
    AttachmentDivisor operator+(const AttachmentDivisor& o) const;
};

struct BalancedDivisor {
    AttachmentDivisor B;
    AttachmentDivisor B0, Binf;
    AttachmentDivisor I, D;  // isolated part and dicritical part
};

Matrix proximity_matrix(const ResolutionTree& tree);
Matrix intersection_matrix(const ResolutionTree& tree);
Vec weights_vector(const Matrix& F);
Vec multiplicities_of_divisor(const Matrix& F, const Vec& S);
Vec pullback_orders(const Matrix& A, const Vec& S);

// curvette_choice selects the k-th free coordinate on each dicritical component
BalancedDivisor balanced_divisor(const ResolutionTree& tree, int curvette_choice = 0);

struct SaddleNodeVectors {
    Vec T, C, S;  // T_F, C_F, S_F
};
SaddleNodeVectors saddle_node_vectors(const ResolutionTree& tree, const Vec& S_B);

// sum of (mu_p - 1) over non-tangent saddle-nodes whose weak branch belongs to C
Rational transverse_excess(const ResolutionTree& tree, const AttachmentDivisor& C);

struct TangencyExcess {
    Vec tau;
    Rational tau0 = 0;
};
TangencyExcess tangency_excess_vector(const Matrix& F, const Vec& T);

// sigma[i] is the old (0-based) index placed at position i
struct Permutation {
    std::vector<int> sigma;
    Matrix matrix() const;  // Sigma with Sigma(sigma[i], i) = 1
    bool valid(int n) const;
};
Permutation parse_permutation(const std::string& s);  // "2,3,1" (1-based)

struct Transported {
    Matrix A, F;
    std::vector<Vec> vectors;
};
Transported permute(const Matrix& A, const Matrix& F, const std::vector<Vec>& vectors, const Permutation& p);

} // namespace fol

#endif
