#ifndef FOLIATION_INVARIANTS_HPP
#define FOLIATION_INVARIANTS_HPP

#include "foliation/combinatorics.hpp"
#include "foliation/resolution.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fol {

// Everything the closed formulas read from one reduction.
struct FoliationData {
    ResolutionTree tree;
    int n = 0;
    Matrix F, Finv, A, negAinv;
    Vec iota, delta, u, ell_recorded, rho;
    BalancedDivisor balanced;
    Vec S_B, T, C, S_F;
    TangencyExcess tau;
    Rational excess_B = 0;  // transverse saddle-node excess of B
    Rational local_bb = 0;  // sum of BB_p over the final singularities
    int nu0 = 0;            // algebraic multiplicity of the form
    // component ordering: vectors live in the frame Sigma^T v of the tree order
    Matrix frame;
    int origin = 0;  // position of the first exceptional component
};

FoliationData analyze(ResolutionTree tree, int curvette_choice = 0);
FoliationData analyze(const OneForm& w, int max_blowups = 64, int curvette_choice = 0);

// Reorders the components: A' = Sigma^T A Sigma, F' = Sigma^T F Sigma, v' = Sigma^T v.
FoliationData reorder(const FoliationData& d, const Permutation& p);

// Local data of an attachment divisor on a given tree.
struct DivisorData {
    AttachmentDivisor divisor;
    Vec S;
    Rational cs_local = 0;   // sum of CS_p over all attachments, polar ones included
    Rational var_local = 0;  // signed sum of CS_p + GSV_p
    Rational excess = 0;     // transverse saddle-node excess
    bool effective = true;
    bool invariant = true;
    bool reduced = true;
};
DivisorData divisor_data(const ResolutionTree& tree, const AttachmentDivisor& C);
DivisorData divisor_data(const FoliationData& d, const AttachmentDivisor& C);

Vec discrepancy_vector(const Matrix& F, const Vec& S_F, const Vec& iota);
// evaluates both expressions and compares them with the recorded discrepancies
Vec discrepancy_vector(const FoliationData& d);

Vec multiplicity_vector(const Vec& S_F, const Matrix& F, const Vec& iota, const Vec& delta);
// also checks the first entry against nu0 and the multiplicity relation with B
Vec multiplicity_vector(const FoliationData& d);

Rational milnor_number(const Matrix& A, const Matrix& F, const Vec& S_F, const Rational& excess_B);
// optional oracle value is compared exactly
Rational milnor_number(const FoliationData& d, std::optional<int> oracle = std::nullopt);

Rational milnor_along(const Matrix& A, const Matrix& F, const Vec& S_F, const DivisorData& C);
Rational gsv(const Matrix& A, const Vec& S_F, const DivisorData& C);
Rational cs(const Matrix& A, const DivisorData& C);
Rational variation(const Matrix& A, const Vec& S_F, const Vec& iota, const DivisorData& C);
Rational baum_bott(const Matrix& A, const Vec& S_F, const Vec& iota, const Rational& local_bb);
Rational polar_excess(const Matrix& A, const Vec& T, const DivisorData& C);

struct FoliationClass {
    bool generalized_curve = false;
    bool second_type = false;
    bool cnd = false;
};
FoliationClass classify_foliation(const FoliationData& d);

struct IndexIdentities {
    Rational cs, var, bb, delta, tau_norm2;
    Rational var_minus_cs, bb_minus_var, bb_minus_cs;
    bool equalities = false;
    bool equivalence = false;
};
IndexIdentities index_identities(const FoliationData& d);

struct MilGap {
    Rational gap_B, gap_Bprime;        // right-hand sides
    Rational direct_B, direct_Bprime;  // mu_0 minus mu_0(F, B) and mu_0(F, B')
};
MilGap milnor_gap(const FoliationData& d, const Rational& mu0);

struct UserCurve {
    ResolutionTree tree;  // reduction extended until the curve is separated
    AttachmentDivisor divisor;
};
UserCurve attach_user_curve(const ResolutionTree& tree, const BiPoly& f, int max_blowups = 64);

struct IndexRow {
    std::string name;
    Vec S;
    Rational cs, var, mu, delta;
    std::optional<Rational> gsv;  // only for reduced effective divisors
};
IndexRow index_row(const FoliationData& d, const std::string& name, const DivisorData& C);

struct InvariantReport {
    Vec ell, nu;
    Rational milnor = 0;
    Rational bb = 0;
    std::vector<IndexRow> indices;
    FoliationClass classification;
    IndexIdentities identities;
    MilGap gap;
};
InvariantReport invariant_report(const FoliationData& d, std::optional<int> milnor_oracle = std::nullopt);

} // namespace fol

#endif
