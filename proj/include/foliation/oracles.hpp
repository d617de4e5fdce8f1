#ifndef FOLIATION_ORACLES_HPP
#define FOLIATION_ORACLES_HPP

#include "foliation/algebra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fol {

template <class K>
struct OneFormT;
using OneForm = OneFormT<Rational>;
struct ResolutionTree;

// i_0(f, g) from resultants after two independent random linear changes of coordinates.
template <class K>
int intersection_multiplicity(const BiPolyT<K>& f, const BiPolyT<K>& g, std::uint64_t seed = 0);

int milnor_direct(const OneForm& w, std::uint64_t seed = 0);

struct Parametrization {
    SeriesT<Rational> x, y;
};

// ord_t of -Q(gamma)/x' (or P(gamma)/y' when x' = 0)
int multiplicity_along_branch_direct(const OneForm& w, const Parametrization& gamma);

// Rational parametrizations (t^m-type) of the branches of f, modulo t^(truncation+1).
std::vector<Parametrization> newton_puiseux(const BiPoly& f, int truncation);

// ord_t g(gamma(t)); the parametrization must be long enough, else TruncationInsufficient
int order_along(const BiPoly& g, const Parametrization& gamma);

struct VanDenEssenResult {
    int sum_milnor = 0;
    int n_ell = 0;
    int oracle = 0;
    bool ok = false;
};
VanDenEssenResult van_den_essen_check(const ResolutionTree& tree, int mu_oracle);

struct ComponentCsCheck {
    int component = 0;
    Rational sum = 0;
    int self_intersection = 0;
    bool ok = false;
};
std::vector<ComponentCsCheck> cs_index_theorem_check(const ResolutionTree& tree);

struct NoetherResult {
    int oracle = 0;
    Rational nu_pairing = 0;
    Rational matrix_pairing = 0;
    bool ok = false;
};
// Joint resolution of f_C and f_D on top of the foliation w.
NoetherResult noether_check(const OneForm& w, const BiPoly& fC, const BiPoly& fD, int max_blowups = 64,
                            std::uint64_t seed = 0);

struct BBRecursionResult {
    Rational recursion = 0;
    Rational closed = 0;
    bool ok = false;
};
BBRecursionResult bb_recursion_check(const ResolutionTree& tree, const Rational& closed_value);

struct GsvMuResult {
    int mu_foliation_along = 0;  // mu_0(F, C) from parametrizations
    int mu_curve = 0;            // mu_0(C)
    int gsv_formula = 0;
    bool ok = false;
};
GsvMuResult gsv_via_mu_check(const OneForm& w, const BiPoly& fC, int gsv_formula);

// i_0(aP + bQ, C) - i_0(a fB_x + b fB_y, C), stable over independent draws of (a : b).
int polar_oracle(const OneForm& w, const BiPoly& fC, const BiPoly& fB, std::uint64_t seed = 0);

} // namespace fol

#endif
