#include "foliation/invariants.hpp"

#include <set>
#include <tuple>

namespace fol {

namespace {

[[noreturn]] void formula_mismatch(const std::string& what, const std::string& lhs, const std::string& rhs) {
    throw Error(ErrorCode::FormulaMismatch, what + ": " + lhs + " vs " + rhs);
}

Vec pair_vector(const FoliationData& d) {
    // -A^{-1} S_F - (I + F^{-1}) u
    return d.negAinv * d.S_F - (d.u + d.Finv * d.u);
}

Rational norm2(const Vec& v) { return dot(v, v); }

void require_invariant(const DivisorData& C) {
    if (!C.invariant) throw Error(ErrorCode::NotInvariant, "divisor contains a non-invariant branch");
}

} // namespace

FoliationData analyze(ResolutionTree tree, int curvette_choice) {
    FoliationData d;
    d.n = tree.n();
    d.F = proximity_matrix(tree);
    d.A = intersection_matrix(tree);
    d.Finv = d.F.inverse();
    d.negAinv = -d.A.inverse();
    for (const auto& c : tree.components) {
        d.iota.emplace_back(c.invariant ? 1 : 0);
        d.delta.emplace_back(c.invariant ? 0 : 1);
        d.ell_recorded.emplace_back(c.recorded_discrepancy);
    }
    d.u = unit_vector(d.n);
    d.rho = weights_vector(d.F);
    d.balanced = balanced_divisor(tree, curvette_choice);
    d.S_B = d.balanced.B.incidence(d.n);
    SaddleNodeVectors sn = saddle_node_vectors(tree, d.S_B);
    d.T = sn.T;
    d.C = sn.C;
    d.S_F = sn.S;
    d.tau = tangency_excess_vector(d.F, d.T);
    d.excess_B = transverse_excess(tree, d.balanced.B);
    for (const auto& s : tree.singularities) d.local_bb += s.bb_total;
    d.nu0 = tree.original_form.order();
    d.frame = Matrix::identity(d.n);
    d.tree = std::move(tree);
    return d;
}

FoliationData reorder(const FoliationData& d, const Permutation& p) {
    if (!p.valid(d.n)) throw Error(ErrorCode::ParseError, "permutation size differs from the number of components");
    FoliationData r = d;
    Transported t = permute(d.A, d.F, {d.iota, d.delta, d.ell_recorded, d.rho, d.S_B, d.T, d.C, d.S_F, d.tau.tau}, p);
    r.A = t.A;
    r.F = t.F;
    r.Finv = r.F.inverse();
    r.negAinv = -r.A.inverse();
    Vec* targets[] = {&r.iota, &r.delta, &r.ell_recorded, &r.rho, &r.S_B, &r.T, &r.C, &r.S_F, &r.tau.tau};
    for (size_t i = 0; i < t.vectors.size(); ++i) *targets[i] = t.vectors[i];
    r.frame = d.frame * p.matrix();
    for (int i = 0; i < d.n; ++i)
        if (p.sigma[i] == d.origin) r.origin = i;
    return r;
}

FoliationData analyze(const OneForm& w, int max_blowups, int curvette_choice) {
    return analyze(reduce_singularities(w, max_blowups), curvette_choice);
}

DivisorData divisor_data(const ResolutionTree& tree, const AttachmentDivisor& C) {
    DivisorData r;
    r.divisor = C;
    r.S = C.incidence(tree.n());
    r.effective = C.effective();
    std::set<std::tuple<int, int, int, Rational>> seen;
    for (const auto& b : C.branches) {
        if (!b.invariant) r.invariant = false;
        if (b.coefficient != 1 && b.coefficient != -1) r.reduced = false;
        if (!seen.insert({b.component, b.singularity, static_cast<int>(b.kind == AttachmentKind::Curvette), b.coordinate}).second)
            r.reduced = false;
        if (b.singularity < 0) continue;
        const auto& s = tree.singularities.at(b.singularity);
        bool transverse_sn = s.saddle_node() && !s.tangent;
        Rational cs_p = s.cs_isolated_total;
        Rational gsv_p = Rational(transverse_sn ? s.k * s.orbit_size() : s.orbit_size());
        r.cs_local += cs_p;
        r.var_local += b.coefficient * (cs_p + gsv_p);
        if (transverse_sn) r.excess += b.coefficient * (s.k - 1) * b.orbit_size;
    }
    return r;
}

DivisorData divisor_data(const FoliationData& d, const AttachmentDivisor& C) {
    DivisorData r = divisor_data(d.tree, C);
    r.S = d.frame.transpose() * r.S;
    return r;
}

Vec discrepancy_vector(const Matrix& F, const Vec& S_F, const Vec& iota) {
    return F.inverse().transpose() * S_F - F * iota;
}

Vec discrepancy_vector(const FoliationData& d) {
    Vec first = discrepancy_vector(d.F, d.S_F, d.iota);
    Vec second = multiplicities_of_divisor(d.F, d.S_B) + d.tau.tau - d.F * d.iota;
    if (first != second) formula_mismatch("discrepancy expressions", str(first), str(second));
    if (first != d.ell_recorded) formula_mismatch("discrepancy vs recorded", str(first), str(d.ell_recorded));
    return first;
}

Vec multiplicity_vector(const Vec& S_F, const Matrix& F, const Vec& iota, const Vec& delta) {
    return discrepancy_vector(F, S_F, iota) - delta;
}

Vec multiplicity_vector(const FoliationData& d) {
    Vec nu = multiplicity_vector(d.S_F, d.F, d.iota, d.delta);
    if (nu.empty()) return nu;
    const Rational& nu0 = nu[d.origin];
    if (nu0 != Rational(d.nu0)) formula_mismatch("first multiplicity vs order of the form", nu0.get_str(), std::to_string(d.nu0));
    Rational nuB = multiplicities_of_divisor(d.F, d.S_B)[d.origin];
    Rational tau0 = d.tau.tau[d.origin];
    if (nu0 != nuB - 1 + tau0) formula_mismatch("multiplicity relation with B", nu0.get_str(), Rational(nuB - 1 + tau0).get_str());
    Vec ell = discrepancy_vector(d);
    if (ell != nu + d.u - d.iota) formula_mismatch("l = nu + u - iota", str(ell), str(nu + d.u - d.iota));
    return nu;
}

Rational milnor_number(const Matrix& A, const Matrix& F, const Vec& S_F, const Rational& excess_B) {
    Vec u = unit_vector(F.rows());
    Vec v = (-A.inverse()) * S_F - (u + F.inverse() * u);
    return dot(v, S_F) + 1 + excess_B;
}

Rational milnor_number(const FoliationData& d, std::optional<int> oracle) {
    Rational mu = milnor_number(d.A, d.F, d.S_F, d.excess_B);
    if (oracle && mu != Rational(*oracle)) formula_mismatch("Milnor number vs i_0(P, Q)", mu.get_str(), std::to_string(*oracle));
    return mu;
}

Rational milnor_along(const Matrix& A, const Matrix& F, const Vec& S_F, const DivisorData& C) {
    require_invariant(C);
    Vec u = unit_vector(F.rows());
    Vec v = (-A.inverse()) * S_F - (u + F.inverse() * u);
    return dot(v, C.S) + 1 + C.excess;
}

Rational gsv(const Matrix& A, const Vec& S_F, const DivisorData& C) {
    require_invariant(C);
    if (!C.effective || !C.reduced) throw Error(ErrorCode::NotReducedEffective, "GSV needs a reduced effective divisor");
    return dot((-A.inverse()) * (S_F - C.S), C.S) + C.excess;
}

Rational cs(const Matrix& A, const DivisorData& C) {
    require_invariant(C);
    return C.cs_local + dot((-A.inverse()) * C.S, C.S);
}

Rational variation(const Matrix& A, const Vec& S_F, const Vec& iota, const DivisorData& C) {
    require_invariant(C);
    return C.var_local + dot((-A.inverse()) * S_F - iota, C.S);
}

Rational baum_bott(const Matrix& A, const Vec& S_F, const Vec& iota, const Rational& local_bb) {
    return local_bb + dot((-A.inverse()) * S_F, S_F) - 2 * dot(S_F, iota) - dot(A * iota, iota);
}

Rational polar_excess(const Matrix& A, const Vec& T, const DivisorData& C) {
    require_invariant(C);
    return C.excess + dot((-A.inverse()) * T, C.S);
}

FoliationClass classify_foliation(const FoliationData& d) {
    FoliationClass c;
    c.generalized_curve = true;
    for (const auto& s : d.tree.singularities)
        if (s.saddle_node()) c.generalized_curve = false;
    Vec zero(d.n, Rational(0));
    c.second_type = d.T == zero;
    c.cnd = d.C == zero;
    Vec naive = multiplicities_of_divisor(d.F, d.S_B) - d.F * d.iota;
    if (c.second_type != (naive == d.ell_recorded))
        formula_mismatch("second type criterion on l", c.second_type ? "second type" : "not second type", str(naive));
    return c;
}

IndexIdentities index_identities(const FoliationData& d) {
    IndexIdentities r;
    DivisorData B = divisor_data(d, d.balanced.B);
    r.cs = cs(d.A, B);
    r.var = variation(d.A, d.S_F, d.iota, B);
    r.bb = baum_bott(d.A, d.S_F, d.iota, d.local_bb);
    r.delta = polar_excess(d.A, d.T, B);
    r.tau_norm2 = norm2(d.tau.tau);
    r.var_minus_cs = r.var - r.cs;
    r.bb_minus_var = r.bb - r.var;
    r.bb_minus_cs = r.bb - r.cs;
    r.equalities = r.var_minus_cs == r.delta && r.delta >= 0 && r.bb_minus_var == r.delta + r.tau_norm2 &&
                   r.bb_minus_cs == 2 * r.delta + r.tau_norm2;
    bool gc = classify_foliation(d).generalized_curve;
    r.equivalence = gc == (r.var_minus_cs == 0) && gc == (r.bb_minus_var == 0) && gc == (r.bb_minus_cs == 0);
    if (!r.equalities)
        formula_mismatch("index differences", r.var_minus_cs.get_str() + "," + r.bb_minus_var.get_str() + "," + r.bb_minus_cs.get_str(),
                 "delta " + r.delta.get_str() + ", |tau|^2 " + r.tau_norm2.get_str());
    if (!r.equivalence) formula_mismatch("generalized curve equivalence", gc ? "generalized curve" : "saddle-nodes present", "index gaps");
    return r;
}

MilGap milnor_gap(const FoliationData& d, const Rational& mu0) {
    MilGap g;
    Vec v = pair_vector(d);
    g.gap_B = dot(v, d.T);
    g.gap_Bprime = dot(v, d.C);
    Rational muB = dot(v, d.S_B) + 1 + d.excess_B;
    Rational muBp = dot(v, d.S_F - d.C) + 1 + d.excess_B;
    g.direct_B = mu0 - muB;
    g.direct_Bprime = mu0 - muBp;
    if (g.gap_B != g.direct_B) formula_mismatch("mu_0 - mu_0(F, B)", g.direct_B.get_str(), g.gap_B.get_str());
    if (g.gap_Bprime != g.direct_Bprime) formula_mismatch("mu_0 - mu_0(F, B')", g.direct_Bprime.get_str(), g.gap_Bprime.get_str());
    FoliationClass c = classify_foliation(d);
    if (c.second_type && g.gap_B != 0) formula_mismatch("gap for a second type foliation", g.gap_B.get_str(), "0");
    if (c.cnd && g.gap_Bprime != 0) formula_mismatch("gap for a CND foliation", g.gap_Bprime.get_str(), "0");
    return g;
}

UserCurve attach_user_curve(const ResolutionTree& tree, const BiPoly& f, int max_blowups) {
    if (f.zero()) throw Error(ErrorCode::ZeroPolynomial, "zero curve");
    std::vector<BiPoly> curves = tree.curves;
    curves.push_back(f);
    UserCurve r;
    r.tree = reduce_singularities(tree.original_form, max_blowups, curves);
    int idx = static_cast<int>(curves.size()) - 1;
    for (const auto& a : r.tree.attachments) {
        if (a.curve != idx) continue;
        Attachment b;
        b.kind = AttachmentKind::Curve;
        b.component = a.component;
        b.singularity = a.singularity;
        b.invariant = a.invariant;
        b.orbit_size = a.orbit_size();
        b.coordinate = a.location.coordinate;
        r.divisor.branches.push_back(b);
    }
    if (r.tree.n() != tree.n()) r.tree.notes.push_back("reduction extended to separate the curve " + to_string(f));
    return r;
}

IndexRow index_row(const FoliationData& d, const std::string& name, const DivisorData& C) {
    IndexRow r;
    r.name = name;
    r.S = C.S;
    r.cs = cs(d.A, C);
    r.var = variation(d.A, d.S_F, d.iota, C);
    r.mu = milnor_along(d.A, d.F, d.S_F, C);
    r.delta = polar_excess(d.A, d.T, C);
    if (C.effective && C.reduced) {
        r.gsv = gsv(d.A, d.S_F, C);
        if (r.var != r.cs + *r.gsv) formula_mismatch("Var = CS + GSV for " + name, r.var.get_str(), Rational(r.cs + *r.gsv).get_str());
    }
    return r;
}

InvariantReport invariant_report(const FoliationData& d, std::optional<int> milnor_oracle) {
    InvariantReport r;
    r.ell = discrepancy_vector(d);
    r.nu = multiplicity_vector(d);
    r.milnor = milnor_number(d, milnor_oracle);
    r.bb = baum_bott(d.A, d.S_F, d.iota, d.local_bb);
    r.classification = classify_foliation(d);
    r.identities = index_identities(d);
    r.gap = milnor_gap(d, r.milnor);
    r.indices.push_back(index_row(d, "B", divisor_data(d, d.balanced.B)));
    return r;
}

} // namespace fol
