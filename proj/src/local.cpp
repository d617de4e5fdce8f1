#include "foliation/oracles.hpp"
#include "foliation/resolution.hpp"

namespace fol {

template <class K>
int OneFormT<K>::order() const {
    int a = P.order(), b = Q.order();
    if (a < 0) return b;
    if (b < 0) return a;
    return std::min(a, b);
}

template <class K>
LinearPart<K> linear_part(const OneFormT<K>& w) {
    LinearPart<K> J;
    J.m11 = K(0) - w.Q.coeff(1, 0);
    J.m12 = K(0) - w.Q.coeff(0, 1);
    J.m21 = w.P.coeff(1, 0);
    J.m22 = w.P.coeff(0, 1);
    return J;
}

template <class K>
Classification<K> classify_singularity(const OneFormT<K>& local) {
    if (!local.singular_at_origin()) throw Error(ErrorCode::NotSingular, "point is regular for the foliation");
    Classification<K> c;
    c.linear = linear_part(local);
    K tr = c.linear.trace(), det = c.linear.det();
    if (!is_zero(det)) {
        c.resonance = resonance_ratio_test(tr, det);
        c.kind = c.resonance ? LocalKind::NonReduced : LocalKind::NonDegenerate;
    } else {
        c.kind = is_zero(tr) ? LocalKind::NonReduced : LocalKind::SaddleNode;
    }
    return c;
}

namespace {

template <class K>
void saddle_directions(const LinearPart<K>& J, Direction<K>& weak, Direction<K>& strong) {
    if (!is_zero(J.m11) || !is_zero(J.m12)) {
        weak = {K(0) - J.m12, J.m11};
    } else {
        weak = {K(0) - J.m22, J.m21};
    }
    // image of J is the eigenline of the nonzero eigenvalue
    if (!is_zero(J.m11) || !is_zero(J.m21))
        strong = {J.m11, J.m21};
    else
        strong = {J.m12, J.m22};
}

} // namespace

template <class K>
OneFormT<K> saddle_node_adapted(const OneFormT<K>& local) {
    Classification<K> c = classify_singularity(local);
    if (c.kind != LocalKind::SaddleNode) throw Error(ErrorCode::NotSaddleNode, "not a saddle-node");
    Direction<K> w, s;
    saddle_directions(c.linear, w, s);
    BiPolyT<K> P = local.P.linear_subst(w.a, s.a, w.b, s.b);
    BiPolyT<K> Q = local.Q.linear_subst(w.a, s.a, w.b, s.b);
    OneFormT<K> out;
    out.P = w.a * P + w.b * Q;
    out.Q = s.a * P + s.b * Q;
    return out;
}

template <class K>
SeriesT<K> weak_separatrix_jet(const OneFormT<K>& adapted, int k, int order) {
    if (order < k + 1)
        throw Error(ErrorCode::OrderTooSmall, "jet order " + std::to_string(order) + " < k + 1 = " + std::to_string(k + 1));
    K c = adapted.P.coeff(0, 1);
    if (is_zero(c)) throw Error(ErrorCode::NotSaddleNode, "form is not adapted");
    int prec = order + 1;
    SeriesT<K> X = SeriesT<K>::variable(prec);
    SeriesT<K> phi(prec);
    for (int n = 1; n <= order; ++n) {
        SeriesT<K> r = substitute(adapted.P, X, phi) + substitute(adapted.Q, X, phi) * phi.derivative();
        phi[n] = K(0) - r[n] / c;
    }
    return phi;
}

template <class K>
K cs_index_local(const OneFormT<K>& local, const Branch<K>& branch) {
    using B = typename Branch<K>::Type;
    if (branch.type == B::XZero) {
        OneFormT<K> sw;
        sw.P = local.Q.swap_xy();
        sw.Q = local.P.swap_xy();
        return cs_index_local(sw, Branch<K>{B::YZero, {}});
    }
    if (branch.type == B::YZero) {
        if (!local.P.at_y(K(0)).zero()) throw Error(ErrorCode::NotInvariantBranch, "y = 0 is not invariant");
        UPolyT<K> b = local.Q.at_y(K(0));
        UPolyT<K> a = local.P.dy().at_y(K(0));
        if (b.zero()) throw Error(ErrorCode::NotInvariantBranch, "branch is contained in the singular set");
        int m = b.order();
        int prec = 2 * m + 1;
        SeriesT<K> as(a.coeffs(), prec), bs(b.coeffs(), prec);
        return K(0) - residue_of_quotient(as, bs);
    }
    const SeriesT<K>& phi = branch.graph;
    int prec = phi.precision();
    SeriesT<K> X = SeriesT<K>::variable(prec);
    SeriesT<K> dphi = phi.derivative();
    SeriesT<K> r = substitute(local.P, X, phi) + substitute(local.Q, X, phi) * dphi;
    for (int i = 0; i < prec - 1; ++i)
        if (!is_zero(r[i])) throw Error(ErrorCode::NotInvariantBranch, "graph is not invariant at order " + std::to_string(i));
    SeriesT<K> b = substitute(local.Q, X, phi);
    SeriesT<K> a = substitute(local.P.dy(), X, phi) + substitute(local.Q.dy(), X, phi) * dphi;
    int m = b.order();
    if (m < 0 || prec - 1 < 2 * m) throw Error(ErrorCode::TruncationInsufficient, "jet too short for the residue");
    return K(0) - residue_of_quotient(a.truncated(prec - 1), b.truncated(prec - 1));
}

template <class K>
K saddle_node_lambda(const OneFormT<K>& local, int k) {
    OneFormT<K> ad = saddle_node_adapted(local);
    std::optional<K> prev;
    for (int order = k + 2; order <= 1024; order *= 2) {
        std::optional<K> cur;
        try {
            SeriesT<K> phi = weak_separatrix_jet(ad, k, order);
            Branch<K> br;
            br.type = Branch<K>::Type::Graph;
            br.graph = phi;
            cur = cs_index_local(ad, br);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TruncationInsufficient) throw;
        }
        if (prev && cur && is_zero(*prev - *cur)) return *cur;
        prev = cur;
    }
    throw Error(ErrorCode::TruncationInsufficient, "saddle-node residue did not stabilize");
}

template <class K>
SaddleNodeData<K> saddle_node_profile(const OneFormT<K>& local, const std::vector<Direction<K>>& divisor_directions) {
    Classification<K> c = classify_singularity(local);
    if (c.kind != LocalKind::SaddleNode) throw Error(ErrorCode::NotSaddleNode, "not a saddle-node");
    SaddleNodeData<K> d;
    saddle_directions(c.linear, d.weak, d.strong);
    d.k = intersection_multiplicity(local.P, local.Q);
    // the weak branch carries multiplicity k as well
    OneFormT<K> ad = saddle_node_adapted(local);
    SeriesT<K> phi = weak_separatrix_jet(ad, d.k, d.k + 1);
    int along = substitute(ad.Q, SeriesT<K>::variable(d.k + 2), phi).order();
    if (along != d.k)
        throw Error(ErrorCode::FormulaMismatch, "saddle-node order " + std::to_string(d.k) +
                                                    " differs from weak multiplicity " + std::to_string(along));
    for (const auto& dir : divisor_directions)
        if (dir.parallel(d.weak)) d.tangent = true;
    d.corner = divisor_directions.size() >= 2;
    d.lambda = saddle_node_lambda(local, d.k);
    return d;
}

#define FOL_INSTANTIATE(K)                                                                             \
    template struct OneFormT<K>;                                                                       \
    template LinearPart<K> linear_part(const OneFormT<K>&);                                           \
    template Classification<K> classify_singularity(const OneFormT<K>&);                             \
    template OneFormT<K> saddle_node_adapted(const OneFormT<K>&);                                     \
    template SeriesT<K> weak_separatrix_jet(const OneFormT<K>&, int, int);                            \
    template K cs_index_local(const OneFormT<K>&, const Branch<K>&);                                  \
    template K saddle_node_lambda(const OneFormT<K>&, int);                                           \
    template SaddleNodeData<K> saddle_node_profile(const OneFormT<K>&, const std::vector<Direction<K>>&);

FOL_INSTANTIATE(Rational)
FOL_INSTANTIATE(AlgNum)

} // namespace fol
