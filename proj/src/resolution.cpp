#include "foliation/resolution.hpp"
#include "foliation/oracles.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <sstream>

namespace fol {

OneForm make_form(const std::string& P, const std::string& Q) {
    OneForm w;
    w.P = parse_bipoly(P);
    w.Q = parse_bipoly(Q);
    return w;
}

std::string to_string(const OneForm& w) {
    return "(" + to_string(w.P) + ") dx + (" + to_string(w.Q) + ") dy";
}

BlowUpResult blow_up(const OneForm& germ, Chart which, bool allow_regular) {
    if (germ.P.zero() && germ.Q.zero()) throw Error(ErrorCode::ZeroPolynomial, "zero form");
    if (!allow_regular && !germ.singular_at_origin())
        throw Error(ErrorCode::NotSingular, "blow-up of a regular point: " + to_string(germ));
    BlowUpResult r;
    BiPoly A, B;
    if (which == Chart::XT) {
        BiPoly Pc = germ.P.chart_xt(), Qc = germ.Q.chart_xt();
        A = Pc + BiPoly::y() * Qc;
        B = BiPoly::x() * Qc;
        int k = -1;
        for (const BiPoly* p : {&A, &B})
            if (!p->zero()) k = (k < 0) ? p->order_x() : std::min(k, p->order_x());
        r.stripped_power = k;
        r.pulled_back.P = A.divide_monomial(k, 0);
        r.pulled_back.Q = B.divide_monomial(k, 0);
        r.invariant_flag = r.pulled_back.Q.zero() || r.pulled_back.Q.order_x() > 0;
    } else {
        BiPoly Pc = germ.P.chart_sy(), Qc = germ.Q.chart_sy();
        A = BiPoly::y() * Pc;
        B = BiPoly::x() * Pc + Qc;
        int k = -1;
        for (const BiPoly* p : {&A, &B})
            if (!p->zero()) k = (k < 0) ? p->order_y() : std::min(k, p->order_y());
        r.stripped_power = k;
        r.pulled_back.P = A.divide_monomial(0, k);
        r.pulled_back.Q = B.divide_monomial(0, k);
        r.invariant_flag = r.pulled_back.P.zero() || r.pulled_back.P.order_y() > 0;
    }
    return r;
}

bool PointLocation::on(int component) const {
    for (const auto& h : hosts)
        if (h.component == component) return true;
    return false;
}

std::string PointLocation::describe() const {
    std::ostringstream os;
    if (parent < 0) return "origin";
    os << "E" << (parent + 1) << " ";
    if (chart == 2)
        os << "chart(sy,y) s=0";
    else if (orbit)
        os << "chart(x,tx) t in roots of " << to_string(minimal_polynomial, "t");
    else
        os << "chart(x,tx) t=" << coordinate.get_str();
    return os.str();
}

bool ResolutionTree::adjacent(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::find(adjacency.begin(), adjacency.end(), std::make_pair(i, j)) != adjacency.end();
}

int ResolutionTree::valence(int i) const {
    int v = 0;
    for (const auto& [a, b] : adjacency)
        if (a == i || b == i) ++v;
    return v;
}

namespace {

template <class K>
Direction<K> axis_direction(char axis) {
    return axis == 'x' ? Direction<K>{K(0), K(1)} : Direction<K>{K(1), K(0)};
}

template <class K>
struct Status {
    bool singular = false;
    bool needs_blowup = false;
    std::string reason;
    int curve_order = 0;
};

template <class K>
Status<K> examine(const OneFormT<K>& w, const std::vector<HostAxis>& hosts, const std::vector<DivisorComponent>& comps,
                  const std::vector<BiPolyT<K>>& curves) {
    Status<K> s;
    s.singular = w.singular_at_origin();
    auto flag = [&](const std::string& why) {
        if (!s.needs_blowup) s.reason = why;
        s.needs_blowup = true;
    };
    if (s.singular && classify_singularity(w).kind == LocalKind::NonReduced) flag("non-reduced singularity");
    int dicritical_hosts = 0;
    for (const auto& h : hosts) {
        if (comps[h.component - 1].invariant) continue;
        ++dicritical_hosts;
        if (s.singular) flag("singular point on a dicritical component");
        const K& c = h.axis == 'x' ? w.Q.coeff(0, 0) : w.P.coeff(0, 0);
        if (is_zero(c)) flag("tangency with a dicritical component");
    }
    if (dicritical_hosts >= 2) flag("corner of two dicritical components");
    for (const auto& g : curves) {
        if (g.zero() || !is_zero(g.coeff(0, 0))) continue;
        s.curve_order += g.order();
    }
    if (s.curve_order >= 2) flag("curve not yet separated");
    if (s.curve_order == 1) {
        if (hosts.size() >= 2) flag("curve through a corner");
        for (const auto& g : curves) {
            if (g.zero() || !is_zero(g.coeff(0, 0)) || g.order() != 1) continue;
            for (const auto& h : hosts) {
                bool tangent = h.axis == 'x' ? is_zero(g.coeff(0, 1)) : is_zero(g.coeff(1, 0));
                if (tangent) flag("curve tangent to the divisor");
            }
        }
    }
    return s;
}

// invariance of a smooth curve germ g = 0 for w, checked on a jet of length prec
template <class K>
bool smooth_curve_invariant(const OneFormT<K>& w, const BiPolyT<K>& g, int prec = 24) {
    bool graph_over_x = !is_zero(g.coeff(0, 1));
    BiPolyT<K> G = graph_over_x ? g : g.swap_xy();
    OneFormT<K> W = w;
    if (!graph_over_x) {
        W.P = w.Q.swap_xy();
        W.Q = w.P.swap_xy();
    }
    K beta = G.coeff(0, 1);
    SeriesT<K> X = SeriesT<K>::variable(prec);
    SeriesT<K> psi(prec);
    for (int n = 1; n < prec; ++n) {
        SeriesT<K> r = substitute(G, X, psi);
        psi[n] = K(0) - r[n] / beta;
    }
    SeriesT<K> res = substitute(W.P, X, psi) + substitute(W.Q, X, psi) * psi.derivative();
    for (int i = 0; i < prec - 1; ++i)
        if (!is_zero(res[i])) return false;
    return true;
}

template <class K>
SingularityRecord make_record(const OneFormT<K>& w, const PointLocation& loc) {
    SingularityRecord rec;
    rec.location = loc;
    int orbit = loc.orbit_size();
    Classification<K> c = classify_singularity(w);
    K tr = c.linear.trace(), det = c.linear.det();
    rec.trace = field_str(tr);
    rec.det = field_str(det);
    if (c.kind == LocalKind::NonDegenerate) {
        rec.kind = ReducedKind::NonDegenerate;
        rec.milnor = 1;
        for (const auto& h : loc.hosts) {
            K along = h.axis == 'y' ? c.linear.m11 : c.linear.m22;
            K other = tr - along;
            rec.cs_along[h.component] = field_trace(other / along, orbit);
            if (loc.hosts.size() == 1) rec.cs_isolated_total = field_trace(along / other, orbit);
        }
        rec.bb_total = field_trace(tr * tr / det, orbit);
        return rec;
    }
    rec.kind = ReducedKind::SaddleNode;
    std::vector<Direction<K>> dirs;
    for (const auto& h : loc.hosts) dirs.push_back(axis_direction<K>(h.axis));
    SaddleNodeData<K> sn = saddle_node_profile(w, dirs);
    rec.k = sn.k;
    rec.milnor = sn.k;
    rec.tangent = sn.tangent;
    rec.corner = sn.corner;
    rec.lambda = field_str(sn.lambda);
    rec.lambda_total = field_trace(sn.lambda, orbit);
    for (const auto& h : loc.hosts) {
        bool weak = axis_direction<K>(h.axis).parallel(sn.weak);
        if (weak) {
            rec.weak_component = h.component;
            rec.cs_along[h.component] = rec.lambda_total;
        } else {
            rec.strong_component = h.component;
            rec.cs_along[h.component] = 0;
        }
        if (loc.hosts.size() == 1) rec.cs_isolated_total = weak ? Rational(0) : rec.lambda_total;
    }
    rec.bb_total = field_trace(K((long)(2 * sn.k)) + sn.lambda, orbit);
    if (rec.corner && !rec.tangent)
        throw Error(ErrorCode::FormulaMismatch, "corner saddle-node that is not tangent at " + loc.describe());
    return rec;
}

struct Pending {
    PointLocation location;
    OneForm form;
    std::vector<BiPoly> curves;  // zero when the curve does not pass
    std::string reason;
};

BiPoly strict_transform(const BiPoly& g, Chart ch) {
    if (g.zero() || !is_zero(g.coeff(0, 0))) return BiPoly();
    if (ch == Chart::XT) {
        BiPoly h = g.chart_xt();
        return h.divide_monomial(h.order_x(), 0);
    }
    BiPoly h = g.chart_sy();
    return h.divide_monomial(0, h.order_y());
}

void add_unique(std::vector<UPoly>& v, const UPoly& p) {
    for (const auto& q : v)
        if (q == p) return;
    v.push_back(p);
}

template <class K>
void terminal_point(ResolutionTree& tree, const OneFormT<K>& w, const PointLocation& loc,
                    const std::vector<BiPolyT<K>>& curves, const Status<K>& st) {
    int sing = -1;
    if (st.singular) {
        tree.singularities.push_back(make_record(w, loc));
        sing = static_cast<int>(tree.singularities.size()) - 1;
    }
    for (size_t i = 0; i < curves.size(); ++i) {
        const auto& g = curves[i];
        if (g.zero() || !is_zero(g.coeff(0, 0))) continue;
        CurveAttachment a;
        a.curve = static_cast<int>(i);
        a.location = loc;
        a.component = loc.hosts.at(0).component;
        a.singularity = sing;
        a.invariant = smooth_curve_invariant(w, g);
        tree.attachments.push_back(a);
    }
}

} // namespace

ResolutionTree reduce_singularities(const OneForm& w, int max_blowups, const std::vector<BiPoly>& curves) {
    if (w.P.zero() && w.Q.zero()) throw Error(ErrorCode::ZeroPolynomial, "zero form");
    if (!w.singular_at_origin()) throw Error(ErrorCode::NotSingular, "the origin is a regular point");
    ResolutionTree tree;
    tree.original_form = w;
    tree.curves = curves;
    std::deque<Pending> queue;
    {
        Pending o;
        o.form = w;
        for (const auto& g : curves) o.curves.push_back((!g.zero() && is_zero(g.coeff(0, 0))) ? g : BiPoly());
        o.reason = "origin";
        queue.push_back(o);
    }
    while (!queue.empty()) {
        if (tree.n() >= max_blowups)
            throw Error(ErrorCode::MaxBlowupsExceeded, "more than " + std::to_string(max_blowups) + " blow-ups");
        Pending cur = std::move(queue.front());
        queue.pop_front();

        InfinitelyNearPoint center;
        center.index = static_cast<int>(tree.points.size());
        center.location = cur.location;
        center.local_form = cur.form;
        center.local_curves = cur.curves;
        center.multiplicity = cur.form.order();
        center.regular_center = !cur.form.singular_at_origin();
        if (center.regular_center) tree.notes.push_back("regular center blown up (" + cur.reason + ") at " + cur.location.describe());

        int e = center.index + 1;
        BlowUpResult b1 = blow_up(cur.form, Chart::XT, true);
        BlowUpResult b2 = blow_up(cur.form, Chart::SY, true);
        if (b1.stripped_power != b2.stripped_power || b1.invariant_flag != b2.invariant_flag)
            throw Error(ErrorCode::FormulaMismatch, "charts disagree on the exceptional order");
        DivisorComponent comp;
        comp.index = e;
        comp.invariant = b1.invariant_flag;
        comp.recorded_discrepancy = b1.stripped_power;
        comp.center = center.index;
        if (comp.recorded_discrepancy != center.multiplicity + 1 - (comp.invariant ? 1 : 0))
            throw Error(ErrorCode::FormulaMismatch, "recorded discrepancy differs from multiplicity + 1 - iota at E" + std::to_string(e));

        // adjacency
        const auto& hosts = cur.location.hosts;
        if (hosts.size() == 2) {
            auto p = std::minmax(hosts[0].component, hosts[1].component);
            tree.adjacency.erase(std::remove(tree.adjacency.begin(), tree.adjacency.end(), std::make_pair(p.first, p.second)),
                                 tree.adjacency.end());
        }
        for (const auto& h : hosts) tree.adjacency.push_back({h.component, e});

        tree.points.push_back(center);
        tree.components.push_back(comp);

        // chart (x, t x): E = {x = 0}
        std::vector<BiPoly> c1, c2;
        for (const auto& g : cur.curves) {
            c1.push_back(strict_transform(g, Chart::XT));
            c2.push_back(strict_transform(g, Chart::SY));
        }
        std::vector<UPoly> special;
        const OneForm& f1 = b1.pulled_back;
        special.push_back(comp.invariant ? f1.P.at_x(Rational(0)) : f1.Q.at_x(Rational(0)));
        for (const auto& g : c1)
            if (!g.zero()) special.push_back(g.at_x(Rational(0)));
        bool host_y = false, host_x = false;
        for (const auto& h : hosts) (h.axis == 'y' ? host_y : host_x) = true;
        if (host_y) special.push_back(UPoly(std::vector<Rational>{0, 1}));

        std::vector<Rational> roots;
        std::vector<UPoly> orbits;
        for (const auto& p : special) {
            if (p.degree() <= 0) continue;
            for (const auto& f : factor_rational(p)) {
                if (f.factor.degree() == 1)
                    roots.push_back(-f.factor.coeff(0));
                else
                    add_unique(orbits, f.factor);
            }
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        tree.components.back().occupied = roots;
        tree.components.back().occupied_orbits = orbits;

        for (const auto& c : roots) {
            PointLocation loc;
            loc.parent = center.index;
            loc.chart = 1;
            loc.coordinate = c;
            loc.hosts.push_back({e, 'x'});
            if (is_zero(c))
                for (const auto& h : hosts)
                    if (h.axis == 'y') loc.hosts.push_back(h);
            OneForm local{f1.P.translate(0, c), f1.Q.translate(0, c)};
            std::vector<BiPoly> lc;
            for (const auto& g : c1) lc.push_back(g.zero() ? g : g.translate(0, c));
            Status<Rational> st = examine(local, loc.hosts, tree.components, lc);
            if (st.needs_blowup) {
                for (auto& g : lc)
                    if (!g.zero() && !is_zero(g.coeff(0, 0))) g = BiPoly();
                queue.push_back({loc, local, lc, st.reason});
            } else {
                terminal_point(tree, local, loc, lc, st);
            }
        }
        for (const auto& m : orbits) {
            auto mod = std::make_shared<const UPoly>(m);
            AlgNum theta = AlgNum::generator(mod);
            PointLocation loc;
            loc.parent = center.index;
            loc.chart = 1;
            loc.orbit = true;
            loc.minimal_polynomial = m;
            loc.hosts.push_back({e, 'x'});
            OneFormT<AlgNum> local;
            local.P = BiPolyT<AlgNum>::convert(f1.P).translate(AlgNum(0), theta);
            local.Q = BiPolyT<AlgNum>::convert(f1.Q).translate(AlgNum(0), theta);
            std::vector<BiPolyT<AlgNum>> lc;
            for (const auto& g : c1)
                lc.push_back(g.zero() ? BiPolyT<AlgNum>() : BiPolyT<AlgNum>::convert(g).translate(AlgNum(0), theta));
            Status<AlgNum> st = examine(local, loc.hosts, tree.components, lc);
            if (st.needs_blowup)
                throw Error(ErrorCode::AlgebraicCenterUnsupported,
                            st.reason + " at a non-rational point, " + loc.describe());
            terminal_point(tree, local, loc, lc, st);
        }

        // chart (s y, y) at s = 0: E = {y = 0}
        {
            const OneForm& f2 = b2.pulled_back;
            PointLocation loc;
            loc.parent = center.index;
            loc.chart = 2;
            loc.hosts.push_back({e, 'y'});
            for (const auto& h : hosts)
                if (h.axis == 'x') loc.hosts.push_back(h);
            bool special2 = host_x || f2.singular_at_origin();
            if (!comp.invariant && is_zero(f2.P.coeff(0, 0))) special2 = true;
            for (const auto& g : c2)
                if (!g.zero() && is_zero(g.coeff(0, 0))) special2 = true;
            tree.components.back().infinity_occupied = special2;
            if (special2) {
                Status<Rational> st = examine(f2, loc.hosts, tree.components, c2);
                std::vector<BiPoly> lc = c2;
                for (auto& g : lc)
                    if (!g.zero() && !is_zero(g.coeff(0, 0))) g = BiPoly();
                if (st.needs_blowup)
                    queue.push_back({loc, f2, lc, st.reason});
                else
                    terminal_point(tree, f2, loc, lc, st);
            }
        }
    }
    // self-intersections
    for (auto& c : tree.components) {
        int later = 0;
        for (const auto& p : tree.points)
            if (p.location.on(c.index)) ++later;
        c.self_intersection = -1 - later;
    }
    for (auto& [a, b] : tree.adjacency)
        if (a > b) std::swap(a, b);
    std::sort(tree.adjacency.begin(), tree.adjacency.end());
    for (const auto& c : tree.components)
        if (!c.invariant)
            for (const auto& s : tree.singularities)
                if (s.location.on(c.index))
                    throw Error(ErrorCode::FormulaMismatch, "singularity left on dicritical E" + std::to_string(c.index));
    return tree;
}

BiPoly push_down_curve(const ResolutionTree& tree, const PointLocation& where, const BiPoly& local_curve) {
    BiPoly g = local_curve;
    PointLocation loc = where;
    while (loc.parent >= 0) {
        if (loc.orbit) throw Error(ErrorCode::AlgebraicCenterUnsupported, "cannot push a curve down from an orbit");
        BiPoly h;
        if (loc.chart == 1) {
            int m = std::max(0, g.degree_y());
            BiPoly lin = BiPoly::y() - loc.coordinate * BiPoly::x();
            std::vector<BiPoly> powers{BiPoly::constant(1)};
            for (const auto& [e, c] : g.terms()) {
                while ((int)powers.size() <= e.second) powers.push_back(powers.back() * lin);
                h = h + (c * powers[e.second]).multiply_monomial(e.first + m - e.second, 0);
            }
        } else {
            int m = std::max(0, g.degree_x());
            for (const auto& [e, c] : g.terms()) h.add_term(e.first, e.second + m - e.first, c);
        }
        g = h;
        loc = tree.points.at(loc.parent).location;
    }
    return g;
}

std::vector<Rational> free_coordinates(const DivisorComponent& c, int count) {
    std::vector<Rational> out;
    for (long v = 0; (int)out.size() < count; ++v) {
        Rational r(v);
        if (std::find(c.occupied.begin(), c.occupied.end(), r) == c.occupied.end()) out.push_back(r);
    }
    return out;
}

BiPoly curvette_equation(const ResolutionTree& tree, int component, const Rational& c) {
    const DivisorComponent& d = tree.components.at(component - 1);
    BiPoly local = BiPoly::y() - c * BiPoly::x();
    return push_down_curve(tree, tree.points.at(d.center).location, local);
}

} // namespace fol
