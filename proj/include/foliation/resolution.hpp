#ifndef FOLIATION_RESOLUTION_HPP
#define FOLIATION_RESOLUTION_HPP

#include "foliation/algebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fol {

template <class K>
struct OneFormT {
    BiPolyT<K> P;
    BiPolyT<K> Q;
    int order() const;  // min order of P, Q; -1 if both zero
    bool singular_at_origin() const { return is_zero(P.coeff(0, 0)) && is_zero(Q.coeff(0, 0)); }
};
using OneForm = OneFormT<Rational>;

OneForm make_form(const std::string& P, const std::string& Q);
std::string to_string(const OneForm& w);

enum class Chart { XT = 1, SY = 2 };

struct BlowUpResult {
    OneForm pulled_back;
    int stripped_power = 0;
    bool invariant_flag = true;
};

// Pulls back by (x, t x) or (s y, y) and strips the exceptional factor.
// Regular centers are refused unless allow_regular is set (tangency and curve centers).
BlowUpResult blow_up(const OneForm& germ, Chart which, bool allow_regular = false);

// A plane direction (a, b).
template <class K>
struct Direction {
    K a, b;
    bool parallel(const Direction& o) const { return is_zero(a * o.b - b * o.a); }
};

enum class LocalKind { NonReduced, NonDegenerate, SaddleNode };

// Linear part of the dual vector field v = (-Q, P) at the origin.
template <class K>
struct LinearPart {
    K m11, m12, m21, m22;
    K trace() const { return m11 + m22; }
    K det() const { return m11 * m22 - m12 * m21; }
};

template <class K>
struct Classification {
    LocalKind kind = LocalKind::NonReduced;
    LinearPart<K> linear;
    std::optional<Rational> resonance;  // positive rational eigenvalue ratio, when found
};

template <class K>
LinearPart<K> linear_part(const OneFormT<K>& w);

template <class K>
Classification<K> classify_singularity(const OneFormT<K>& local);

template <class K>
struct SaddleNodeData {
    int k = 0;
    K lambda = K(0);
    Direction<K> strong, weak;
    bool tangent = false;
    bool corner = false;
};

// divisor_directions: tangent directions of the exceptional components through the point
template <class K>
SaddleNodeData<K> saddle_node_profile(const OneFormT<K>& local, const std::vector<Direction<K>>& divisor_directions);

// Coordinates (X, Y) with (x, y) = X*weak + Y*strong; the weak branch is tangent to Y = 0.
template <class K>
OneFormT<K> saddle_node_adapted(const OneFormT<K>& local);

// Jet of the weak branch Y = phi(X) of an adapted saddle-node form, modulo X^(order+1).
template <class K>
SeriesT<K> weak_separatrix_jet(const OneFormT<K>& adapted, int k, int order);

template <class K>
struct Branch {
    enum class Type { YZero, XZero, Graph } type = Type::YZero;
    SeriesT<K> graph;  // y = graph(x) for Type::Graph
};

// Camacho-Sad index along a smooth branch by the residue of the normalized form.
template <class K>
K cs_index_local(const OneFormT<K>& local, const Branch<K>& branch);

// CS index of a saddle-node along its weak branch, truncation doubled until stable.
template <class K>
K saddle_node_lambda(const OneFormT<K>& local, int k);

struct HostAxis {
    int component = 0;  // 1-based
    char axis = 'x';    // component is {axis = 0} in local coordinates
};

struct PointLocation {
    int parent = -1;  // center whose blow-up produced the point
    int chart = 0;    // 1 = (x, t x), 2 = (s y, y)
    bool orbit = false;
    Rational coordinate = 0;  // t in chart 1
    UPoly minimal_polynomial;  // for orbits
    std::vector<HostAxis> hosts;
    int orbit_size() const { return orbit ? minimal_polynomial.degree() : 1; }
    bool on(int component) const;
    std::string describe() const;
};

struct InfinitelyNearPoint {
    int index = 0;
    PointLocation location;
    OneForm local_form;
    std::vector<BiPoly> local_curves;
    int multiplicity = 0;
    bool regular_center = false;
};

struct DivisorComponent {
    int index = 0;
    bool invariant = true;
    int recorded_discrepancy = 0;
    int self_intersection = -1;
    int center = 0;
    // special points seen on the component when it was created, in its chart-1 coordinate
    std::vector<Rational> occupied;
    std::vector<UPoly> occupied_orbits;
    bool infinity_occupied = false;
};

enum class ReducedKind { NonDegenerate, SaddleNode };

struct SingularityRecord {
    PointLocation location;
    ReducedKind kind = ReducedKind::NonDegenerate;
    int milnor = 1;  // per point of the orbit
    std::string trace, det;  // exact, per point
    // saddle-node data
    int k = 0;
    std::string lambda;
    bool tangent = false;
    bool corner = false;
    int weak_component = 0;    // component containing the weak branch, 0 if none
    int strong_component = 0;
    // sums over the Galois orbit
    Rational lambda_total = 0;
    std::map<int, Rational> cs_along;  // component -> sum of CS_p(F, E_i)
    Rational cs_isolated_total = 0;    // along the separatrix off the divisor (non-corner points)
    Rational bb_total = 0;

    int orbit_size() const { return location.orbit_size(); }
    bool non_corner() const { return location.hosts.size() == 1; }
    bool saddle_node() const { return kind == ReducedKind::SaddleNode; }
};

struct CurveAttachment {
    int curve = 0;
    PointLocation location;
    int component = 0;
    int singularity = -1;  // index into singularities, -1 at a regular point
    bool invariant = false;
    int orbit_size() const { return location.orbit_size(); }
};

struct ResolutionTree {
    OneForm original_form;
    std::vector<BiPoly> curves;
    std::vector<InfinitelyNearPoint> points;
    std::vector<DivisorComponent> components;
    std::vector<SingularityRecord> singularities;
    std::vector<CurveAttachment> attachments;
    std::vector<std::pair<int, int>> adjacency;  // pairs i < j of meeting components
    std::vector<std::string> notes;

    int n() const { return static_cast<int>(components.size()); }
    bool adjacent(int i, int j) const;
    int valence(int i) const;
};

// Reduces the foliation and, when curves are given, also separates their strict transforms.
ResolutionTree reduce_singularities(const OneForm& w, int max_blowups = 64, const std::vector<BiPoly>& curves = {});

// Pushes a curve given in the local chart coordinates of a point down to the original coordinates.
BiPoly push_down_curve(const ResolutionTree& tree, const PointLocation& where, const BiPoly& local_curve);

// Curvette coordinates on a dicritical component: the smallest free rational values, in order.
std::vector<Rational> free_coordinates(const DivisorComponent& c, int count);

// Original-coordinate equation of the curvette {t = c} on a component.
BiPoly curvette_equation(const ResolutionTree& tree, int component, const Rational& c);

} // namespace fol

#endif
