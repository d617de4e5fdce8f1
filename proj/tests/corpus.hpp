#ifndef FOLIATION_TEST_CORPUS_HPP
#define FOLIATION_TEST_CORPUS_HPP

#include "foliation/resolution.hpp"

#include <optional>
#include <string>
#include <vector>

namespace corpus {

struct Germ {
    std::string name;
    fol::OneForm form;
    bool dicritical = false;
    std::optional<std::string> balanced;  // equation of the balanced divisor, when it is a curve
};

inline Germ form(std::string name, const std::string& P, const std::string& Q, bool dicritical = false,
                 std::optional<std::string> balanced = std::nullopt) {
    return {std::move(name), fol::make_form(P, Q), dicritical, std::move(balanced)};
}

inline Germ hamiltonian(const std::string& H) {
    fol::BiPoly h = fol::parse_bipoly(H);
    return {"d(" + H + ")", fol::OneForm{h.dx(), h.dy()}, false, H};
}

inline const std::vector<Germ>& germs() {
    static const std::vector<Germ> all = [] {
        std::vector<Germ> g;
        g.push_back(form("cnd, not second type", "(x*y+x^2*y-x^2-y^2)*y", "-(x-1)*x^3", true, "x*y*(y-x)"));
        g.push_back(form("corner saddle-node", "y", "-(2*x+y^2)", false, "y"));
        g.push_back(form("tangent saddle-node", "y", "y-x", false, "y"));
        g.push_back(hamiltonian("y^2+x^3"));
        // hamiltonians of products of branches
        for (const char* H : {"x*y", "y*(y-x^2)", "x*y*(x+y)", "x*y*(x-y)*(x+y)", "x*(y^2-x^3)", "(y-x^2)*(y+x^2)",
                              "y*(y-x^2)*(y-2*x^2)", "x*(y-x)*(y^2-x^3)", "y*(x^2+y^2)", "(y^2-x^3)*(y^2-2*x^3)",
                              "(y^2-x^5)*x", "(x^2-y^3)*(y^2-x^3)", "y^2-x^5"})
            g.push_back(hamiltonian(H));
        // linear generalized curves
        g.push_back(form("saddle -2/3", "2*y", "3*x", false, "x*y"));
        g.push_back(form("resonant node 3/2", "-2*y", "3*x", true));
        g.push_back(form("saddle 1:-2", "2*y", "x", false, "x*y"));
        g.push_back(form("x dy + y dx", "y", "x", false, "x*y"));
        g.push_back(form("rotation", "x", "y", false, "x^2+y^2"));
        // dicritical
        g.push_back(form("radial", "-y", "x", true));
        g.push_back(form("y = c x^2", "2*y", "-x", true));
        g.push_back(form("y^2 = c x^3", "3*y", "-2*x", true));
        g.push_back(form("radial + cubic", "-y+x^3", "x", true));
        // saddle-node normal forms x^k dy - y(1 + lambda x^(k-1)) dx
        g.push_back(form("sn k=2 l=0", "-y", "x^2", false, "x*y"));
        g.push_back(form("sn k=3 l=1", "-y*(1+x^2)", "x^3", false, "x*y"));
        g.push_back(form("sn k=4 l=-2", "-y*(1-2*x^3)", "x^4", false, "x*y"));
        g.push_back(form("sn k=2 l=1/2 swapped", "y^2", "-x*(1+1/2*y)", false, "x*y"));
        // low-degree perturbations
        g.push_back(form("cusp + h.o.t.", "3*x^2+2*x*y^2-y^3", "2*y+x^3-5*x^2*y"));
        g.push_back(form("saddle + h.o.t.", "2*y+x^2-3*x*y^2", "3*x+y^3+4*x^2*y"));
        g.push_back(form("corner sn + h.o.t.", "y+3*x^2*y", "-(2*x+y^2)+x^3", false, "y"));
        g.push_back(form("tangent sn + h.o.t.", "y+x^3", "y-x+2*x*y^2"));
        g.push_back(form("xy + h.o.t.", "y+x^2*y-2*y^3", "x+3*x^3", false, "x*y"));
        g.push_back(form("three lines + h.o.t.", "2*x*y+y^2+x^3*y", "x^2+2*x*y-x^4+y^4"));
        return g;
    }();
    return all;
}

struct CurvePair {
    std::string form_P, form_Q, C, D;
};

inline const std::vector<CurvePair>& noether_pairs() {
    static const std::vector<CurvePair> all{
        {"3*x^2", "2*y", "y^2+x^3", "y"},      {"3*x^2", "2*y", "x", "y"},          {"3*x^2", "2*y", "y-x^2", "y"},
        {"y", "x", "y-x^2", "y+x^2"},          {"y", "x", "y^2-x^3", "y-x"},        {"y", "x", "y^2-x^3", "x"},
        {"-y", "x", "x^2-y^3", "y"},           {"-y", "x", "y-x^3", "y-x^2"},       {"-y", "x", "x+y", "x-y"},
        {"2*y", "3*x", "y^2-x^3", "y^2-2*x^3"}, {"2*y", "3*x", "x*y", "x+y"},       {"y", "y-x", "y*(y-x)", "x"},
        {"-y", "x^2", "y^2-x^5", "y-x^2"},
    };
    return all;
}

} // namespace corpus

#endif
