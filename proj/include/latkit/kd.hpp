// The K(D) construction over a nontrivial bounded distributive lattice D:
// the ambient product L(D) = 2 x D x 2 x 2, the closure map gamma, the
// closure system K(D) it carves out, and the named elements and witnesses
// used by the join-semidistributivity and congruence results.
//
// Membership in K(D) requires, for all positions i < j < k in {0,1,2,3},
// that x_i^- /\ x_k^- <= x_j, where x^- collapses every non-top element to
// bottom.  Coordinates 0, 2, 3 live in the two-element lattice, where x^- is
// the identity; the uniform top-test implementation below covers all four
// coordinates without special cases.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "latkit/congruence.hpp"
#include "latkit/identities.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

// A point of L(D): coordinates 0, 2, 3 in {0,1}, coordinate 1 an element
// index of D.
struct Quad {
    int c0 = 0, c1 = 0, c2 = 0, c3 = 0;
    friend bool operator==(const Quad&, const Quad&) = default;
};

inline void require_bounded_distributive(const Lattice& D) {
    if (D.size() < 2) throw InputError("the parameter lattice must be nontrivial");
    if (!is_distributive(D).valid)
        throw InputError("the parameter lattice '" + D.name() + "' is not distributive");
}

namespace detail {

// x^- is top when x is top and bottom otherwise; on a quad only the pattern
// of full coordinates matters.
inline std::array<bool, 4> full_pattern(const Lattice& D, const Quad& x) {
    return {x.c0 == 1, x.c1 == D.top(), x.c2 == 1, x.c3 == 1};
}

inline std::string quad_label(const Lattice& D, const Quad& x) {
    return "(" + std::to_string(x.c0) + "," + D.label(x.c1) + "," + std::to_string(x.c2) + "," +
           std::to_string(x.c3) + ")";
}

inline bool quad_leq(const Lattice& D, const Quad& a, const Quad& b) {
    return a.c0 <= b.c0 && D.leq(a.c1, b.c1) && a.c2 <= b.c2 && a.c3 <= b.c3;
}

}  // namespace detail

inline bool in_KD(const Lattice& D, const Quad& x) {
    auto full = detail::full_pattern(D, x);
    const int coord[4] = {x.c0, x.c1, x.c2, x.c3};
    const int top[4] = {1, D.top(), 1, 1};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                if (full[i] && full[k] && coord[j] != top[j]) return false;
    return true;
}

// Componentwise join in L(D).
inline Quad quad_join(const Lattice& D, const Quad& a, const Quad& b) {
    return {a.c0 | b.c0, D.join(a.c1, b.c1), a.c2 | b.c2, a.c3 | b.c3};
}

inline Quad quad_meet(const Lattice& D, const Quad& a, const Quad& b) {
    return {a.c0 & b.c0, D.meet(a.c1, b.c1), a.c2 & b.c2, a.c3 & b.c3};
}

// gamma(x)_j = x_j \/ OR { x_i^- /\ x_k^- : i < j < k }; the least element
// of K(D) above x.
inline Quad gamma(const Lattice& D, const Quad& x) {
    auto full = detail::full_pattern(D, x);
    Quad y = x;
    int* coord[4] = {&y.c0, &y.c1, &y.c2, &y.c3};
    const int top[4] = {1, D.top(), 1, 1};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < j; ++i)
            for (int k = j + 1; k < 4; ++k)
                if (full[i] && full[k]) *coord[j] = top[j];
    return y;
}

// A lattice whose elements are quads over a parameter D, with the named
// elements q0..q3 (single full coordinate) and x*q1 = (0,x,0,0).
struct QuadLattice {
    Lattice D;
    Lattice L;
    std::vector<Quad> quads;  // per element index of L

    const Quad& quad(int i) const { return quads[i]; }
    int index_of(const Quad& q) const {
        for (std::size_t i = 0; i < quads.size(); ++i)
            if (quads[i] == q) return static_cast<int>(i);
        throw InputError("quad is not an element of this lattice");
    }
    int q(int i) const {
        Quad v{0, D.bottom(), 0, 0};
        if (i == 0) v.c0 = 1;
        else if (i == 1) v.c1 = D.top();
        else if (i == 2) v.c2 = 1;
        else if (i == 3) v.c3 = 1;
        else throw InputError("q index must be 0..3");
        return index_of(v);
    }
    int xq1(int x) const { return index_of(Quad{0, x, 0, 0}); }
    int zero() const { return L.bottom(); }
};

namespace detail {

inline QuadLattice build_quad_lattice(const Lattice& D, bool restrict_to_KD, std::string name) {
    require_bounded_distributive(D);
    std::vector<Quad> quads;
    for (int c0 = 0; c0 < 2; ++c0)
        for (int c1 = 0; c1 < D.size(); ++c1)
            for (int c2 = 0; c2 < 2; ++c2)
                for (int c3 = 0; c3 < 2; ++c3) {
                    Quad q{c0, c1, c2, c3};
                    if (!restrict_to_KD || in_KD(D, q)) quads.push_back(q);
                }
    const int n = static_cast<int>(quads.size());
    if (n > kMaxElements)
        throw SizeGuardError("the construction would exceed 64 elements");
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const Quad& q : quads) labels.push_back(quad_label(D, q));
    std::vector<ElemSet> down(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (quad_leq(D, quads[i], quads[j])) down[j].add(i);
    QuadLattice out{D, Lattice::from_leq(std::move(name), std::move(labels), std::move(down)),
                    std::move(quads)};
    return out;
}

}  // namespace detail

// L(D) = 2 x D x 2 x 2 with componentwise order.
inline QuadLattice build_LD(const Lattice& D) {
    return detail::build_quad_lattice(D, false, "L(" + D.name() + ")");
}

// K(D): the quads satisfying the membership constraint.  A closure system
// in L(D): meets are componentwise, joins are gamma of the componentwise
// join (which from_leq recomputes as least upper bounds).
inline QuadLattice build_KD(const Lattice& D) {
    return detail::build_quad_lattice(D, true, "K(" + D.name() + ")");
}

// ---------------------------------------------------------------------------
// Boolean helpers and the SD-join witnesses

inline int complement_of(const Lattice& L, int x) {
    for (int y = 0; y < L.size(); ++y)
        if (L.meet(x, y) == L.bottom() && L.join(x, y) == L.top()) return y;
    return -1;
}

inline bool is_boolean(const Lattice& L) {
    if (!is_distributive(L).valid) return false;
    for (int x = 0; x < L.size(); ++x)
        if (complement_of(L, x) < 0) return false;
    return true;
}

// The canonical triple violating SD_or^2 in K(B): x = (1,a,0,0),
// y = (0,b,0,1), z = (0,a,1,0) for the first complementary pair (a,b) of
// elements outside {0,1}.  Returns element indices of K.L.
inline std::array<int, 3> sdj2_witness(const QuadLattice& K) {
    const Lattice& B = K.D;
    if (!is_boolean(B)) throw NotBooleanError("the parameter lattice is not Boolean");
    int a = -1, b = -1;
    for (int x = 0; x < B.size() && a < 0; ++x) {
        if (x == B.bottom() || x == B.top()) continue;
        int y = complement_of(B, x);
        if (y >= 0 && y != B.bottom() && y != B.top()) { a = x; b = y; }
    }
    if (a < 0)
        throw NoComplementaryPairError(
            "no complementary pair of nontrivial elements (the parameter needs at least 4 "
            "elements)");
    return {K.index_of(Quad{1, a, 0, 0}), K.index_of(Quad{0, b, 0, 1}),
            K.index_of(Quad{0, a, 1, 0})};
}

// ---------------------------------------------------------------------------
// Principal-ideal distributivity profile

// The principal ideal below an element, as a standalone lattice.
inline Lattice principal_ideal(const Lattice& L, int a) {
    std::vector<int> elems;
    for (int x : L.down(a)) elems.push_back(x);
    const int m = static_cast<int>(elems.size());
    std::vector<std::string> labels;
    for (int x : elems) labels.push_back(L.label(x));
    std::vector<ElemSet> down(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (L.leq(elems[i], elems[j])) down[j].add(i);
    return Lattice::from_leq(L.name() + "|" + L.label(a), std::move(labels), std::move(down));
}

// All elements of K(D) whose principal ideal is not distributive.  These
// can only be (1,1,1,0), (0,1,1,1) or (1,1,1,1).
inline std::vector<Quad> principal_ideal_distributivity_profile(const QuadLattice& K) {
    std::vector<Quad> out;
    for (int i = 0; i < K.L.size(); ++i)
        if (!is_distributive(principal_ideal(K.L, i)).valid) out.push_back(K.quads[i]);
    return out;
}

}  // namespace latkit
