// The join-cover calculus: classification, enumeration and refinement of
// join-covers, plus the collinearity relation of modular lattices.
//
// For an element p and a finite set E, E is a join-cover of p when
// p <= \/E.  The classes form a chain
//     minimal  <=  tight  <=  irredundant  <=  cover,
// where irredundant means no member can be dropped, tight means no member
// can be replaced by anything strictly smaller, and minimal means every
// refining cover of p contains E.  Minimality is decided by the polynomial
// equivalence (tight and E contained in the join-irreducibles); the
// definitional test, which quantifies over all refining subsets, lives in
// the test suite as an oracle.  Trivial covers (p below a member) are
// admitted throughout.
#pragma once

#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

enum class CoverKind { none, cover, irredundant, tight, minimal };

struct Cover {
    int target = 0;
    ElemSet members;
    CoverKind kind = CoverKind::none;
    bool exact = false;  // join-representation: \/members == target
};

// X <=ref Y : every element of X lies below some element of Y.
inline bool refines(const Lattice& L, ElemSet X, ElemSet Y) {
    return X.subset_of(L.downset(Y));
}

inline bool is_join_cover(const Lattice& L, int p, ElemSet E) {
    return L.leq(p, L.join_of(E));
}

inline bool is_irredundant_cover(const Lattice& L, int p, ElemSet E) {
    if (!is_join_cover(L, p, E) || E.has(L.bottom())) return false;
    for (int u : E)
        if (L.leq(p, L.join_of(E.without(u)))) return false;
    return true;
}

inline bool is_tight_cover(const Lattice& L, int p, ElemSet E) {
    if (!is_join_cover(L, p, E) || E.has(L.bottom())) return false;
    for (int u : E) {
        int rest = L.join_of(E.without(u));
        // It suffices to test lower covers of u: coverage with any x < u
        // implies coverage with some lower cover above x.
        for (int x : L.lower_covers(u))
            if (L.leq(p, L.join(x, rest))) return false;
    }
    return true;
}

inline bool is_minimal_cover(const Lattice& L, int p, ElemSet E) {
    return is_tight_cover(L, p, E) && E.subset_of(L.join_irreducibles());
}

inline Cover classify_cover(const Lattice& L, int p, ElemSet E) {
    Cover c{p, E, CoverKind::none, false};
    if (!is_join_cover(L, p, E)) return c;
    c.kind = CoverKind::cover;
    c.exact = (L.join_of(E) == p);
    if (!is_irredundant_cover(L, p, E)) return c;
    c.kind = CoverKind::irredundant;
    if (!is_tight_cover(L, p, E)) return c;
    c.kind = E.subset_of(L.join_irreducibles()) ? CoverKind::minimal : CoverKind::tight;
    return c;
}

// All minimal join-covers of p.  Minimal covers are antichains of
// join-irreducibles, so scanning those with the tightness test is complete.
inline std::vector<ElemSet> minimal_join_covers(const Lattice& L, int p) {
    std::vector<ElemSet> out;
    if (p == L.bottom()) {
        out.push_back(ElemSet{});  // the empty join covers 0 minimally
        return out;
    }
    for_each_antichain(L, L.join_irreducibles(), [&](ElemSet E) {
        if (is_join_cover(L, p, E) && is_tight_cover(L, p, E)) out.push_back(E);
        return true;
    });
    return out;
}

inline std::vector<ElemSet> minimal_join_representations(const Lattice& L, int p) {
    std::vector<ElemSet> out;
    for (ElemSet E : minimal_join_covers(L, p))
        if (L.join_of(E) == p) out.push_back(E);
    return out;
}

// All irredundant join-covers of p (these are antichains of nonzero
// elements), and the tight ones.
inline std::vector<ElemSet> irredundant_covers(const Lattice& L, int p) {
    std::vector<ElemSet> out;
    if (p == L.bottom()) out.push_back(ElemSet{});
    ElemSet nonzero = L.universe().without(L.bottom());
    for_each_antichain(L, nonzero, [&](ElemSet E) {
        if (is_irredundant_cover(L, p, E)) out.push_back(E);
        return true;
    });
    return out;
}

inline std::vector<ElemSet> tight_covers(const Lattice& L, int p) {
    std::vector<ElemSet> out;
    if (p == L.bottom()) out.push_back(ElemSet{});
    ElemSet nonzero = L.universe().without(L.bottom());
    for_each_antichain(L, nonzero, [&](ElemSet E) {
        if (is_join_cover(L, p, E) && is_tight_cover(L, p, E)) out.push_back(E);
        return true;
    });
    return out;
}

namespace detail {
inline void require_cover(const Lattice& L, int p, ElemSet E) {
    if (!is_join_cover(L, p, E))
        throw NotACoverError("'" + L.label(p) + "' is not covered by the given set");
}
}  // namespace detail

// Descends from E to a tight cover of p refining E.  One step replaces a
// member u by a strictly smaller element that keeps coverage; restricting
// replacements to lower covers of u reaches the same fixpoints through a
// chain of covers.  Tie-break: lowest-index member first, then lowest-index
// replacement.  Zeros are dropped and duplicates absorb.
inline ElemSet refine_to_tight(const Lattice& L, int p, ElemSet E) {
    detail::require_cover(L, p, E);
    ElemSet cur = E.without(L.bottom());
    bool moved = true;
    while (moved) {
        moved = false;
        for (int u : cur) {
            int rest = L.join_of(cur.without(u));
            for (int x : L.lower_covers(u)) {
                if (!L.leq(p, L.join(x, rest))) continue;
                cur = cur.without(u);
                if (x != L.bottom()) cur.add(x);
                moved = true;
                break;
            }
            if (moved) break;
        }
    }
    return cur;
}

// Refines E to a minimal join-cover of p: tighten, then split the
// lowest-index non-join-irreducible member into the lowest-index pair of
// strictly smaller elements joining to it, and re-tighten, until all
// members are join-irreducible.  Each step strictly descends, so the loop
// terminates; a visited set guards against regressions.
inline ElemSet refine_to_minimal(const Lattice& L, int p, ElemSet E) {
    detail::require_cover(L, p, E);
    ElemSet cur = refine_to_tight(L, p, E);
    std::vector<ElemSet> visited{cur};
    for (;;) {
        int q = -1;
        for (int u : cur)
            if (!L.join_irreducibles().has(u)) { q = u; break; }
        if (q < 0) break;
        ElemSet base = cur.without(q);
        ElemSet split;
        for (int a = 0; a < L.size() && split.empty(); ++a) {
            if (!L.lt(a, q)) continue;
            for (int b = a + 1; b < L.size(); ++b)
                if (L.lt(b, q) && L.join(a, b) == q) {
                    split = ElemSet::of({a, b});
                    break;
                }
        }
        cur = refine_to_tight(L, p, base | split);
        for (const ElemSet& past : visited)
            if (past == cur) throw Error("refine_to_minimal revisited a cover");
        visited.push_back(cur);
    }
    return cur;
}

// col(p,q,r): p, q, r pairwise incomparable join-irreducibles with
// p|q = p|r = q|r.
inline bool collinear(const Lattice& L, int p, int q, int r) {
    for (int x : {p, q, r})
        if (!L.join_irreducibles().has(x)) throw NotJoinIrreducibleError(L.label(x));
    if (L.leq(p, q) || L.leq(q, p) || L.leq(p, r) || L.leq(r, p) || L.leq(q, r) || L.leq(r, q))
        return false;
    return L.join(p, q) == L.join(p, r) && L.join(p, r) == L.join(q, r);
}

}  // namespace latkit
