// Test-only oracles: independent brute-force routes for the values the
// library computes by smarter means.  Everything here quantifies over raw
// subset masks or partitions and avoids the library's enumeration helpers.
#pragma once

#include <optional>
#include <vector>

#include "latkit/lattice.hpp"

namespace oracle {

using latkit::ElemSet;
using latkit::Lattice;

inline ElemSet from_mask(std::uint64_t mask) { return ElemSet{mask}; }

// ---- covers ---------------------------------------------------------------

inline bool covers_def(const Lattice& L, int p, ElemSet E) { return L.leq(p, L.join_of(E)); }

inline bool irredundant_def(const Lattice& L, int p, ElemSet E) {
    if (!covers_def(L, p, E)) return false;
    if (E.has(L.bottom())) return false;
    for (int u : E)
        if (covers_def(L, p, E.without(u))) return false;
    return true;
}

inline bool tight_def(const Lattice& L, int p, ElemSet E) {
    if (!covers_def(L, p, E) || E.has(L.bottom())) return false;
    for (int u : E)
        for (int x = 0; x < L.size(); ++x)
            if (L.lt(x, u) && L.leq(p, L.join(x, L.join_of(E.without(u))))) return false;
    return true;
}

// Definitional minimality: every refining cover contains E.
inline bool minimal_def(const Lattice& L, int p, ElemSet E) {
    if (!covers_def(L, p, E)) return false;
    const std::uint64_t all = std::uint64_t{1} << L.size();
    ElemSet de = L.downset(E);
    for (std::uint64_t mask = 0; mask < all; ++mask) {
        ElemSet X = from_mask(mask);
        if (!X.subset_of(de)) continue;  // X <=ref E means X inside the down-set of E
        if (covers_def(L, p, X) && !E.subset_of(X)) return false;
    }
    return true;
}

// All irredundant covers by raw subset scan.
inline std::vector<ElemSet> icov_def(const Lattice& L, int p) {
    std::vector<ElemSet> out;
    const std::uint64_t all = std::uint64_t{1} << L.size();
    for (std::uint64_t mask = 0; mask < all; ++mask)
        if (irredundant_def(L, p, from_mask(mask))) out.push_back(from_mask(mask));
    return out;
}

// Minimal covers as the refinement-minimal irredundant covers.
inline std::vector<ElemSet> mcov_def(const Lattice& L, int p) {
    auto ic = icov_def(L, p);
    std::vector<ElemSet> out;
    for (ElemSet E : ic) {
        bool minimal = true;
        for (ElemSet F : ic)
            if (F != E && F.subset_of(L.downset(E))) { minimal = false; break; }
        if (minimal) out.push_back(E);
    }
    return out;
}

// ---- identities by raw loops ----------------------------------------------

inline bool distributive_def(const Lattice& L) {
    for (int x = 0; x < L.size(); ++x)
        for (int y = 0; y < L.size(); ++y)
            for (int z = 0; z < L.size(); ++z)
                if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return false;
    return true;
}

inline bool two_distributive_def(const Lattice& L) {
    for (int x = 0; x < L.size(); ++x)
        for (int y0 = 0; y0 < L.size(); ++y0)
            for (int y1 = 0; y1 < L.size(); ++y1)
                for (int y2 = 0; y2 < L.size(); ++y2) {
                    const int lhs = L.meet(x, L.join(L.join(y0, y1), y2));
                    const int rhs = L.join(
                        L.join(L.meet(x, L.join(y1, y2)), L.meet(x, L.join(y0, y2))),
                        L.meet(x, L.join(y0, y1)));
                    if (lhs != rhs) return false;
                }
    return true;
}

inline bool modular_def(const Lattice& L) {
    // x <= b implies x | (a & b) = (x | a) & b
    for (int x = 0; x < L.size(); ++x)
        for (int a = 0; a < L.size(); ++a)
            for (int b = 0; b < L.size(); ++b) {
                if (!L.leq(x, b)) continue;
                if (L.join(x, L.meet(a, b)) != L.meet(L.join(x, a), b)) return false;
            }
    return true;
}

// ---- congruences -----------------------------------------------------------

inline bool compatible_partition(const Lattice& L, const std::vector<int>& block_of) {
    for (int x = 0; x < L.size(); ++x)
        for (int y = 0; y < L.size(); ++y) {
            if (block_of[x] != block_of[y]) continue;
            for (int z = 0; z < L.size(); ++z) {
                if (block_of[L.join(x, z)] != block_of[L.join(y, z)]) return false;
                if (block_of[L.meet(x, z)] != block_of[L.meet(y, z)]) return false;
            }
        }
    return true;
}

// Every compatible partition, generated by restricted growth strings.
inline std::vector<std::vector<int>> all_congruence_partitions(const Lattice& L) {
    std::vector<std::vector<int>> out;
    std::vector<int> rgs(L.size(), 0);
    auto rec = [&](auto&& self, int i, int maxb) -> void {
        if (i == L.size()) {
            if (compatible_partition(L, rgs)) out.push_back(rgs);
            return;
        }
        for (int b = 0; b <= maxb + 1; ++b) {
            rgs[i] = b;
            self(self, i + 1, std::max(maxb, b));
        }
    };
    rec(rec, 0, -1);
    return out;
}

// ---- misc -------------------------------------------------------------------

// Join-density via the two-element criterion: for all a !<= b some x in
// sigma has x <= a, x !<= b.
inline bool join_dense_two_elem(const Lattice& L, ElemSet sigma) {
    for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b) {
            if (L.leq(a, b)) continue;
            bool found = false;
            for (int x : sigma)
                if (L.leq(x, a) && !L.leq(x, b)) { found = true; break; }
            if (!found) return false;
        }
    return true;
}

}  // namespace oracle
