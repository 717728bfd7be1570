// The seed hierarchy (pre-seed, quasi-seed, seed, strong spatiality), the
// projection homomorphism criterion, and relative term evaluation on
// sub-join-semilattices.
//
// A subset S of L is a pre-seed when every join-cover of every p in S can be
// refined by a join-cover of p drawn from S; a quasi-seed is a join-dense
// pre-seed inside J(L); a seed additionally refines through *minimal*
// join-covers drawn from S.  L is strongly spatial when J(L) is a seed (in a
// finite lattice the points are exactly the join-irreducibles).
//
// Coverage and refinement depend on a cover X only through its down-set, so
// every quantification over join-covers below is reduced to nonempty
// antichains of nonzero elements.
//
// In the finite setting the ideal lattices collapse (Id L and L are
// isomorphic via principal ideals, and likewise Id S^v and span(S)), so the
// Galois pair (extension, projection) is realized directly by the inclusion
// of span(S) and the map proj: a |-> largest element of span(S) below a.  No
// separate ideal type exists for this reason.
#pragma once

#include <vector>

#include "latkit/covers.hpp"
#include "latkit/terms.hpp"

namespace latkit {

// The sub-join-semilattice generated by a subset: 0 plus all finite joins.
// Carries the ambient lattice by pointer; keep the ambient value alive.
class SubJoinSemilattice {
public:
    SubJoinSemilattice(const Lattice& L, ElemSet sigma) : L_(&L) {
        carrier_ = ElemSet::single(L.bottom());
        for (int x : sigma) carrier_.add(x);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x : carrier_)
                for (int y : carrier_) {
                    int j = L.join(x, y);
                    if (!carrier_.has(j)) { carrier_.add(j); changed = true; }
                }
        }
        proj_.resize(L.size());
        for (int a = 0; a < L.size(); ++a) proj_[a] = L.join_of(carrier_ & L.down(a));
    }

    const Lattice& ambient() const { return *L_; }
    ElemSet carrier() const { return carrier_; }

    // Largest carrier element below a (total: the carrier is join-closed
    // and contains 0).
    int proj(int a) const { return proj_[a]; }

    // Relative meet: largest carrier element below both (the meet of the
    // lattice on the carrier; generally above-approximated by no ambient
    // element other than meet(x, y) itself, which may lie outside).
    int rel_meet(int x, int y) const {
        return L_->join_of(carrier_ & L_->down(x) & L_->down(y));
    }

    int rel_join(int x, int y) const { return L_->join(x, y); }  // carrier is join-closed

    // Interpretation of a term in the carrier lattice: arguments are
    // projected into the carrier first.
    int eval_relative(const Term& t, const Assignment& a) const {
        switch (t.kind()) {
            case Term::Kind::var: {
                auto it = a.find(t.var_name());
                if (it == a.end()) throw UnboundVariableError(t.var_name());
                return proj(it->second);
            }
            case Term::Kind::meet:
                return rel_meet(eval_relative(t.left(), a), eval_relative(t.right(), a));
            case Term::Kind::join:
                return rel_join(eval_relative(t.left(), a), eval_relative(t.right(), a));
        }
        return 0;
    }

    // The carrier as a standalone Lattice (re-indexed in increasing ambient
    // order, ambient labels kept), so every lattice-wide decision procedure
    // applies to it unchanged.
    Lattice export_lattice(std::vector<int>* carrier_elems = nullptr) const {
        std::vector<int> elems;
        for (int x : carrier_) elems.push_back(x);
        std::vector<std::string> labels;
        for (int x : elems) labels.push_back(L_->label(x));
        const int m = static_cast<int>(elems.size());
        std::vector<ElemSet> down(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (L_->leq(elems[i], elems[j])) down[j].add(i);
        if (carrier_elems) *carrier_elems = elems;
        return Lattice::from_leq("span(" + L_->name() + ")", std::move(labels), std::move(down));
    }

private:
    const Lattice* L_;
    ElemSet carrier_;
    std::vector<int> proj_;
};

inline SubJoinSemilattice span(const Lattice& L, ElemSet sigma) {
    return SubJoinSemilattice(L, sigma);
}

// ---------------------------------------------------------------------------
// Join density

struct DensityVerdict {
    bool holds = true;
    int witness = -1;  // an element that is not a join from the subset
};

inline DensityVerdict is_join_dense(const Lattice& L, ElemSet sigma) {
    for (int a = 0; a < L.size(); ++a)
        if (L.join_of(sigma & L.down(a)) != a) return {false, a};
    return {};
}

// ---------------------------------------------------------------------------
// Seed hierarchy

struct SeedVerdict {
    bool holds = true;
    int p = -1;      // element of sigma whose cover cannot be refined
    ElemSet cover;   // the offending join-cover
    std::string reason;
};

namespace detail {

// Runs `refinable(p, X)` over all p in sigma and all antichain join-covers
// X of p; stops at the first failure.
template <typename Fn>
SeedVerdict check_cover_refinement(const Lattice& L, ElemSet sigma, Fn&& refinable) {
    SeedVerdict out;
    ElemSet nonzero = L.universe().without(L.bottom());
    for (int p : sigma) {
        bool ok = for_each_antichain(L, nonzero, [&](ElemSet X) {
            if (!L.leq(p, L.join_of(X))) return true;
            if (!refinable(p, X)) {
                out = {false, p, X, "join-cover admits no refinement from the subset"};
                return false;
            }
            return true;
        });
        if (!ok) break;
    }
    return out;
}

}  // namespace detail

inline SeedVerdict is_pre_seed(const Lattice& L, ElemSet sigma) {
    return detail::check_cover_refinement(L, sigma, [&](int p, ElemSet X) {
        // The largest candidate refinement from sigma is sigma restricted to
        // the down-set of X; it works iff any refinement from sigma works.
        return L.leq(p, L.join_of(sigma & L.downset(X)));
    });
}

inline SeedVerdict is_quasi_seed(const Lattice& L, ElemSet sigma) {
    if (!sigma.subset_of(L.join_irreducibles()))
        return {false, (sigma - L.join_irreducibles()).min(), ElemSet{},
                "subset is not contained in the join-irreducibles"};
    if (auto d = is_join_dense(L, sigma); !d.holds)
        return {false, d.witness, ElemSet{}, "subset is not join-dense"};
    return is_pre_seed(L, sigma);
}

inline SeedVerdict is_seed(const Lattice& L, ElemSet sigma) {
    if (!sigma.subset_of(L.join_irreducibles()))
        return {false, (sigma - L.join_irreducibles()).min(), ElemSet{},
                "subset is not contained in the join-irreducibles"};
    if (auto d = is_join_dense(L, sigma); !d.holds)
        return {false, d.witness, ElemSet{}, "subset is not join-dense"};
    // Precompute the minimal join-covers of each member.
    std::vector<std::vector<ElemSet>> mcovs(L.size());
    for (int p : sigma) mcovs[p] = minimal_join_covers(L, p);
    return detail::check_cover_refinement(L, sigma, [&](int p, ElemSet X) {
        ElemSet dx = L.downset(X);
        for (const ElemSet& I : mcovs[p])
            if (I.subset_of(sigma) && I.subset_of(dx)) return true;
        return false;
    });
}

// A finite lattice is strongly spatial when its join-irreducibles form a
// seed.
inline SeedVerdict is_strongly_spatial(const Lattice& L) {
    return is_seed(L, L.join_irreducibles());
}

// ---------------------------------------------------------------------------
// Projection homomorphism criterion

struct GaloisVerdict {
    bool holds = true;
    int a = -1, b = -1;
    bool join_law = true;  // which law failed: join preservation or meet preservation
};

// sigma is a pre-seed iff proj onto span(sigma) is a lattice homomorphism,
// i.e. preserves joins (into ambient joins, which the carrier realizes) and
// meets (into the carrier's relative meet).
inline GaloisVerdict galois_pi_is_homomorphism(const Lattice& L, ElemSet sigma) {
    SubJoinSemilattice S = span(L, sigma);
    for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b) {
            if (S.proj(L.join(a, b)) != S.rel_join(S.proj(a), S.proj(b)))
                return {false, a, b, true};
            if (S.proj(L.meet(a, b)) != S.rel_meet(S.proj(a), S.proj(b)))
                return {false, a, b, false};
        }
    return {};
}

}  // namespace latkit
