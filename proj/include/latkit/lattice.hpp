// Finite lattices: representation, validation, construction combinators, and
// basic order-theoretic queries.
//
// A Lattice is an immutable value: elements are dense indices 0..n-1 (labels
// are kept for I/O only), the order is cached as per-element up/down bitset
// rows, and total join/meet tables are computed and validated on
// construction.  Everything infinite-lattice-flavoured collapses here: a
// finite lattice is complete, every element is compact, the points coincide
// with the join-irreducible elements, and ideals/filters reproduce the
// lattice itself, so none of those get a separate type.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latkit/elem_set.hpp"
#include "latkit/errors.hpp"

namespace latkit {

inline constexpr int kMaxElements = 64;

class Lattice {
public:
    // Builds a lattice from its Hasse diagram.  Cover pairs must be exactly
    // the cover relation: transitively implied or duplicate edges are
    // rejected (NonCoverEdgeError) so malformed files surface early.
    static Lattice from_covers(std::string name, std::vector<std::string> labels,
                               const std::vector<std::pair<std::string, std::string>>& covers);
    static Lattice from_cover_indices(std::string name, std::vector<std::string> labels,
                                      const std::vector<std::pair<int, int>>& covers);

    // Builds a lattice from a full order relation given as down-set rows
    // (down[x] = set of y with y <= x).  Validates poset axioms and the
    // existence of all pairwise joins and meets.
    static Lattice from_leq(std::string name, std::vector<std::string> labels,
                            std::vector<ElemSet> down);

    int size() const { return n_; }
    const std::string& name() const { return name_; }
    const std::string& label(int x) const { return labels_[x]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Index of the element with the given label; throws InputError if absent.
    int index_of(const std::string& label) const;

    bool leq(int x, int y) const { return up_[x].has(y); }
    bool lt(int x, int y) const { return x != y && leq(x, y); }
    int join(int x, int y) const { return join_[idx(x, y)]; }
    int meet(int x, int y) const { return meet_[idx(x, y)]; }
    int bottom() const { return bot_; }
    int top() const { return top_; }

    ElemSet universe() const { return ElemSet::first_n(n_); }
    ElemSet down(int x) const { return down_[x]; }   // {y : y <= x}
    ElemSet up(int x) const { return up_[x]; }       // {y : x <= y}
    ElemSet lower_covers(int x) const { return lcov_[x]; }
    ElemSet upper_covers(int x) const { return ucov_[x]; }
    bool is_cover(int lo, int hi) const { return ucov_[lo].has(hi); }

    ElemSet downset(ElemSet xs) const {
        ElemSet r;
        for (int x : xs) r |= down_[x];
        return r;
    }
    ElemSet upset(ElemSet xs) const {
        ElemSet r;
        for (int x : xs) r |= up_[x];
        return r;
    }
    ElemSet strict_downset(ElemSet xs) const {
        ElemSet r;
        for (int x : xs) r |= down_[x].without(x);
        return r;
    }

    int join_of(ElemSet xs) const {
        int r = bot_;
        for (int x : xs) r = join(r, x);
        return r;
    }
    int meet_of(ElemSet xs) const {
        int r = top_;
        for (int x : xs) r = meet(r, x);
        return r;
    }

    ElemSet join_irreducibles() const { return ji_; }
    ElemSet atoms() const { return atoms_; }

    // The unique lower cover of a join-irreducible element.
    int lower_star(int p) const {
        if (!ji_.has(p)) throw NotJoinIrreducibleError(labels_[p]);
        return lower_star_[p];
    }

    // Cover pairs (lower, upper) in increasing (lower, upper) index order.
    std::vector<std::pair<int, int>> cover_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int x = 0; x < n_; ++x)
            for (int y : ucov_[x]) out.emplace_back(x, y);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static std::uint16_t checked_size(const std::vector<std::string>& labels);
    int idx(int x, int y) const { return x * n_ + y; }
    void compute_tables();  // join/meet tables + derived caches; throws NotALatticeError

    std::string name_;
    std::vector<std::string> labels_;
    int n_ = 0;
    std::vector<ElemSet> up_, down_;
    std::vector<std::uint8_t> join_, meet_;
    std::vector<ElemSet> ucov_, lcov_;
    ElemSet ji_, atoms_;
    std::vector<int> lower_star_;
    int bot_ = 0, top_ = 0;
};

// ---------------------------------------------------------------------------
// Construction

inline std::uint16_t Lattice::checked_size(const std::vector<std::string>& labels) {
    if (labels.empty()) throw InputError("a lattice needs at least one element");
    if (labels.size() > kMaxElements)
        throw SizeGuardError("lattice has " + std::to_string(labels.size()) +
                             " elements; the representation is capped at 64");
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j])
                throw InputError("duplicate element label '" + labels[i] + "'");
    return static_cast<std::uint16_t>(labels.size());
}

inline int Lattice::index_of(const std::string& label) const {
    for (int i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    throw InputError("unknown element label '" + label + "'");
}

inline Lattice Lattice::from_leq(std::string name, std::vector<std::string> labels,
                                 std::vector<ElemSet> down) {
    Lattice L;
    L.name_ = std::move(name);
    L.n_ = checked_size(labels);
    L.labels_ = std::move(labels);
    L.down_ = std::move(down);
    L.up_.assign(L.n_, ElemSet{});
    ElemSet all = L.universe();
    for (int x = 0; x < L.n_; ++x) {
        if (!L.down_[x].has(x)) throw InputError("order is not reflexive");
        if (!L.down_[x].subset_of(all)) throw InputError("order row out of range");
        for (int y : L.down_[x]) L.up_[y].add(x);
    }
    for (int x = 0; x < L.n_; ++x)
        for (int y : L.down_[x]) {
            if (y != x && L.down_[y].has(x)) throw CycleError("order is not antisymmetric");
            if (!L.down_[y].subset_of(L.down_[x])) throw InputError("order is not transitive");
        }
    L.compute_tables();
    return L;
}

inline Lattice Lattice::from_cover_indices(std::string name, std::vector<std::string> labels,
                                           const std::vector<std::pair<int, int>>& covers) {
    const int n = checked_size(labels);
    for (auto [lo, hi] : covers)
        if (lo < 0 || hi < 0 || lo >= n || hi >= n)
            throw InputError("cover pair references an unknown element");

    // Reflexive-transitive closure of the declared edges.
    std::vector<ElemSet> down(n);
    for (int i = 0; i < n; ++i) down[i].add(i);
    std::vector<ElemSet> edge_up(n);
    for (auto [lo, hi] : covers) {
        if (lo == hi) throw NonCoverEdgeError("self-loop on '" + labels[lo] + "'");
        edge_up[lo].add(hi);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x)
            for (int y : edge_up[x]) {
                ElemSet merged = down[y] | down[x];
                if (merged != down[y]) { down[y] = merged; changed = true; }
            }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && down[x].has(y) && down[y].has(x))
                throw CycleError("cycle through '" + labels[x] + "' and '" + labels[y] + "'");

    // Every declared edge must be a genuine cover, and declared only once.
    std::vector<std::pair<int, int>> seen;
    for (auto [lo, hi] : covers) {
        if (std::find(seen.begin(), seen.end(), std::make_pair(lo, hi)) != seen.end())
            throw NonCoverEdgeError("duplicate cover '" + labels[lo] + "' < '" + labels[hi] + "'");
        seen.emplace_back(lo, hi);
        for (int z = 0; z < n; ++z)
            if (z != lo && z != hi && down[z].has(lo) && down[hi].has(z))
                throw NonCoverEdgeError("edge '" + labels[lo] + "' < '" + labels[hi] +
                                        "' is implied transitively (via '" + labels[z] + "')");
    }
    return from_leq(std::move(name), std::move(labels), std::move(down));
}

inline Lattice Lattice::from_covers(std::string name, std::vector<std::string> labels,
                                    const std::vector<std::pair<std::string, std::string>>& covers) {
    const int n = checked_size(labels);
    auto find = [&](const std::string& s) {
        for (int i = 0; i < n; ++i)
            if (labels[i] == s) return i;
        throw InputError("cover pair references unknown label '" + s + "'");
    };
    std::vector<std::pair<int, int>> idx;
    idx.reserve(covers.size());
    for (auto& [lo, hi] : covers) idx.emplace_back(find(lo), find(hi));
    return from_cover_indices(std::move(name), std::move(labels), idx);
}

inline void Lattice::compute_tables() {
    join_.assign(static_cast<std::size_t>(n_) * n_, 0);
    meet_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int x = 0; x < n_; ++x)
        for (int y = x; y < n_; ++y) {
            ElemSet ub = up_[x] & up_[y];
            ElemSet lb = down_[x] & down_[y];
            if (ub.empty()) throw NotALatticeError(labels_[x], labels_[y], "upper bound");
            if (lb.empty()) throw NotALatticeError(labels_[x], labels_[y], "lower bound");
            // Least element of ub = the unique minimal one (finite poset).
            int lub = -1, glb = -1;
            for (int z : ub)
                if ((down_[z] & ub) == ElemSet::single(z)) {
                    if (lub >= 0) throw NotALatticeError(labels_[x], labels_[y], "least upper bound");
                    lub = z;
                }
            for (int z : lb)
                if ((up_[z] & lb) == ElemSet::single(z)) {
                    if (glb >= 0) throw NotALatticeError(labels_[x], labels_[y], "greatest lower bound");
                    glb = z;
                }
            join_[idx(x, y)] = join_[idx(y, x)] = static_cast<std::uint8_t>(lub);
            meet_[idx(x, y)] = meet_[idx(y, x)] = static_cast<std::uint8_t>(glb);
        }

    bot_ = 0;
    top_ = 0;
    for (int x = 0; x < n_; ++x) {
        if (down_[x].size() == 1) bot_ = x;
        if (up_[x].size() == 1) top_ = x;
    }

    lcov_.assign(n_, ElemSet{});
    ucov_.assign(n_, ElemSet{});
    for (int x = 0; x < n_; ++x)
        for (int y : up_[x]) {
            if (y == x) continue;
            // x < y is a cover iff nothing sits strictly between.
            if ((up_[x] & down_[y]) == (ElemSet::single(x) | ElemSet::single(y))) {
                ucov_[x].add(y);
                lcov_[y].add(x);
            }
        }

    ji_ = ElemSet{};
    atoms_ = ElemSet{};
    lower_star_.assign(n_, -1);
    for (int p = 0; p < n_; ++p) {
        if (p == bot_) continue;
        if (lcov_[p].size() == 1) {
            ji_.add(p);
            lower_star_[p] = lcov_[p].min();
        }
        if (lcov_[p] == ElemSet::single(bot_)) atoms_.add(p);
    }
}

// ---------------------------------------------------------------------------
// Combinators

inline Lattice product(const Lattice& A, const Lattice& B) {
    const int n = A.size() * B.size();
    if (n > kMaxElements) throw SizeGuardError("product has more than 64 elements");
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int a = 0; a < A.size(); ++a)
        for (int b = 0; b < B.size(); ++b)
            labels.push_back("(" + A.label(a) + "," + B.label(b) + ")");
    auto id = [&](int a, int b) { return a * B.size() + b; };
    std::vector<ElemSet> down(n);
    for (int a = 0; a < A.size(); ++a)
        for (int b = 0; b < B.size(); ++b)
            for (int a2 : A.down(a))
                for (int b2 : B.down(b)) down[id(a, b)].add(id(a2, b2));
    return Lattice::from_leq(A.name() + "x" + B.name(), std::move(labels), std::move(down));
}

inline Lattice product(const std::vector<Lattice>& factors) {
    if (factors.empty()) throw InputError("empty product");
    Lattice r = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) r = product(r, factors[i]);
    return r;
}

inline Lattice dual(const Lattice& L) {
    std::vector<ElemSet> down(L.size());
    for (int x = 0; x < L.size(); ++x) down[x] = L.up(x);
    return Lattice::from_leq("dual(" + L.name() + ")", L.labels(), std::move(down));
}

// Least subset containing G and closed under binary joins and meets.
inline ElemSet sublattice_generated(const Lattice& L, ElemSet gens) {
    if (gens.empty()) throw InputError("sublattice_generated: empty generating set");
    ElemSet s = gens;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x : s)
            for (int y : s) {
                int j = L.join(x, y), m = L.meet(x, y);
                if (!s.has(j)) { s.add(j); changed = true; }
                if (!s.has(m)) { s.add(m); changed = true; }
            }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Isomorphism test with witness (index map A -> B), by backtracking over
// invariant-compatible assignments.

namespace detail {
struct IsoInvariant {
    int down_sz, up_sz, lcov_sz, ucov_sz;
    bool operator==(const IsoInvariant&) const = default;
};
inline IsoInvariant iso_invariant(const Lattice& L, int x) {
    return {L.down(x).size(), L.up(x).size(), L.lower_covers(x).size(), L.upper_covers(x).size()};
}
}  // namespace detail

inline std::optional<std::vector<int>> is_isomorphic(const Lattice& A, const Lattice& B) {
    if (A.size() != B.size()) return std::nullopt;
    const int n = A.size();
    std::vector<detail::IsoInvariant> ia(n), ib(n);
    for (int i = 0; i < n; ++i) ia[i] = detail::iso_invariant(A, i);
    for (int i = 0; i < n; ++i) ib[i] = detail::iso_invariant(B, i);
    std::vector<ElemSet> cand(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (ia[a] == ib[b]) cand[a].add(b);
        if (cand[a].empty()) return std::nullopt;
    }
    // Assign elements in order of fewest candidates.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return cand[x].size() < cand[y].size(); });

    std::vector<int> map(n, -1);
    ElemSet used;
    std::function<bool(int)> go = [&](int k) -> bool {
        if (k == n) return true;
        int a = order[k];
        for (int b : cand[a]) {
            if (used.has(b)) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                int a2 = order[j], b2 = map[a2];
                ok = (A.leq(a, a2) == B.leq(b, b2)) && (A.leq(a2, a) == B.leq(b2, b));
            }
            if (!ok) continue;
            map[a] = b;
            used.add(b);
            if (go(k + 1)) return true;
            used.remove(b);
            map[a] = -1;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return map;
}

// ---------------------------------------------------------------------------
// Antichain enumeration.  Visits every nonempty antichain of `candidates`
// exactly once, in lexicographic order of the sorted index sequence.  The
// callback returns false to stop the scan early.

template <typename Fn>
bool for_each_antichain(const Lattice& L, ElemSet candidates, Fn&& fn) {
    std::function<bool(ElemSet, int)> go = [&](ElemSet cur, int from) -> bool {
        for (int x : candidates) {
            if (x < from) continue;
            bool comparable = false;
            for (int y : cur)
                if (L.leq(x, y) || L.leq(y, x)) { comparable = true; break; }
            if (comparable) continue;
            ElemSet nxt = cur.with(x);
            if (!fn(nxt)) return false;
            if (!go(nxt, x + 1)) return false;
        }
        return true;
    };
    return go(ElemSet{}, 0);
}

}  // namespace latkit
