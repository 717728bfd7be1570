// Exhaustive generation of all finite lattices up to isomorphism.
//
// Elements are generated in a fixed linear-extension labelling: index 0 is
// the bottom, index n-1 the top, and the order relation on the middle
// elements only ever relates lower indices below higher ones.  Candidates
// are the upper-triangular relations on the middle elements; a candidate is
// kept when it is transitive, every pair of elements has a least upper and
// greatest lower bound after adjoining the bounds, and the relation equals
// its canonical form (the lexicographically least relabelling among all
// linear extensions).  Canonical-form rejection needs no seen-set, so the
// generator streams.
//
// Size 7 covers the whole 78-lattice test catalog; size 8 (222 more) is the
// hard bound.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "latkit/congruence.hpp"
#include "latkit/identities.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

inline constexpr int kEnumerateMaxSize = 8;

namespace detail {

// Bit layout of a candidate: bit for pair (i, j), i < j, over middle
// elements 0..m-1, in row-major order of i then j.
struct MiddleRel {
    int m = 0;
    std::uint32_t bits = 0;

    int pair_index(int i, int j) const {  // i < j
        // Pairs (0,1) (0,2) ... (0,m-1) (1,2) ...
        return i * (2 * m - i - 1) / 2 + (j - i - 1);
    }
    bool lt(int i, int j) const {  // strict order among middles, i != j
        if (i < j) return (bits >> pair_index(i, j)) & 1;
        return false;
    }
    bool transitive() const {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j && lt(i, j))
                    for (int k = 0; k < m; ++k)
                        if (k != j && k != i && lt(j, k) && !lt(i, k)) return false;
        return true;
    }
};

// The candidate's relation bits after relabelling middles by perm
// (perm[old] = new), or nullopt encoded as ~0 when perm is not a linear
// extension (some related pair would flip orientation).
inline std::uint64_t relabel_bits(const MiddleRel& r, const std::vector<int>& perm) {
    std::uint64_t out = 0;
    for (int i = 0; i < r.m; ++i)
        for (int j = i + 1; j < r.m; ++j)
            if (r.lt(i, j)) {
                int a = perm[i], b = perm[j];
                if (a > b) return ~std::uint64_t{0};
                out |= std::uint64_t{1} << r.pair_index(a, b);
            }
    return out;
}

inline bool is_canonical(const MiddleRel& r) {
    std::vector<int> perm(r.m);
    for (int i = 0; i < r.m; ++i) perm[i] = i;
    do {
        std::uint64_t rb = relabel_bits(r, perm);
        if (rb < r.bits) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

inline std::vector<std::string> generated_labels(int n) {
    std::vector<std::string> labels;
    labels.push_back("0");
    for (int i = 0; i < n - 2; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    if (n >= 2) labels.push_back("1");
    return labels;
}

// Bounded poset from a middle relation; down-set rows indexed 0 = bottom,
// 1..m = middles, m+1 = top.
inline std::vector<ElemSet> bounded_down_rows(const MiddleRel& r) {
    const int n = r.m + 2;
    std::vector<ElemSet> down(n);
    for (int x = 0; x < n; ++x) {
        down[x].add(x);
        down[x].add(0);
    }
    for (int i = 0; i < r.m; ++i) down[n - 1].add(i + 1);
    for (int i = 0; i < r.m; ++i)
        for (int j = 0; j < r.m; ++j)
            if (i != j && r.lt(i, j)) down[j + 1].add(i + 1);
    return down;
}

// Every pair of a bounded poset has a least upper bound and a greatest
// lower bound (cheap pre-check before full Lattice construction).
inline bool bounded_poset_is_lattice(const std::vector<ElemSet>& down, int n) {
    std::vector<ElemSet> up(n);
    for (int x = 0; x < n; ++x)
        for (int y : down[x]) up[y].add(x);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            ElemSet ub = up[x] & up[y], lb = down[x] & down[y];
            int nmin = 0, nmax = 0;
            for (int z : ub)
                if ((down[z] & ub) == ElemSet::single(z)) ++nmin;
            for (int z : lb)
                if ((up[z] & lb) == ElemSet::single(z)) ++nmax;
            if (nmin != 1 || nmax != 1) return false;
        }
    return true;
}

}  // namespace detail

// Streams all lattices with exactly n elements, one per isomorphism class,
// in canonical generation order.  The consumer returns false to stop.
inline void enumerate_lattices(int n, const std::function<bool(const Lattice&)>& yield) {
    if (n < 1 || n > kEnumerateMaxSize)
        throw SizeGuardError("enumerate_lattices supports sizes 1.." +
                             std::to_string(kEnumerateMaxSize));
    if (n <= 2) {
        std::vector<ElemSet> down(n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y <= x; ++y) down[x].add(y);
        yield(Lattice::from_leq("lat" + std::to_string(n) + "_0", detail::generated_labels(n),
                                std::move(down)));
        return;
    }
    const int m = n - 2;
    detail::MiddleRel r;
    r.m = m;
    const int npairs = m * (m - 1) / 2;
    std::uint64_t index = 0;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << npairs); ++bits) {
        r.bits = bits;
        if (!r.transitive()) continue;
        auto down = detail::bounded_down_rows(r);
        if (!detail::bounded_poset_is_lattice(down, n)) continue;
        if (!detail::is_canonical(r)) continue;
        Lattice L = Lattice::from_leq("lat" + std::to_string(n) + "_" + std::to_string(index),
                                      detail::generated_labels(n), std::move(down));
        ++index;
        if (!yield(L)) return;
    }
}

inline std::uint64_t count_lattices(int n) {
    std::uint64_t c = 0;
    enumerate_lattices(n, [&](const Lattice&) {
        ++c;
        return true;
    });
    return c;
}

// ---------------------------------------------------------------------------
// Catalog: a lazily filtered stream over all sizes 1..max_size.

using LatticePredicate = std::function<bool(const Lattice&)>;

// Named predicates for catalog filtering: n-distributive:N, modular,
// distributive, join-semidistributive, SI, sdj:N.
inline LatticePredicate make_predicate(const std::string& name, int param = -1) {
    auto need_param = [&](const char* what) {
        if (param < 0) throw UnknownPredicateError(name + " (missing parameter " + what + ")");
    };
    if (name == "n-distributive") {
        need_param("n");
        return [param](const Lattice& L) { return is_n_distributive_by_covers(L, param).valid; };
    }
    if (name == "modular") return [](const Lattice& L) { return is_modular(L).valid; };
    if (name == "distributive") return [](const Lattice& L) { return is_distributive(L).valid; };
    if (name == "join-semidistributive")
        return [](const Lattice& L) { return is_join_semidistributive(L).valid; };
    if (name == "SI")
        return [](const Lattice& L) { return is_subdirectly_irreducible(L).subdirectly_irreducible; };
    if (name == "sdj") {
        need_param("n");
        return [param](const Lattice& L) { return holds_sdj(L, param).valid; };
    }
    throw UnknownPredicateError(name);
}

class Catalog {
public:
    explicit Catalog(int max_size) : min_size_(1), max_size_(max_size) {}
    Catalog(int min_size, int max_size) : min_size_(min_size), max_size_(max_size) {}

    Catalog filtered(LatticePredicate pred) const {
        Catalog c = *this;
        c.preds_.push_back(std::move(pred));
        return c;
    }

    // Streams in canonical order (size ascending, canonical index within a
    // size); the consumer returns false to stop.
    void for_each(const std::function<bool(const Lattice&)>& fn) const {
        for (int n = min_size_; n <= max_size_; ++n) {
            bool keep_going = true;
            enumerate_lattices(n, [&](const Lattice& L) {
                for (const auto& p : preds_)
                    if (!p(L)) return true;
                keep_going = fn(L);
                return keep_going;
            });
            if (!keep_going) return;
        }
    }

    std::vector<Lattice> to_vector() const {
        std::vector<Lattice> out;
        for_each([&](const Lattice& L) {
            out.push_back(L);
            return true;
        });
        return out;
    }

    std::uint64_t count() const {
        std::uint64_t c = 0;
        for_each([&](const Lattice&) {
            ++c;
            return true;
        });
        return c;
    }

private:
    int min_size_, max_size_;
    std::vector<LatticePredicate> preds_;
};

}  // namespace latkit
