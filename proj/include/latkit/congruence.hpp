// Congruences of a finite lattice: principal congruences, the congruence
// lattice, subdirect irreducibility, and quotients.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

// A partition of the element indices, compatible with join and meet.
// Stored in canonical form: block ids are assigned in order of each block's
// least element, so equal congruences compare equal as vectors.
class Congruence {
public:
    Congruence() = default;
    explicit Congruence(std::vector<int> block_of) : block_of_(std::move(block_of)) {
        canonicalize();
    }

    int size() const { return static_cast<int>(block_of_.size()); }
    int block_count() const { return nblocks_; }
    int block_of(int x) const { return block_of_[x]; }
    bool same(int x, int y) const { return block_of_[x] == block_of_[y]; }

    std::vector<ElemSet> blocks() const {
        std::vector<ElemSet> bs(nblocks_);
        for (int x = 0; x < size(); ++x) bs[block_of_[x]].add(x);
        return bs;
    }

    // Partition refinement order: *this <= o iff each block of *this lies
    // inside a block of o.
    bool leq(const Congruence& o) const {
        for (int x = 0; x < size(); ++x)
            for (int y = x + 1; y < size(); ++y)
                if (same(x, y) && !o.same(x, y)) return false;
        return true;
    }

    bool is_identity() const { return nblocks_ == size(); }
    bool is_full() const { return nblocks_ == 1; }

    friend bool operator==(const Congruence& a, const Congruence& b) {
        return a.block_of_ == b.block_of_;
    }
    friend bool operator<(const Congruence& a, const Congruence& b) {
        return a.block_of_ < b.block_of_;
    }

private:
    void canonicalize() {
        int maxid = 0;
        for (int b : block_of_) maxid = std::max(maxid, b);
        std::vector<int> remap(maxid + 1, -1);
        int next = 0;
        for (int& b : block_of_) {
            if (remap[b] < 0) remap[b] = next++;
            b = remap[b];
        }
        nblocks_ = next;
    }

    std::vector<int> block_of_;
    int nblocks_ = 0;
};

inline Congruence identity_congruence(const Lattice& L) {
    std::vector<int> b(L.size());
    for (int i = 0; i < L.size(); ++i) b[i] = i;
    return Congruence(std::move(b));
}

inline Congruence full_congruence(const Lattice& L) {
    return Congruence(std::vector<int>(L.size(), 0));
}

// Printed form `{0,a}{b,c}{1}`: blocks ordered by least member, members in
// element-index order.
inline std::string congruence_to_string(const Lattice& L, const Congruence& c) {
    std::string out;
    for (const ElemSet& b : c.blocks()) {
        out += "{";
        bool first = true;
        for (int x : b) {
            if (!first) out += ",";
            out += L.label(x);
            first = false;
        }
        out += "}";
    }
    return out;
}

namespace detail {

// Union-find based closure: merge the given seed pairs, then close under
// compatibility (x ~ y forces x|z ~ y|z and x&z ~ y&z) and transitivity
// until a fixpoint.
class CongruenceCloser {
public:
    explicit CongruenceCloser(const Lattice& L) : L_(L), parent_(L.size()) {
        for (int i = 0; i < L.size(); ++i) parent_[i] = i;
    }

    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    void merge(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent_[std::max(x, y)] = std::min(x, y);
    }

    Congruence close() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < L_.size(); ++x)
                for (int y = x + 1; y < L_.size(); ++y) {
                    if (find(x) != find(y)) continue;
                    for (int z = 0; z < L_.size(); ++z) {
                        int jx = L_.join(x, z), jy = L_.join(y, z);
                        if (find(jx) != find(jy)) { merge(jx, jy); changed = true; }
                        int mx = L_.meet(x, z), my = L_.meet(y, z);
                        if (find(mx) != find(my)) { merge(mx, my); changed = true; }
                    }
                }
        }
        std::vector<int> b(L_.size());
        for (int i = 0; i < L_.size(); ++i) b[i] = find(i);
        return Congruence(std::move(b));
    }

private:
    const Lattice& L_;
    std::vector<int> parent_;
};

}  // namespace detail

// Least congruence identifying x and y.
inline Congruence principal_congruence(const Lattice& L, int x, int y) {
    detail::CongruenceCloser c(L);
    c.merge(x, y);
    return c.close();
}

inline Congruence congruence_join(const Lattice& L, const Congruence& a, const Congruence& b) {
    detail::CongruenceCloser c(L);
    for (int x = 0; x < L.size(); ++x)
        for (int y = x + 1; y < L.size(); ++y)
            if (a.same(x, y) || b.same(x, y)) c.merge(x, y);
    return c.close();
}

inline Congruence congruence_meet(const Lattice& L, const Congruence& a, const Congruence& b) {
    // Intersection of equivalences; compatibility is inherited.
    std::vector<int> b2(L.size());
    for (int x = 0; x < L.size(); ++x)
        b2[x] = a.block_of(x) * (L.size() + 1) + b.block_of(x);
    return Congruence(std::move(b2));
}

// The full congruence lattice: join-closure of the principal congruences
// together with the identity.  Guarded, since the result can be large.
inline std::vector<Congruence> all_congruences(const Lattice& L, int size_guard = 40) {
    if (L.size() > size_guard)
        throw SizeGuardError("all_congruences: lattice has " + std::to_string(L.size()) +
                             " elements (guard " + std::to_string(size_guard) + ")");
    std::vector<Congruence> all{identity_congruence(L)};
    auto add = [&](const Congruence& c) {
        if (std::find(all.begin(), all.end(), c) == all.end()) {
            all.push_back(c);
            return true;
        }
        return false;
    };
    for (int x = 0; x < L.size(); ++x)
        for (int y = x + 1; y < L.size(); ++y) add(principal_congruence(L, x, y));
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t sz = all.size();
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = i + 1; j < sz; ++j)
                if (add(congruence_join(L, all[i], all[j]))) grew = true;
    }
    std::sort(all.begin(), all.end());
    return all;
}

struct SIVerdict {
    bool subdirectly_irreducible = false;
    Congruence monolith;  // meaningful iff subdirectly_irreducible
};

// Subdirect irreducibility: a unique minimal nonzero congruence exists.
// Every nonzero congruence contains a nonzero principal one, so it is
// enough to inspect the principal congruences.
inline SIVerdict is_subdirectly_irreducible(const Lattice& L) {
    if (L.size() == 1) return {false, {}};  // trivial lattice: no nonzero congruence
    std::vector<Congruence> principals;
    for (int x = 0; x < L.size(); ++x)
        for (int y = x + 1; y < L.size(); ++y) {
            Congruence c = principal_congruence(L, x, y);
            if (std::find(principals.begin(), principals.end(), c) == principals.end())
                principals.push_back(std::move(c));
        }
    std::vector<const Congruence*> minimal;
    for (const auto& c : principals) {
        bool is_min = true;
        for (const auto& d : principals)
            if (!(d == c) && d.leq(c)) { is_min = false; break; }
        if (is_min) minimal.push_back(&c);
    }
    if (minimal.size() == 1) return {true, *minimal[0]};
    return {false, {}};
}

// Quotient lattice L/theta: blocks as elements, induced order.  Block
// labels list the members, e.g. `{a,c}`.
inline Lattice quotient(const Lattice& L, const Congruence& theta) {
    const auto blocks = theta.blocks();
    const int m = theta.block_count();
    std::vector<std::string> labels;
    labels.reserve(m);
    for (const ElemSet& b : blocks) {
        std::string s = "{";
        bool first = true;
        for (int x : b) {
            if (!first) s += ",";
            s += L.label(x);
            first = false;
        }
        labels.push_back(s + "}");
    }
    // [x] <= [y] iff x|y ~ y; well defined by compatibility.
    std::vector<ElemSet> down(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int x = blocks[i].min(), y = blocks[j].min();
            if (theta.same(L.join(x, y), y)) down[j].add(i);
        }
    return Lattice::from_leq(L.name() + "/theta", std::move(labels), std::move(down));
}

}  // namespace latkit
