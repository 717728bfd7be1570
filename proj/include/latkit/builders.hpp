// Stock lattices used by tests, the verification suite and the docs.
#pragma once

#include <string>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

// k-element chain 0 < c1 < ... < 1.
inline Lattice chain(int k) {
    if (k < 1) throw InputError("chain needs at least one element");
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) {
        if (i == 0) labels.push_back("0");
        else if (i == k - 1) labels.push_back("1");
        else labels.push_back("c" + std::to_string(i));
    }
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
    return Lattice::from_cover_indices("chain" + std::to_string(k), std::move(labels), covers);
}

inline Lattice two() { return chain(2); }

// Boolean lattice with k atoms (2^k elements), labelled by atom subsets:
// e.g. k = 2 gives 0, a, b, ab.
inline Lattice boolean_lattice(int k) {
    if (k < 0 || k > 6) throw InputError("boolean_lattice supports 0..6 atoms");
    const int n = 1 << k;
    std::vector<std::string> labels;
    for (int mask = 0; mask < n; ++mask) {
        std::string s;
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) s += static_cast<char>('a' + i);
        labels.push_back(s.empty() ? "0" : s);
    }
    std::vector<ElemSet> down(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if ((y & x) == y) down[x].add(y);
    return Lattice::from_leq("B" + std::to_string(n), std::move(labels), std::move(down));
}

// The diamond M3: three incomparable atoms below a common top.
inline Lattice m3() {
    return Lattice::from_covers("M3", {"0", "a", "b", "c", "1"},
                                {{"0", "a"}, {"0", "b"}, {"0", "c"},
                                 {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

// The pentagon N5: 0 < a < c < 1 and 0 < b < 1.
inline Lattice n5() {
    return Lattice::from_covers("N5", {"0", "a", "b", "c", "1"},
                                {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}});
}

// a x b grid (product of two chains).
inline Lattice grid(int a, int b) { return product(chain(a), chain(b)); }

}  // namespace latkit
