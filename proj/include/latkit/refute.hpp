// Refutation search: hunt for a finite counterexample to an identity in the
// enumerated catalog, optionally restricted to n-distributive lattices.
//
// This is a semi-procedure: a hit is a genuine refutation, while exhaustion
// only reports "no counterexample up to the bound", never validity.
#pragma once

#include <optional>

#include "latkit/enumerate.hpp"

namespace latkit {

struct RefuteResult {
    bool found = false;
    std::optional<Lattice> lattice;
    Assignment counterexample;
    int max_size_searched = 0;
};

inline RefuteResult refute(const Term& lhs, const Term& rhs, std::optional<int> ndistr,
                           int max_size, std::uint64_t budget = kDefaultEvalBudget,
                           int jobs = 1) {
    if (max_size < 1 || max_size > kEnumerateMaxSize)
        throw SizeGuardError("refute: max size must be 1.." + std::to_string(kEnumerateMaxSize));
    RefuteResult out;
    out.max_size_searched = max_size;
    Catalog cat(max_size);
    if (ndistr)
        cat = cat.filtered(make_predicate("n-distributive", *ndistr));
    cat.for_each([&](const Lattice& L) {
        Verdict v = holds_identity(L, lhs, rhs, budget, jobs);
        if (!v.valid) {
            out.found = true;
            out.lattice = L;
            out.counterexample = std::move(v.counterexample);
            return false;
        }
        return true;
    });
    return out;
}

}  // namespace latkit
