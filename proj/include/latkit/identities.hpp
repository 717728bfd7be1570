// Identity and quasi-identity decision procedures on finite lattices.
//
// All checks are exhaustive scans over assignments, guarded by an evaluation
// budget (default 10^8).  Verdicts carry the first counterexample in
// lexicographic assignment order (variables sorted by name, first variable
// most significant), which keeps results deterministic regardless of how the
// scan is partitioned across workers.
#pragma once

#include <cstdint>
#include <optional>
#include <thread>

#include "latkit/covers.hpp"
#include "latkit/terms.hpp"

namespace latkit {

inline constexpr std::uint64_t kDefaultEvalBudget = 100'000'000;

struct Verdict {
    bool valid = true;
    Assignment counterexample;  // populated iff !valid
};

namespace detail {

// Scans assignment indices [0, total) and returns the first index where
// `ok` fails.  With jobs > 1 the range is split into contiguous chunks
// scanned concurrently; the minimum failing index wins, so the witness is
// identical to a single-threaded scan.
template <typename OkFn>
std::optional<std::uint64_t> scan_first_failure(std::uint64_t total, int jobs, OkFn&& ok) {
    if (jobs <= 1 || total < 1024) {
        for (std::uint64_t i = 0; i < total; ++i)
            if (!ok(i)) return i;
        return std::nullopt;
    }
    const int nthreads = std::min<std::uint64_t>(jobs, total);
    std::vector<std::uint64_t> found(nthreads, UINT64_MAX);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
        threads.emplace_back([&, t] {
            const std::uint64_t lo = t * chunk;
            const std::uint64_t hi = std::min(total, lo + chunk);
            for (std::uint64_t i = lo; i < hi; ++i)
                if (!ok(i)) {
                    found[t] = i;
                    return;
                }
        });
    }
    for (auto& th : threads) th.join();
    std::uint64_t best = UINT64_MAX;
    for (auto f : found) best = std::min(best, f);
    if (best == UINT64_MAX) return std::nullopt;
    return best;
}

inline std::uint64_t assignment_space(const Lattice& L, std::size_t k, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > budget / std::max(1, L.size()) + 1) {
            total = UINT64_MAX;
            break;
        }
        total *= static_cast<std::uint64_t>(L.size());
    }
    if (total > budget)
        throw SizeGuardError("assignment space " + std::to_string(L.size()) + "^" +
                             std::to_string(k) + " exceeds the evaluation budget");
    return total;
}

inline Assignment decode_assignment(const Lattice& L, const std::vector<std::string>& vars,
                                    std::uint64_t idx) {
    Assignment a;
    const auto n = static_cast<std::uint64_t>(L.size());
    for (std::size_t i = vars.size(); i-- > 0;) {
        a[vars[i]] = static_cast<int>(idx % n);
        idx /= n;
    }
    return a;
}

inline Verdict check_pair(const Lattice& L, const Term& lhs, const Term& rhs, bool inclusion,
                          std::uint64_t budget, int jobs) {
    std::set<std::string> vs;
    for (auto& v : lhs.vars()) vs.insert(v);
    for (auto& v : rhs.vars()) vs.insert(v);
    const std::vector<std::string> vars(vs.begin(), vs.end());
    if (vars.size() > 64) throw SizeGuardError("too many variables");
    const std::uint64_t total = assignment_space(L, vars.size(), budget);
    const CompiledTerm cl = CompiledTerm::compile(lhs, vars);
    const CompiledTerm cr = CompiledTerm::compile(rhs, vars);
    const auto n = static_cast<std::uint64_t>(L.size());

    auto ok = [&](std::uint64_t idx) {
        int vals[64];
        std::uint64_t rest = idx;
        for (std::size_t i = vars.size(); i-- > 0;) {
            vals[i] = static_cast<int>(rest % n);
            rest /= n;
        }
        const int a = cl.eval_in(L, vals);
        const int b = cr.eval_in(L, vals);
        return inclusion ? L.leq(a, b) : a == b;
    };
    auto bad = scan_first_failure(total, jobs, ok);
    if (!bad) return {};
    return {false, decode_assignment(L, vars, *bad)};
}

}  // namespace detail

inline Verdict holds_identity(const Lattice& L, const Term& s, const Term& t,
                              std::uint64_t budget = kDefaultEvalBudget, int jobs = 1) {
    return detail::check_pair(L, s, t, false, budget, jobs);
}

inline Verdict holds_inclusion(const Lattice& L, const Term& s, const Term& t,
                               std::uint64_t budget = kDefaultEvalBudget, int jobs = 1) {
    return detail::check_pair(L, s, t, true, budget, jobs);
}

// ---------------------------------------------------------------------------
// n-distributivity, two routes

// Huhn's identity in variables x, y0..yn:
//   x & (y0|...|yn)  =  OR_i ( x & (OR_{j!=i} yj) )
inline std::pair<Term, Term> ndistr_identity(int n) {
    if (n < 1) throw InputError("n-distributivity needs n >= 1");
    Term x = Term::var("x");
    std::vector<Term> ys;
    for (int i = 0; i <= n; ++i) ys.push_back(Term::var("y" + std::to_string(i)));
    Term lhs = Term::meet(x, Term::join_all(ys));
    std::vector<Term> parts;
    for (int i = 0; i <= n; ++i) {
        std::vector<Term> others;
        for (int j = 0; j <= n; ++j)
            if (j != i) others.push_back(ys[j]);
        parts.push_back(Term::meet(x, Term::join_all(others)));
    }
    return {lhs, Term::join_all(parts)};
}

inline Verdict is_n_distributive(const Lattice& L, int n,
                                 std::uint64_t budget = kDefaultEvalBudget, int jobs = 1) {
    auto [lhs, rhs] = ndistr_identity(n);
    return holds_identity(L, lhs, rhs, budget, jobs);
}

struct CoverSizeVerdict {
    bool valid = true;
    int p = -1;      // witness join-irreducible
    ElemSet cover;   // witness irredundant cover with more than n members
};

// Cover-size criterion: a finite lattice is n-distributive exactly when
// every irredundant join-cover of every join-irreducible element has at
// most n members.  Independent of the identity route above.
inline CoverSizeVerdict is_n_distributive_by_covers(const Lattice& L, int n) {
    if (n < 1) throw InputError("n-distributivity needs n >= 1");
    CoverSizeVerdict out;
    ElemSet nonzero = L.universe().without(L.bottom());
    for_each_antichain(L, nonzero, [&](ElemSet E) {
        if (E.size() <= n) return true;
        int j = L.join_of(E);
        for (int p : L.join_irreducibles())
            if (L.leq(p, j) && is_irredundant_cover(L, p, E)) {
                out = {false, p, E};
                return false;
            }
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// The p_n terms and SD-join identities

// p_0(x,y,z) = y ;  p_{n+1}(x,y,z) = y & (x | p_n(x,z,y)).
namespace detail {
inline Term p_term_rec(int n, const Term& x, const Term& y, const Term& z) {
    if (n == 0) return y;
    return Term::meet(y, Term::join(x, p_term_rec(n - 1, x, z, y)));
}
}  // namespace detail

inline Term p_term(int n) {
    if (n < 0) throw InputError("p_term needs n >= 0");
    return detail::p_term_rec(n, Term::var("x"), Term::var("y"), Term::var("z"));
}

// SD_or^n : p_n(x,y,z) <= x | (y & z).
inline Verdict holds_sdj(const Lattice& L, int n, std::uint64_t budget = kDefaultEvalBudget,
                         int jobs = 1) {
    Term rhs = Term::join(Term::var("x"), Term::meet(Term::var("y"), Term::var("z")));
    return holds_inclusion(L, p_term(n), rhs, budget, jobs);
}

// ---------------------------------------------------------------------------
// Named properties

// x|y = x|z  implies  x|y = x|(y&z).
inline Verdict is_join_semidistributive(const Lattice& L,
                                        std::uint64_t budget = kDefaultEvalBudget) {
    detail::assignment_space(L, 3, budget);
    for (int x = 0; x < L.size(); ++x)
        for (int y = 0; y < L.size(); ++y)
            for (int z = 0; z < L.size(); ++z) {
                if (L.join(x, y) != L.join(x, z)) continue;
                if (L.join(x, y) != L.join(x, L.meet(y, z)))
                    return {false, {{"x", x}, {"y", y}, {"z", z}}};
            }
    return {};
}

inline Verdict is_modular(const Lattice& L, std::uint64_t budget = kDefaultEvalBudget,
                          int jobs = 1) {
    static const Term lhs = parse_term("x & (y | (x & z))");
    static const Term rhs = parse_term("(x & y) | (x & z)");
    return holds_identity(L, lhs, rhs, budget, jobs);
}

inline Verdict is_distributive(const Lattice& L, std::uint64_t budget = kDefaultEvalBudget,
                               int jobs = 1) {
    static const Term lhs = parse_term("x & (y | z)");
    static const Term rhs = parse_term("(x & y) | (x & z)");
    return holds_identity(L, lhs, rhs, budget, jobs);
}

// (x|y|z < t1 < t2)  implies  (x|y) & z = (x&z) | (y&z).
inline Verdict holds_sentence_1storder(const Lattice& L,
                                       std::uint64_t budget = kDefaultEvalBudget) {
    detail::assignment_space(L, 5, budget);
    // s can appear as x|y|z below two strict upper bounds iff some chain
    // s < t1 < t2 exists.
    std::vector<int> two_above(L.size(), -1);  // smallest such t1, or -1
    for (int s = 0; s < L.size(); ++s)
        for (int t1 : L.up(s)) {
            if (t1 == s) continue;
            if (L.up(t1).size() > 1) { two_above[s] = t1; break; }
        }
    for (int x = 0; x < L.size(); ++x)
        for (int y = 0; y < L.size(); ++y)
            for (int z = 0; z < L.size(); ++z) {
                int s = L.join(L.join(x, y), z);
                if (two_above[s] < 0) continue;
                if (L.meet(L.join(x, y), z) != L.join(L.meet(x, z), L.meet(y, z))) {
                    int t1 = two_above[s];
                    int t2 = (L.up(t1).without(t1)).min();
                    return {false, {{"t1", t1}, {"t2", t2}, {"x", x}, {"y", y}, {"z", z}}};
                }
            }
    return {};
}

}  // namespace latkit
