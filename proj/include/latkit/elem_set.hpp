// ElemSet: a set of element indices of one lattice, packed into a single word.
//
// Lattices in this library are capped at 64 elements, so every subset of a
// lattice fits in one uint64_t and the order-theoretic primitives (down-sets,
// refinement, antichain scans) reduce to word operations.
#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>

namespace latkit {

struct ElemSet {
    std::uint64_t bits = 0;

    constexpr ElemSet() = default;
    constexpr explicit ElemSet(std::uint64_t raw) : bits(raw) {}

    static constexpr ElemSet of(std::initializer_list<int> xs) {
        ElemSet s;
        for (int x : xs) s.bits |= std::uint64_t{1} << x;
        return s;
    }
    static constexpr ElemSet single(int x) { return ElemSet{std::uint64_t{1} << x}; }
    static constexpr ElemSet first_n(int n) {
        return ElemSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    constexpr bool empty() const { return bits == 0; }
    constexpr int size() const { return std::popcount(bits); }
    constexpr bool has(int x) const { return (bits >> x) & 1; }
    constexpr void add(int x) { bits |= std::uint64_t{1} << x; }
    constexpr void remove(int x) { bits &= ~(std::uint64_t{1} << x); }
    constexpr ElemSet with(int x) const { return ElemSet{bits | (std::uint64_t{1} << x)}; }
    constexpr ElemSet without(int x) const { return ElemSet{bits & ~(std::uint64_t{1} << x)}; }

    constexpr bool subset_of(ElemSet o) const { return (bits & ~o.bits) == 0; }
    constexpr bool intersects(ElemSet o) const { return (bits & o.bits) != 0; }

    // Lowest element index; set must be nonempty.
    constexpr int min() const { return std::countr_zero(bits); }

    constexpr friend ElemSet operator|(ElemSet a, ElemSet b) { return ElemSet{a.bits | b.bits}; }
    constexpr friend ElemSet operator&(ElemSet a, ElemSet b) { return ElemSet{a.bits & b.bits}; }
    constexpr friend ElemSet operator-(ElemSet a, ElemSet b) { return ElemSet{a.bits & ~b.bits}; }
    constexpr ElemSet& operator|=(ElemSet o) { bits |= o.bits; return *this; }
    constexpr ElemSet& operator&=(ElemSet o) { bits &= o.bits; return *this; }
    constexpr friend bool operator==(ElemSet a, ElemSet b) { return a.bits == b.bits; }
    constexpr friend bool operator!=(ElemSet a, ElemSet b) { return a.bits != b.bits; }
    constexpr friend bool operator<(ElemSet a, ElemSet b) { return a.bits < b.bits; }

    // Iterates set bits in increasing index order.
    struct iterator {
        std::uint64_t rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() { rest &= rest - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {bits}; }
    iterator end() const { return {0}; }
};

}  // namespace latkit
