#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tropfrieze/errors.hpp"

namespace tropfrieze {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

namespace checked {

inline Int add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out)) throw Overflow("integer overflow in addition");
    return out;
}

inline Int sub(Int a, Int b) {
    Int out;
    if (__builtin_sub_overflow(a, b, &out)) throw Overflow("integer overflow in subtraction");
    return out;
}

inline Int mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow("integer overflow in multiplication");
    return out;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int pos(Int a) { return a > 0 ? a : 0; }

inline Int dot(std::span<const Int> a, std::span<const Int> b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors with different lengths");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = add(s, mul(a[i], b[i]));
    return s;
}

}  // namespace checked

// Element of the max-plus semifield: a (+) b = max(a, b), a (.) b = a + b.
struct TropValue {
    Int value = 0;

    friend bool operator==(TropValue, TropValue) = default;
    friend auto operator<=>(TropValue, TropValue) = default;

    friend TropValue operator*(TropValue a, TropValue b) { return {checked::add(a.value, b.value)}; }
    friend TropValue operator/(TropValue a, TropValue b) { return {checked::sub(a.value, b.value)}; }
    TropValue plus(TropValue o) const { return {value > o.value ? value : o.value}; }
};

}  // namespace tropfrieze
