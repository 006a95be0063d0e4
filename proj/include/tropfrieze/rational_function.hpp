#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>

#include "tropfrieze/laurent.hpp"
#include "tropfrieze/matrix.hpp"

namespace tropfrieze {

// Reduced fraction of Laurent polynomials.
// Invariants: den is a polynomial divisible by no variable (monomial content lives in num),
// gcd(num, den) = 1, and den's graded-lex leading coefficient is positive.
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(std::size_t nvars) : num_(nvars), den_(LaurentPoly::constant(nvars, 1)) {}
    explicit RationalFunction(const LaurentPoly& p);

    static RationalFunction constant(std::size_t nvars, const Coeff& c);
    static RationalFunction variable(std::size_t nvars, std::size_t i);
    static RationalFunction monomial(std::span<const Int> exponent);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    std::size_t nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    // True iff the element is a Laurent polynomial.
    bool is_laurent() const { return den_.is_one(); }
    bool subtraction_free() const { return num_.all_coefficients_positive() && den_.all_coefficients_positive(); }

    RationalFunction inverse() const;
    RationalFunction pow(Int n) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    std::string to_string(std::string_view prefix = "x") const;

private:
    friend RationalFunction rf_reduce(const LaurentPoly& num, const LaurentPoly& den);
    LaurentPoly num_;
    LaurentPoly den_;
};

// Total order used for canonical sorting: graded-lex on numerators, then denominators.
std::strong_ordering glex_compare(const RationalFunction& a, const RationalFunction& b);

RationalFunction rf_reduce(const LaurentPoly& num, const LaurentPoly& den);

// Replaces variable i of f by prod_j base_j^{M(j, i)}.
RationalFunction substitute_monomials(const RationalFunction& f, const IntMatrix& M,
                                      std::span<const RationalFunction> base);

// Replaces variable i of f by images[i].
RationalFunction substitute(const RationalFunction& f, std::span<const RationalFunction> images);

// Max-plus evaluation of a subtraction-free element at an integer point.
TropValue trop_eval(const RationalFunction& f, std::span<const Int> coords);
TropValue trop_eval(const LaurentPoly& f, std::span<const Int> coords);

}  // namespace tropfrieze
