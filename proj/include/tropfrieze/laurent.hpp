#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropfrieze/checked.hpp"

namespace tropfrieze {

using Exponent = std::vector<Int>;
using Coeff = mpz_class;

// Graded lexicographic comparison of exponent vectors: total degree first, then lex.
std::strong_ordering glex_compare(const Exponent& a, const Exponent& b);

// Sparse Laurent polynomial over Z in a fixed number of variables.
// Invariant: no stored coefficient is zero and every key has length nvars().
class LaurentPoly {
public:
    using Terms = std::map<Exponent, Coeff>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}
    LaurentPoly(std::size_t nvars, Terms terms);

    static LaurentPoly constant(std::size_t nvars, const Coeff& c);
    static LaurentPoly monomial(Exponent e, const Coeff& c = 1);
    static LaurentPoly variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    bool is_one() const;
    Coeff coefficient(const Exponent& e) const;

    // Componentwise minimum / maximum of the exponents; requires a nonzero polynomial.
    Exponent min_exponents() const;
    Exponent max_exponents() const;
    // Term with the graded-lex largest exponent; requires a nonzero polynomial.
    std::pair<const Exponent&, const Coeff&> glex_leading() const;
    // Content of the integer coefficients (nonnegative).
    Coeff integer_content() const;

    bool all_coefficients_positive() const;
    bool has_nonnegative_exponents() const;

    LaurentPoly times_monomial(const Exponent& e) const;
    LaurentPoly pow(unsigned n) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Coeff& c);
    // Adds c * x^shift * o, the inner loop of multiplication and division.
    void add_scaled(const LaurentPoly& o, const Coeff& c, const Exponent& shift);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    // Human-readable form such as "1 + 2*x1 + x1^-1*x2", terms in increasing graded-lex order.
    std::string to_string(std::string_view prefix = "x") const;

private:
    void require_same_nvars(const LaurentPoly& o) const;

    std::size_t nvars_ = 0;
    Terms terms_;
};

// Graded-lex comparison of two polynomials by their term sequences, largest term first.
std::strong_ordering glex_compare(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q);
// Quotient in the Laurent ring; throws NotDivisible when q does not divide p.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& q);

// Gcd in the Laurent ring, normalized to a polynomial divisible by no variable
// whose graded-lex leading coefficient is positive. gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace tropfrieze
