#include "tropfrieze/rational_function.hpp"

#include <map>

namespace tropfrieze {

namespace {

Exponent negated_exponent(const Exponent& e) {
    Exponent out(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) out[i] = checked::neg(e[i]);
    return out;
}

}  // namespace

RationalFunction::RationalFunction(const LaurentPoly& p)
    : num_(p), den_(LaurentPoly::constant(p.nvars(), 1)) {}

RationalFunction RationalFunction::constant(std::size_t nvars, const Coeff& c) {
    return RationalFunction(LaurentPoly::constant(nvars, c));
}

RationalFunction RationalFunction::variable(std::size_t nvars, std::size_t i) {
    return RationalFunction(LaurentPoly::variable(nvars, i));
}

RationalFunction RationalFunction::monomial(std::span<const Int> exponent) {
    return RationalFunction(LaurentPoly::monomial(Exponent(exponent.begin(), exponent.end())));
}

RationalFunction rf_reduce(const LaurentPoly& num_in, const LaurentPoly& den_in) {
    if (num_in.nvars() != den_in.nvars()) throw DimensionMismatch("numerator and denominator variable counts differ");
    if (den_in.is_zero()) throw ZeroDenominator("zero denominator");
    const std::size_t n = num_in.nvars();
    RationalFunction out(n);
    if (num_in.is_zero()) return out;
    Exponent shift = negated_exponent(den_in.min_exponents());
    LaurentPoly num = num_in.times_monomial(shift);
    LaurentPoly den = den_in.times_monomial(shift);
    if (den.is_constant()) {
        Coeff d = den.terms().begin()->second;
        Coeff g;
        Coeff c = num.integer_content();
        mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        if (d < 0) g = -g;
        num = exact_div(num, LaurentPoly::constant(n, g));
        den = LaurentPoly::constant(n, d / g);
    } else {
        LaurentPoly g = poly_gcd(num, den);
        if (!g.is_one()) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
        if (den.glex_leading().second < 0) {
            num = -num;
            den = -den;
        }
    }
    out.num_ = std::move(num);
    out.den_ = std::move(den);
    return out;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw ZeroDenominator("inverse of zero");
    return rf_reduce(den_, num_);
}

RationalFunction RationalFunction::pow(Int n) const {
    if (n < 0) return inverse().pow(checked::neg(n));
    RationalFunction out = *this;
    out.num_ = num_.pow(static_cast<unsigned>(n));
    out.den_ = den_.pow(static_cast<unsigned>(n));
    return out;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -num_;
    return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.nvars() != b.nvars()) throw DimensionMismatch("rational functions have different variable counts");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return rf_reduce(a.num_ + b.num_, a.den_);
    LaurentPoly g = poly_gcd(a.den_, b.den_);
    LaurentPoly bd = exact_div(b.den_, g);
    LaurentPoly ad = exact_div(a.den_, g);
    return rf_reduce(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.nvars() != b.nvars()) throw DimensionMismatch("rational functions have different variable counts");
    if (a.is_zero() || b.is_zero()) return RationalFunction(a.nvars());
    LaurentPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!bd.is_one()) {
        LaurentPoly g = poly_gcd(an, bd);
        if (!g.is_one()) {
            an = exact_div(an, g);
            bd = exact_div(bd, g);
        }
    }
    if (!ad.is_one()) {
        LaurentPoly g = poly_gcd(bn, ad);
        if (!g.is_one()) {
            bn = exact_div(bn, g);
            ad = exact_div(ad, g);
        }
    }
    LaurentPoly num = an * bn;
    LaurentPoly den = ad * bd;
    if (den.glex_leading().second < 0) {
        num = -num;
        den = -den;
    }
    RationalFunction out(num);
    out.den_ = std::move(den);
    return out;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

std::string RationalFunction::to_string(std::string_view prefix) const {
    if (den_.is_one()) return num_.to_string(prefix);
    auto wrap = [&](const LaurentPoly& p) {
        std::string s = p.to_string(prefix);
        return p.size() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

std::strong_ordering glex_compare(const RationalFunction& a, const RationalFunction& b) {
    if (auto c = glex_compare(a.num(), b.num()); c != 0) return c;
    return glex_compare(a.den(), b.den());
}

namespace {

class PowerCache {
public:
    explicit PowerCache(std::span<const RationalFunction> images) : images_(images) {}

    const RationalFunction& get(std::size_t i, Int e) {
        auto key = std::make_pair(i, e);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(key, images_[i].pow(e)).first->second;
    }

private:
    std::span<const RationalFunction> images_;
    std::map<std::pair<std::size_t, Int>, RationalFunction> cache_;
};

RationalFunction substitute_poly(const LaurentPoly& p, std::size_t target_nvars, PowerCache& cache) {
    RationalFunction sum(target_nvars);
    for (const auto& [e, c] : p.terms()) {
        RationalFunction term = RationalFunction::constant(target_nvars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term = term * cache.get(i, e[i]);
        sum = sum + term;
    }
    return sum;
}

}  // namespace

RationalFunction substitute(const RationalFunction& f, std::span<const RationalFunction> images) {
    if (images.size() != f.nvars()) throw DimensionMismatch("substitution needs one image per variable");
    if (images.empty()) return f;
    const std::size_t target = images.front().nvars();
    for (const auto& im : images)
        if (im.nvars() != target) throw DimensionMismatch("substitution images have different variable counts");
    PowerCache cache(images);
    RationalFunction num = substitute_poly(f.num(), target, cache);
    if (f.is_laurent()) return num;
    return num / substitute_poly(f.den(), target, cache);
}

RationalFunction substitute_monomials(const RationalFunction& f, const IntMatrix& M,
                                      std::span<const RationalFunction> base) {
    if (M.cols() != f.nvars()) throw DimensionMismatch("matrix column count differs from variable count");
    if (M.rows() != base.size()) throw DimensionMismatch("matrix row count differs from base length");
    if (base.empty()) return f;
    const std::size_t target = base.front().nvars();
    std::vector<RationalFunction> images;
    for (std::size_t i = 0; i < M.cols(); ++i) {
        RationalFunction im = RationalFunction::constant(target, 1);
        for (std::size_t j = 0; j < M.rows(); ++j)
            if (M(j, i) != 0) im = im * base[j].pow(M(j, i));
        images.push_back(std::move(im));
    }
    return substitute(f, images);
}

TropValue trop_eval(const LaurentPoly& f, std::span<const Int> coords) {
    if (coords.size() != f.nvars()) throw DimensionMismatch("coordinate length differs from variable count");
    if (f.is_zero()) throw SubtractionFreeViolation("zero has no tropical value");
    if (!f.all_coefficients_positive()) throw SubtractionFreeViolation("negative coefficient in tropical evaluation");
    bool first = true;
    Int best = 0;
    for (const auto& [e, c] : f.terms()) {
        Int v = checked::dot(coords, e);
        if (first || v > best) best = v;
        first = false;
    }
    return {best};
}

TropValue trop_eval(const RationalFunction& f, std::span<const Int> coords) {
    return trop_eval(f.num(), coords) / trop_eval(f.den(), coords);
}

}  // namespace tropfrieze
