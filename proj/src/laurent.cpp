#include "tropfrieze/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace tropfrieze {

namespace {

Int total_degree(const Exponent& e) {
    Int s = 0;
    for (Int v : e) s = checked::add(s, v);
    return s;
}

Exponent exp_add(const Exponent& a, const Exponent& b) {
    Exponent out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked::add(a[i], b[i]);
    return out;
}

Exponent exp_sub(const Exponent& a, const Exponent& b) {
    Exponent out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked::sub(a[i], b[i]);
    return out;
}

}  // namespace

std::strong_ordering glex_compare(const Exponent& a, const Exponent& b) {
    if (auto c = total_degree(a) <=> total_degree(b); c != 0) return c;
    return a <=> b;
}

LaurentPoly::LaurentPoly(std::size_t nvars, Terms terms) : nvars_(nvars) {
    for (auto& [e, c] : terms) {
        if (e.size() != nvars) throw DimensionMismatch("exponent length differs from variable count");
        if (c != 0) terms_.emplace(e, std::move(c));
    }
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Coeff& c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace(Exponent(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(Exponent e, const Coeff& c) {
    LaurentPoly p(e.size());
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw InvalidInput("variable index out of range");
    Exponent e(nvars, 0);
    e[i] = 1;
    return monomial(std::move(e));
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](Int v) { return v == 0; });
}

bool LaurentPoly::is_one() const { return is_constant() && !is_zero() && terms_.begin()->second == 1; }

Coeff LaurentPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
}

Exponent LaurentPoly::min_exponents() const {
    if (is_zero()) throw InvalidInput("min_exponents of the zero polynomial");
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

Exponent LaurentPoly::max_exponents() const {
    if (is_zero()) throw InvalidInput("max_exponents of the zero polynomial");
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::max(m[i], e[i]);
    return m;
}

std::pair<const Exponent&, const Coeff&> LaurentPoly::glex_leading() const {
    if (is_zero()) throw InvalidInput("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
        if (glex_compare(it->first, best->first) > 0) best = it;
    return {best->first, best->second};
}

Coeff LaurentPoly::integer_content() const {
    Coeff g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

bool LaurentPoly::all_coefficients_positive() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

bool LaurentPoly::has_nonnegative_exponents() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
        return std::all_of(t.first.begin(), t.first.end(), [](Int v) { return v >= 0; });
    });
}

LaurentPoly LaurentPoly::times_monomial(const Exponent& e) const {
    if (e.size() != nvars_) throw DimensionMismatch("monomial length differs from variable count");
    LaurentPoly out(nvars_);
    for (const auto& [f, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), exp_add(f, e), c);
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly result = constant(nvars_, 1);
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n > 0) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

void LaurentPoly::require_same_nvars(const LaurentPoly& o) const {
    if (o.nvars_ != nvars_) throw DimensionMismatch("polynomials have different variable counts");
}

void LaurentPoly::add_scaled(const LaurentPoly& o, const Coeff& c, const Exponent& shift) {
    require_same_nvars(o);
    if (c == 0) return;
    for (const auto& [e, d] : o.terms_) {
        Exponent key = exp_add(e, shift);
        auto [it, inserted] = terms_.try_emplace(std::move(key), 0);
        it->second += c * d;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    add_scaled(o, 1, Exponent(nvars_, 0));
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    add_scaled(o, -1, Exponent(nvars_, 0));
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Coeff& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, d] : terms_) d *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_same_nvars(b);
    LaurentPoly out(a.nvars_);
    const LaurentPoly& small = a.size() <= b.size() ? a : b;
    const LaurentPoly& big = a.size() <= b.size() ? b : a;
    for (const auto& [e, c] : small.terms_) out.add_scaled(big, c, e);
    return out;
}

std::string LaurentPoly::to_string(std::string_view prefix) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, Coeff>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& x, const auto& y) { return glex_compare(x.first, y.first) < 0; });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        Coeff mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any) mono << "*";
            any = true;
            mono << prefix << (i + 1);
            if (e[i] != 1) mono << "^" << e[i];
        }
        if (!any) {
            os << mag.get_str();
        } else if (mag == 1) {
            os << mono.str();
        } else {
            os << mag.get_str() << "*" << mono.str();
        }
    }
    return os.str();
}

std::strong_ordering glex_compare(const LaurentPoly& a, const LaurentPoly& b) {
    auto sorted_desc = [](const LaurentPoly& p) {
        std::vector<std::pair<Exponent, Coeff>> v(p.terms().begin(), p.terms().end());
        std::sort(v.begin(), v.end(),
                  [](const auto& x, const auto& y) { return glex_compare(x.first, y.first) > 0; });
        return v;
    };
    auto va = sorted_desc(a);
    auto vb = sorted_desc(b);
    for (std::size_t i = 0; i < std::min(va.size(), vb.size()); ++i) {
        if (auto c = glex_compare(va[i].first, vb[i].first); c != 0) return c;
        int s = cmp(va[i].second, vb[i].second);
        if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return va.size() <=> vb.size();
}

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }

LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.nvars() != q.nvars()) throw DimensionMismatch("polynomials have different variable counts");
    if (q.is_zero()) throw ZeroDenominator("division by the zero polynomial");
    LaurentPoly quotient(p.nvars());
    if (p.is_zero()) return quotient;
    // Exponents of an exact quotient lie in the box [min p - min q, max p - max q].
    const Exponent lo = exp_sub(p.min_exponents(), q.min_exponents());
    const Exponent hi = exp_sub(p.max_exponents(), q.max_exponents());
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i]) return std::nullopt;
    const auto& [qe, qc] = *q.terms().rbegin();
    LaurentPoly rem = p;
    Coeff c;
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms().rbegin();
        Exponent e = exp_sub(re, qe);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
        if (!mpz_divisible_p(rc.get_mpz_t(), qc.get_mpz_t())) return std::nullopt;
        mpz_divexact(c.get_mpz_t(), rc.get_mpz_t(), qc.get_mpz_t());
        quotient.add_scaled(LaurentPoly::monomial(Exponent(e.size(), 0), c), 1, e);
        rem.add_scaled(q, -c, e);
    }
    return quotient;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    auto r = try_exact_div(p, q);
    if (!r) throw NotDivisible("polynomial division leaves a nonzero remainder");
    return std::move(*r);
}

namespace {

// Univariate view in variable v: degree -> coefficient not involving v.
using UPoly = std::map<Int, LaurentPoly>;

UPoly split(const LaurentPoly& p, std::size_t v) {
    UPoly out;
    for (const auto& [e, c] : p.terms()) {
        Exponent f = e;
        Int d = f[v];
        f[v] = 0;
        auto [it, ins] = out.try_emplace(d, p.nvars());
        it->second.add_scaled(LaurentPoly::monomial(Exponent(p.nvars(), 0), c), 1, f);
    }
    return out;
}

Int degree_in(const LaurentPoly& p, std::size_t v) {
    Int d = 0;
    for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
    return d;
}

LaurentPoly gcd_polynomial(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_in(const LaurentPoly& p, std::size_t v) {
    UPoly parts = split(p, v);
    LaurentPoly g(p.nvars());
    for (auto& [d, c] : parts) {
        g = g.is_zero() ? c : gcd_polynomial(g, c);
        if (g.is_constant() && abs(g.terms().begin()->second) == 1) break;
    }
    return g;
}

LaurentPoly primitive_part_in(const LaurentPoly& p, std::size_t v) {
    if (p.is_zero()) return p;
    return exact_div(p, content_in(p, v));
}

// Pseudo-remainder of a by b in variable v, up to a factor from the coefficient ring.
LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b, std::size_t v) {
    const Int db = degree_in(b, v);
    UPoly bs = split(b, v);
    const LaurentPoly lc = bs.rbegin()->second;
    const std::size_t n = a.nvars();
    while (!a.is_zero()) {
        Int da = degree_in(a, v);
        if (da < db) break;
        UPoly as = split(a, v);
        LaurentPoly la = as.rbegin()->second;
        Exponent shift(n, 0);
        shift[v] = da - db;
        LaurentPoly next = lc * a;
        LaurentPoly sub = la * b;
        next.add_scaled(sub, -1, shift);
        a = std::move(next);
    }
    return a;
}

bool is_unit(const LaurentPoly& p) { return p.is_constant() && !p.is_zero() && abs(p.terms().begin()->second) == 1; }

// b divides a in the polynomial ring.
bool divides_polynomial(const LaurentPoly& b, const LaurentPoly& a) {
    auto q = try_exact_div(a, b);
    return q && q->has_nonnegative_exponents();
}

// Gcd of two nonzero polynomials (nonnegative exponents), up to sign.
LaurentPoly gcd_polynomial(const LaurentPoly& a, const LaurentPoly& b) {
    const std::size_t n = a.nvars();
    if (is_unit(a) || is_unit(b)) return LaurentPoly::constant(n, 1);
    if (divides_polynomial(b, a)) return b;
    if (divides_polynomial(a, b)) return a;
    std::optional<std::size_t> var;
    for (std::size_t v = n; v-- > 0;) {
        if (degree_in(a, v) > 0 || degree_in(b, v) > 0) {
            var = v;
            break;
        }
    }
    if (!var) {
        Coeff g;
        mpz_gcd(g.get_mpz_t(), a.terms().begin()->second.get_mpz_t(), b.terms().begin()->second.get_mpz_t());
        return LaurentPoly::constant(n, g);
    }
    const std::size_t v = *var;
    if (degree_in(a, v) == 0) return gcd_polynomial(a, content_in(b, v));
    if (degree_in(b, v) == 0) return gcd_polynomial(content_in(a, v), b);
    LaurentPoly ca = content_in(a, v);
    LaurentPoly cb = content_in(b, v);
    LaurentPoly c = gcd_polynomial(ca, cb);
    LaurentPoly pa = exact_div(a, ca);
    LaurentPoly pb = exact_div(b, cb);
    if (degree_in(pa, v) < degree_in(pb, v)) std::swap(pa, pb);
    while (true) {
        LaurentPoly r = pseudo_remainder(pa, pb, v);
        if (r.is_zero()) break;
        if (degree_in(r, v) == 0) {
            pb = LaurentPoly::constant(n, 1);
            break;
        }
        pa = std::move(pb);
        pb = primitive_part_in(r, v);
    }
    return c * pb;
}

LaurentPoly strip_monomial_content(const LaurentPoly& p) {
    Exponent m = p.min_exponents();
    for (Int& x : m) x = checked::neg(x);
    return p.times_monomial(m);
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.nvars() != q.nvars()) throw DimensionMismatch("polynomials have different variable counts");
    if (p.is_zero() && q.is_zero()) return LaurentPoly(p.nvars());
    LaurentPoly g;
    if (p.is_zero()) {
        g = strip_monomial_content(q);
    } else if (q.is_zero()) {
        g = strip_monomial_content(p);
    } else {
        g = gcd_polynomial(strip_monomial_content(p), strip_monomial_content(q));
    }
    g = strip_monomial_content(g);
    if (g.glex_leading().second < 0) g = -g;
    return g;
}

}  // namespace tropfrieze
