#include "tropfrieze/finite_type.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "tropfrieze/linear.hpp"

namespace tropfrieze {

namespace {

std::vector<std::vector<std::size_t>> components(const IntMatrix& a) {
    const std::size_t r = a.rows();
    std::vector<int> comp(r, -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < r; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> block;
        std::deque<std::size_t> queue{s};
        comp[s] = static_cast<int>(out.size());
        while (!queue.empty()) {
            const std::size_t i = queue.front();
            queue.pop_front();
            block.push_back(i);
            for (std::size_t j = 0; j < r; ++j)
                if (j != i && a(i, j) != 0 && comp[j] < 0) {
                    comp[j] = static_cast<int>(out.size());
                    queue.push_back(j);
                }
        }
        std::sort(block.begin(), block.end());
        out.push_back(std::move(block));
    }
    return out;
}

// Leading principal minors by fraction-free (Bareiss) elimination without pivoting.
std::vector<mpz_class> leading_minors(const std::vector<std::vector<mpz_class>>& s) {
    const std::size_t n = s.size();
    std::vector<mpz_class> out;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<mpq_class>> m(k, std::vector<mpq_class>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m[i][j] = s[i][j];
        mpq_class det = 1;
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t piv = c;
            while (piv < k && m[piv][c] == 0) ++piv;
            if (piv == k) {
                det = 0;
                break;
            }
            if (piv != c) {
                std::swap(m[piv], m[c]);
                det = -det;
            }
            det *= m[c][c];
            for (std::size_t i = c + 1; i < k; ++i) {
                const mpq_class f = m[i][c] / m[c][c];
                for (std::size_t j = c; j < k; ++j) m[i][j] -= f * m[c][j];
            }
        }
        out.push_back(mpz_class(det));
    }
    return out;
}

IntVec reflect_root(const IntMatrix& a, std::size_t i, const IntVec& beta) {
    Int pairing = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) pairing = checked::add(pairing, checked::mul(a(i, j), beta[j]));
    IntVec out = beta;
    out[i] = checked::sub(out[i], pairing);
    return out;
}

IntVec reflect_weight(const IntMatrix& a, std::size_t i, std::span<const Int> w) {
    IntVec out(w.begin(), w.end());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = checked::sub(out[j], checked::mul(w[i], a(j, i)));
    return out;
}

}  // namespace

Classification classify(const CartanMatrix& a) {
    Classification c;
    c.blocks = components(a.matrix());
    const std::size_t r = a.rank();
    std::vector<std::vector<mpz_class>> s(r, std::vector<mpz_class>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) s[i][j] = mpz_class(a.symmetrizer()[i]) * mpz_class(a(i, j));
    c.leading_minors = leading_minors(s);
    c.finite = std::all_of(c.leading_minors.begin(), c.leading_minors.end(), [](const mpz_class& m) { return m > 0; });
    return c;
}

IntVec coxeter_apply(const CartanMatrix& a, std::span<const Int> weight) {
    IntVec w(weight.begin(), weight.end());
    for (std::size_t i = a.rank(); i-- > 0;) w = reflect_weight(a.matrix(), i, w);
    return w;
}

std::size_t RootSystemData::domain_size() const {
    std::size_t n = 0;
    for (Int v : h) n += static_cast<std::size_t>(v + 1);
    return n;
}

GridPoint RootSystemData::glide(GridPoint p) const {
    const std::size_t j = star.at(p.i);
    return {j, checked::add(p.m, 1 + h[j])};
}

GridPoint RootSystemData::glide_inverse(GridPoint p) const {
    return {star.at(p.i), checked::sub(p.m, 1 + h[p.i])};
}

std::vector<GridPoint> RootSystemData::fundamental_domain() const {
    std::vector<GridPoint> out;
    const Int hmax = *std::max_element(h.begin(), h.end());
    for (Int m = 0; m <= hmax; ++m)
        for (std::size_t i = 0; i < h.size(); ++i)
            if (m <= h[i]) out.push_back({i, m});
    return out;
}

bool RootSystemData::in_domain(GridPoint p) const { return p.m >= 0 && p.m <= h.at(p.i); }

GridPoint RootSystemData::reduce(GridPoint p) const {
    while (!in_domain(p)) p = p.m < 0 ? glide(p) : glide_inverse(p);
    return p;
}

RootSystemData coxeter_data(const CartanMatrix& a) {
    if (!classify(a).finite) throw NotFiniteType("Cartan matrix " + a.matrix().to_string() + " is not of finite type");
    const std::size_t r = a.rank();
    const IntMatrix& am = a.matrix();
    RootSystemData d;
    d.cartan = a;

    std::set<IntVec> roots;
    std::deque<IntVec> queue;
    for (std::size_t i = 0; i < r; ++i) {
        IntVec e(r, 0);
        e[i] = 1;
        roots.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        IntVec beta = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < r; ++i) {
            IntVec next = reflect_root(am, i, beta);
            if (roots.insert(next).second) queue.push_back(std::move(next));
        }
    }
    for (const auto& beta : roots)
        if (all_nonnegative(beta)) d.positive_roots.push_back(beta);

    const Int bound = 4 * static_cast<Int>(d.positive_roots.size()) + 4;
    IntMatrix cm(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        IntVec e(r, 0);
        e[i] = 1;
        const IntVec ce = coxeter_apply(a, e);
        for (std::size_t j = 0; j < r; ++j) cm(j, i) = ce[j];
    }
    IntMatrix power = cm;
    d.coxeter_number = 1;
    while (power != IntMatrix::identity(r)) {
        if (d.coxeter_number > bound) throw RouteDisagreement("Coxeter element order exceeds the finite-type bound");
        power = power * cm;
        ++d.coxeter_number;
    }

    d.star.resize(r);
    d.h.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        IntVec w(r, 0);
        w[i] = 1;
        for (Int steps = 1;; ++steps) {
            if (steps > 2 * d.coxeter_number) throw RouteDisagreement("Coxeter orbit never reaches -omega_j");
            IntVec next = coxeter_apply(a, w);
            IntVec diff(r);
            for (std::size_t j = 0; j < r; ++j) diff[j] = checked::sub(w[j], next[j]);
            const auto coeffs = rational_solve(am, diff);
            if (!coeffs || std::any_of(coeffs->begin(), coeffs->end(),
                                       [](const mpq_class& q) { return q < 0 || q.get_den() != 1; }))
                throw RouteDisagreement("Coxeter orbit chain is not strictly decreasing in dominance order");
            w = std::move(next);
            const auto nz = std::count_if(w.begin(), w.end(), [](Int v) { return v != 0; });
            const auto it = std::find(w.begin(), w.end(), Int{-1});
            if (nz == 1 && it != w.end()) {
                d.star[i] = static_cast<std::size_t>(it - w.begin());
                d.h[i] = steps;
                break;
            }
        }
    }
    return d;
}

const RootSystemData& root_data(const CartanMatrix& a) {
    static std::mutex mutex;
    static std::map<IntMatrix, std::unique_ptr<RootSystemData>> registry;
    std::lock_guard lock(mutex);
    auto it = registry.find(a.matrix());
    if (it == registry.end())
        it = registry.emplace(a.matrix(), std::make_unique<RootSystemData>(coxeter_data(a))).first;
    return *it->second;
}

PeriodicityReport verify_periodicity(const CartanMatrix& a, Int m0, Int m1, std::span<const FriezeFunction> samples,
                                     bool generic) {
    PeriodicityReport report;
    auto where = [](const std::string& what, GridPoint p) {
        std::ostringstream os;
        os << what << " at (" << p.i + 1 << "," << p.m << ")";
        return os.str();
    };
    if (generic) {
        const RootSystemData& rd = root_data(a);
        for (Int m = m0; m <= m1; ++m)
            for (std::size_t i = 0; i < a.rank(); ++i) {
                const GridPoint p{i, m}, q = rd.glide(p);
                report.checks += 2;
                if (!(generic_A_frieze(a, p.i, p.m) == generic_A_frieze(a, q.i, q.m)))
                    report.violations.push_back(where("generic A-frieze", p));
                if (!(generic_Y_frieze(a, p.i, p.m) == generic_Y_frieze(a, q.i, q.m)))
                    report.violations.push_back(where("generic Y-frieze", p));
            }
    }
    for (const auto& f : samples) {
        const RootSystemData& rd = root_data(f.cartan());
        for (Int m = m0; m <= m1; ++m)
            for (std::size_t i = 0; i < f.rank(); ++i) {
                const GridPoint p{i, m}, q = rd.glide(p);
                ++report.checks;
                if (f(p.i, p.m) != f(q.i, q.m)) report.violations.push_back(where(to_string(f.kind()), p));
            }
    }
    return report;
}

namespace {

const ExchangeGraph& cached_exchange_graph(SeedKind kind, const IntMatrix& b) {
    static std::mutex mutex;
    static std::map<std::pair<int, IntMatrix>, std::unique_ptr<ExchangeGraph>> registry;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(static_cast<int>(kind), b);
    auto it = registry.find(key);
    if (it == registry.end() && !classify(cartan_of_pattern(b, true)).finite)
        throw NotFiniteType("exchange graph of " + b.to_string() + " is infinite");
    if (it == registry.end())
        it = registry
                 .emplace(key, std::make_unique<ExchangeGraph>(enumerate_exchange_graph(kind, MutationMatrix(b))))
                 .first;
    return *it->second;
}

RationalFunction monomial_in(const std::vector<RationalFunction>& cluster, std::span<const Int> e) {
    RationalFunction v = RationalFunction::constant(cluster.front().nvars(), 1);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) v = v * cluster[i].pow(e[i]);
    return v;
}

}  // namespace

Monomial mono_from_gvector_A(const TropPoint& rho) {
    if (rho.space() != TropSpace::Y) throw InvalidInput("g-vectors of cluster monomials are points of a Y-space");
    const ExchangeGraph& g = cached_exchange_graph(SeedKind::A, rho.pattern().transpose());
    for (const Seed& s : g.seeds) {
        const IntVec e = negated(rho.coords_at(s.address));
        if (all_nonnegative(e)) return {s.address, e, monomial_in(s.cluster, e)};
    }
    throw NotFound("no vertex of the exchange graph optimizes the point");
}

Monomial mono_from_gvector_Y(const TropPoint& delta) {
    if (delta.space() != TropSpace::A) throw InvalidInput("g-vectors of global Y-monomials are points of an A-space");
    const ExchangeGraph& g = cached_exchange_graph(SeedKind::Y, delta.pattern().transpose());
    for (const Seed& s : g.seeds) {
        const IntVec dt = delta.coords_at(s.address);
        if (all_nonnegative(negated(delta.matrix_at(s.address).left_mul(dt)))) {
            const IntVec e = negated(dt);
            return {s.address, e, monomial_in(s.cluster, e)};
        }
    }
    throw NotFound("no vertex of the exchange graph optimizes the point");
}

namespace {

void require_patterns(const CartanMatrix& a, const TropPoint& delta, const TropPoint& rho) {
    const IntMatrix b = B_of(a).matrix();
    if (delta.space() != TropSpace::A || delta.pattern() != b.transpose())
        throw InvalidInput("delta must be a point of the A-space of B_A^T");
    if (rho.space() != TropSpace::Y || rho.pattern() != b) throw InvalidInput("rho must be a point of the Y-space of B_A");
}

}  // namespace

PairingResult pairing(const CartanMatrix& a, const TropPoint& delta, const TropPoint& rho) {
    require_patterns(a, delta, rho);
    const RootSystemData& rd = root_data(a);
    PairingResult out;
    out.via_x = trop_eval(mono_from_gvector_A(rho).value, delta.root_coords()).value;
    out.via_y = trop_eval(mono_from_gvector_Y(delta).value, rho.root_coords()).value;
    for (const GridPoint& p : rd.fundamental_domain())
        out.via_domain = checked::add(out.via_domain, checked::mul(point_value(delta, p.i, p.m),
                                                                    checked::pos(-point_value(rho, p.i, p.m))));
    bool first = true;
    for (const Seed& s : cached_exchange_graph(SeedKind::A, delta.pattern()).seeds) {
        const Int v = checked::neg(checked::dot(delta.coords_at(s.address), rho.coords_at(s.address)));
        if (first || v > out.via_max) out.via_max = v;
        first = false;
    }
    out.value = out.via_x;
    if (out.via_y != out.value || out.via_domain != out.value || out.via_max != out.value) {
        std::ostringstream os;
        os << "pairing routes disagree: x " << out.via_x << ", y " << out.via_y << ", domain " << out.via_domain
           << ", max " << out.via_max;
        throw RouteDisagreement(os.str());
    }
    return out;
}

DomainProduct x_from_rho(const CartanMatrix& a, const TropPoint& rho) {
    if (rho.space() != TropSpace::Y || rho.pattern() != B_of(a).matrix())
        throw InvalidInput("rho must be a point of the Y-space of B_A");
    DomainProduct out{{}, RationalFunction::constant(a.rank(), 1)};
    for (const GridPoint& p : root_data(a).fundamental_domain()) {
        const Int e = checked::pos(-point_value(rho, p.i, p.m));
        if (e == 0) continue;
        out.exponents[p] = e;
        out.value = out.value * generic_A_frieze(a, p.i, p.m).pow(e);
    }
    return out;
}

std::map<GridPoint, LaurentPoly> Fim_recursion(const CartanMatrix& a, Int m_max) {
    const std::size_t r = a.rank();
    const MutationMatrix b = B_of(a);
    std::map<GridPoint, LaurentPoly> f;
    for (std::size_t i = 0; i < r; ++i) f.emplace(GridPoint{i, 0}, LaurentPoly::constant(r, 1));
    for (Int m = 0; m < m_max; ++m)
        for (std::size_t i = 0; i < r; ++i) {
            const IntVec c = principal_pattern_at(b, canonical_address(r, i, m)).c.col(i);
            Exponent plus(r), minus(r);
            for (std::size_t j = 0; j < r; ++j) {
                plus[j] = checked::pos(c[j]);
                minus[j] = checked::pos(-c[j]);
            }
            LaurentPoly prod = LaurentPoly::monomial(plus);
            for (std::size_t j = 0; j < r; ++j) {
                if (j == i || a(j, i) == 0) continue;
                const LaurentPoly& fj = f.at(GridPoint{j, j > i ? m : m + 1});
                prod = prod * fj.pow(static_cast<unsigned>(-a(j, i)));
            }
            f.emplace(GridPoint{i, m + 1}, exact_div(LaurentPoly::monomial(minus) + prod, f.at(GridPoint{i, m})));
        }
    return f;
}

DomainProduct y_from_delta(const CartanMatrix& a, const TropPoint& delta) {
    const IntMatrix bt = B_of(a).matrix().transpose();
    if (delta.space() != TropSpace::A || delta.pattern() != bt)
        throw InvalidInput("delta must be a point of the A-space of B_A^T");
    const RootSystemData& rd = root_data(a);
    const IntVec d0 = delta.root_coords();
    const TropPoint minus_p = TropPoint::on_Y(-bt, negated(bt.left_mul(d0)));
    const Int hmax = *std::max_element(rd.h.begin(), rd.h.end());
    const FriezeFunction k = k_from_trop_point(minus_p, -1, hmax);
    const auto F = Fim_recursion(a, hmax);
    DomainProduct out{{}, RationalFunction::monomial(negated(d0))};
    for (const GridPoint& p : rd.fundamental_domain()) {
        const Int e = checked::pos(-k(p.i, p.m - 1));
        if (e == 0) continue;
        out.exponents[p] = e;
        out.value = out.value * RationalFunction(F.at(p)).pow(e);
    }
    return out;
}

std::map<GridPoint, Int> decompose_hammocks(const FriezeFunction& k) {
    if (k.kind() != FriezeKind::ClusterAdditive) throw InvalidInput("hammock decomposition needs a cluster-additive function");
    const RootSystemData& rd = root_data(k.cartan());
    std::map<GridPoint, Int> out;
    for (const GridPoint& p : rd.fundamental_domain()) {
        const Int e = checked::pos(-k(p.i, p.m));
        if (e != 0) out[p] = e;
    }
    const Int hmax = *std::max_element(rd.h.begin(), rd.h.end());
    const Int m0 = -hmax - 2, m1 = 2 * hmax + 3;
    FriezeTable sum{m0, m1, std::vector<IntVec>(k.rank(), IntVec(static_cast<std::size_t>(m1 - m0 + 1), 0))};
    for (const auto& [p, e] : out) {
        const FriezeTable h = hammock(k.cartan(), p.i, p.m).window(m0, m1);
        for (std::size_t i = 0; i < k.rank(); ++i)
            for (std::size_t c = 0; c < sum.rows[i].size(); ++c)
                sum.rows[i][c] = checked::add(sum.rows[i][c], checked::mul(e, h.rows[i][c]));
    }
    if (sum != k.window(m0, m1)) throw RouteDisagreement("hammock sum does not reproduce the function");
    return out;
}

DualityReport d_duality_check(const CartanMatrix& a) {
    const std::size_t r = a.rank();
    const IntMatrix b = B_of(a).matrix();
    const MutationMatrix mb(b), mbt(b.transpose());
    const auto domain = root_data(a).fundamental_domain();
    DualityReport report;
    for (const GridPoint& p : domain)
        for (const GridPoint& q : domain) {
            const RationalFunction xq = seed_at(SeedKind::A, mb, canonical_address(r, q.i, q.m)).cluster[q.i];
            const RationalFunction xvp = seed_at(SeedKind::A, mbt, canonical_address(r, p.i, p.m)).cluster[p.i];
            const Int lhs = d_compat_degree(TropSpace::A, b, canonical_address(r, p.i, p.m), p.i, xq);
            const Int rhs = d_compat_degree(TropSpace::A, b.transpose(), canonical_address(r, q.i, q.m), q.i, xvp);
            ++report.pairs;
            if (lhs != rhs) {
                std::ostringstream os;
                os << "(" << p.i + 1 << "," << p.m << ") vs (" << q.i + 1 << "," << q.m << "): " << lhs
                   << " != " << rhs;
                report.violations.push_back(os.str());
            }
        }
    return report;
}

bool phi_gvector_law(const CartanMatrix& a, const TreeAddress& w, std::span<const Int> m) {
    const IntMatrix bt = B_of(a).matrix().transpose();
    const TropPoint rho_hat = g_vector_of_cluster_monomial(bt, w, m);
    const TropPoint minus_rho_hat = TropPoint::on_Y(-bt, negated(rho_hat.coords_at(w)), w);
    const TropPoint expected = g_vector_of_cluster_monomial(-bt, w, m);
    return shift_trop(minus_rho_hat) == expected;
}

}  // namespace tropfrieze
