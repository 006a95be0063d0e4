#include "tropfrieze/frieze.hpp"

#include <sstream>

namespace tropfrieze {

std::string to_string(FriezeKind k) {
    switch (k) {
        case FriezeKind::Additive: return "additive";
        case FriezeKind::ClusterAdditive: return "cluster-additive";
        case FriezeKind::TropicalFrieze: return "tropical-frieze";
    }
    return "?";
}

std::string FriezeTable::to_tsv() const {
    std::ostringstream os;
    os << "i\\m";
    for (Int m = m0; m <= m1; ++m) os << '\t' << m;
    os << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << i + 1;
        for (Int v : rows[i]) os << '\t' << v;
        os << '\n';
    }
    return os.str();
}

Int frieze_rhs(FriezeKind kind, const CartanMatrix& a, std::size_t i, std::span<const Int> at_m,
               std::span<const Int> at_m_plus_1) {
    Int sum = 0;
    for (std::size_t j = 0; j < a.rank(); ++j) {
        if (j == i || a(j, i) == 0) continue;
        Int v = j > i ? at_m[j] : at_m_plus_1[j];
        if (kind == FriezeKind::ClusterAdditive) v = checked::pos(v);
        sum = checked::add(sum, checked::mul(checked::neg(a(j, i)), v));
    }
    return kind == FriezeKind::TropicalFrieze ? checked::pos(sum) : sum;
}

bool table_satisfies(FriezeKind kind, const CartanMatrix& a, const FriezeTable& t) {
    if (t.rows.size() != a.rank()) throw DimensionMismatch("table row count differs from rank");
    for (Int m = t.m0; m < t.m1; ++m) {
        IntVec cur(a.rank()), next(a.rank());
        for (std::size_t i = 0; i < a.rank(); ++i) {
            cur[i] = t.at(i, m);
            next[i] = t.at(i, m + 1);
        }
        for (std::size_t i = 0; i < a.rank(); ++i)
            if (checked::add(cur[i], next[i]) != frieze_rhs(kind, a, i, cur, next)) return false;
    }
    return true;
}

FriezeFunction::FriezeFunction(FriezeKind kind, CartanMatrix cartan, IntVec slice, Int slice_m)
    : kind_(kind), cartan_(std::move(cartan)), memo_(std::make_shared<Memo>()) {
    if (slice.size() != cartan_.rank()) throw DimensionMismatch("slice length differs from rank");
    memo_->slices.emplace(slice_m, std::move(slice));
}

const IntVec& FriezeFunction::slice_locked(Int m) const {
    auto& slices = memo_->slices;
    if (auto it = slices.find(m); it != slices.end()) return it->second;
    const std::size_t r = rank();
    if (m > slices.rbegin()->first) {
        for (Int cur_m = slices.rbegin()->first; cur_m < m; ++cur_m) {
            const IntVec& cur = slices.at(cur_m);
            IntVec next(r, 0);
            for (std::size_t i = 0; i < r; ++i)
                next[i] = checked::sub(frieze_rhs(kind_, cartan_, i, cur, next), cur[i]);
            slices.emplace(cur_m + 1, std::move(next));
        }
    } else {
        for (Int cur_m = slices.begin()->first; cur_m > m; --cur_m) {
            const IntVec& cur = slices.at(cur_m);
            IntVec prev(r, 0);
            for (std::size_t i = r; i-- > 0;)
                prev[i] = checked::sub(frieze_rhs(kind_, cartan_, i, prev, cur), cur[i]);
            slices.emplace(cur_m - 1, std::move(prev));
        }
    }
    return slices.at(m);
}

IntVec FriezeFunction::slice(Int m) const {
    std::lock_guard lock(memo_->mutex);
    return slice_locked(m);
}

Int FriezeFunction::operator()(std::size_t i, Int m) const {
    if (i >= rank()) throw InvalidInput("frieze row index out of range");
    std::lock_guard lock(memo_->mutex);
    return slice_locked(m)[i];
}

FriezeTable FriezeFunction::window(Int m0, Int m1) const {
    if (m1 < m0) throw InvalidInput("empty window");
    FriezeTable t{m0, m1, std::vector<IntVec>(rank())};
    std::lock_guard lock(memo_->mutex);
    for (Int m = m0; m <= m1; ++m) {
        const IntVec& s = slice_locked(m);
        for (std::size_t i = 0; i < rank(); ++i) t.rows[i].push_back(s[i]);
    }
    return t;
}

bool FriezeFunction::satisfies(FriezeKind kind, Int m0, Int m1) const {
    return table_satisfies(kind, cartan_, window(m0, m1));
}

bool FriezeFunction::equal_on(const FriezeFunction& o, Int m0, Int m1) const {
    return rank() == o.rank() && window(m0, m1) == o.window(m0, m1);
}

FriezeFunction additive_extend(const CartanMatrix& a, IntVec slice) {
    return FriezeFunction(FriezeKind::Additive, a, std::move(slice));
}

FriezeFunction hammock(const CartanMatrix& a, std::size_t i, Int m) {
    if (i >= a.rank()) throw InvalidInput("hammock index out of range");
    IntVec s(a.rank(), 0);
    s[i] = -1;
    return FriezeFunction(FriezeKind::ClusterAdditive, a, std::move(s), m);
}

RationalFunction generic_A_frieze(const CartanMatrix& a, std::size_t i, Int m) {
    const MutationMatrix bt(B_of(a).matrix().transpose());
    return seed_at(SeedKind::A, bt, canonical_address(a.rank(), i, m)).cluster[i];
}

RationalFunction generic_Y_frieze(const CartanMatrix& a, std::size_t i, Int m) {
    return seed_at(SeedKind::Y, B_of(a), canonical_address(a.rank(), i, m)).cluster[i];
}

CartanMatrix cartan_of_pattern(const IntMatrix& pattern, bool allow_negated) {
    if (!pattern.is_square()) throw DimensionMismatch("pattern matrix must be square");
    const std::size_t r = pattern.rows();
    bool upper_nonpositive = true;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (pattern(i, j) > 0) upper_nonpositive = false;
    IntMatrix m = pattern;
    if (!upper_nonpositive) {
        if (!allow_negated) throw InvalidInput("pattern matrix is not of the form B_A");
        m = -pattern;
    }
    IntMatrix a(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) a(i, j) = i == j ? 2 : (i < j ? m(i, j) : checked::neg(m(i, j)));
    CartanMatrix out(std::move(a));
    if (B_of(out).matrix() != m) throw InvalidInput("pattern matrix is not of the form B_A");
    return out;
}

Int point_value(const TropPoint& p, std::size_t i, Int m) {
    return p.coords_at(canonical_address(p.rank(), i, m))[i];
}

FriezeTable point_table(const TropPoint& p, Int m0, Int m1) {
    if (m1 < m0) throw InvalidInput("empty window");
    FriezeTable t{m0, m1, std::vector<IntVec>(p.rank())};
    for (std::size_t i = 0; i < p.rank(); ++i)
        for (Int m = m0; m <= m1; ++m) t.rows[i].push_back(point_value(p, i, m));
    return t;
}

namespace {

FriezeFunction certified(FriezeKind kind, const CartanMatrix& a, const TropPoint& p, Int m0, Int m1) {
    IntVec s(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) s[i] = point_value(p, i, 0);
    FriezeFunction f(kind, a, std::move(s));
    if (f.window(m0, m1) != point_table(p, m0, m1))
        throw RouteDisagreement("coordinate readback differs from the " + to_string(kind) + " recursion");
    return f;
}

}  // namespace

FriezeFunction f_from_trop_point(const TropPoint& delta, Int m0, Int m1) {
    if (delta.space() != TropSpace::A) throw InvalidInput("tropical friezes come from points of an A-space");
    return certified(FriezeKind::TropicalFrieze, cartan_of_pattern(delta.pattern(), true), delta, m0, m1);
}

FriezeFunction k_from_trop_point(const TropPoint& rho, Int m0, Int m1) {
    if (rho.space() != TropSpace::Y) throw InvalidInput("cluster-additive functions come from points of a Y-space");
    return certified(FriezeKind::ClusterAdditive, cartan_of_pattern(rho.pattern(), false), rho, m0, m1);
}

TropPoint trop_point_of_frieze(const FriezeFunction& f) {
    if (f.kind() != FriezeKind::TropicalFrieze) throw InvalidInput("expected a tropical frieze");
    return TropPoint::on_A(B_of(f.cartan()).matrix(), f.slice(0));
}

TropPoint trop_point_of_cluster_additive(const FriezeFunction& k) {
    if (k.kind() != FriezeKind::ClusterAdditive) throw InvalidInput("expected a cluster-additive function");
    return TropPoint::on_Y(B_of(k.cartan()).matrix(), EA_apply(k.cartan(), PLSign::Plus, k.slice(0)));
}

IntVec EA_apply(const CartanMatrix& a, PLSign sign, std::span<const Int> d) {
    const std::size_t r = a.rank();
    if (d.size() != r) throw DimensionMismatch("vector length differs from rank");
    IntVec out(d.begin(), d.end());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const bool used = sign == PLSign::Plus ? j < i : j > i;
            if (used) out[i] = checked::add(out[i], checked::mul(a(j, i), checked::pos(d[j])));
        }
    return out;
}

IntVec EA_invert(const CartanMatrix& a, PLSign sign, std::span<const Int> v) {
    const std::size_t r = a.rank();
    if (v.size() != r) throw DimensionMismatch("vector length differs from rank");
    IntVec d(r, 0);
    auto solve = [&](std::size_t i) {
        Int x = v[i];
        for (std::size_t j = 0; j < r; ++j) {
            const bool used = sign == PLSign::Plus ? j < i : j > i;
            if (used) x = checked::sub(x, checked::mul(a(j, i), checked::pos(d[j])));
        }
        d[i] = x;
    };
    if (sign == PLSign::Plus) {
        for (std::size_t i = 0; i < r; ++i) solve(i);
    } else {
        for (std::size_t i = r; i-- > 0;) solve(i);
    }
    return d;
}

IntVec slice_step(const CartanMatrix& a, std::span<const Int> s) {
    return EA_invert(a, PLSign::Plus, negated(EA_apply(a, PLSign::Minus, s)));
}

IntVec slice_step_back(const CartanMatrix& a, std::span<const Int> s) {
    return EA_invert(a, PLSign::Minus, negated(EA_apply(a, PLSign::Plus, s)));
}

FriezeFunction shift(const FriezeFunction& f) { return FriezeFunction(f.kind(), f.cartan(), f.slice(-1), 0); }

TropPoint shift_trop(const TropPoint& rho) {
    if (rho.space() != TropSpace::Y) throw InvalidInput("shift acts on points of a Y-space");
    const CartanMatrix a = cartan_of_pattern(rho.pattern(), false);
    const IntVec prev = EA_invert(a, PLSign::Minus, negated(rho.root_coords()));
    return TropPoint::on_Y(rho.pattern(), EA_apply(a, PLSign::Plus, prev));
}

FriezeFunction ensemble_map_friezes(const FriezeFunction& f) {
    if (f.kind() != FriezeKind::TropicalFrieze) throw InvalidInput("ensemble map acts on tropical friezes");
    const CartanMatrix& a = f.cartan();
    const IntVec s0 = f.slice(0), s1 = f.slice(1);
    IntVec k(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i)
        k[i] = frieze_rhs(FriezeKind::Additive, a, i, s0, s1);
    return FriezeFunction(FriezeKind::ClusterAdditive, a, std::move(k));
}

TropPoint g_vector_of_generic_A(const CartanMatrix& a, std::size_t i, Int m) {
    IntVec e(a.rank(), 0);
    e[i] = 1;
    return g_vector_of_cluster_monomial(B_of(a).matrix(), canonical_address(a.rank(), i, m), e);
}

TropPoint g_vector_of_generic_Y(const CartanMatrix& a, std::size_t i, Int m) {
    IntVec e(a.rank(), 0);
    e[i] = 1;
    return g_vector_of_Y_monomial(B_of(a).matrix(), canonical_address(a.rank(), i, m), e);
}

namespace {

FriezeTable valuation_table(const CartanMatrix& a, const RationalFunction& f, bool y_side, Int m0, Int m1) {
    FriezeTable t{m0, m1, std::vector<IntVec>(a.rank())};
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (Int m = m0; m <= m1; ++m) {
            const TropPoint g = y_side ? g_vector_of_generic_A(a, i, m) : g_vector_of_generic_Y(a, i, m);
            t.rows[i].push_back(trop_eval(f, g.root_coords()).value);
        }
    return t;
}

}  // namespace

FriezeFunction f_from_admissible_y(const CartanMatrix& a, const RationalFunction& y, std::size_t depth, Int m0,
                                   Int m1) {
    const FriezeTable t = valuation_table(a, y, true, std::min<Int>(m0, 0), std::max<Int>(m1, 0));
    IntVec s(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) s[i] = t.at(i, 0);
    const TropPoint delta = TropPoint::on_A(B_of(a).matrix().transpose(), s);
    if (check_admissible_Y(y, delta, depth).verdict == Verdict::No)
        throw NotAdmissible("element is not admissible for the point read from its valuations");
    FriezeFunction f(FriezeKind::TropicalFrieze, a.transpose(), std::move(s));
    if (f.window(t.m0, t.m1) != t) throw RouteDisagreement("valuation table differs from the frieze recursion");
    return f;
}

FriezeFunction k_from_admissible_x(const CartanMatrix& a, const RationalFunction& x, std::size_t depth, Int m0,
                                   Int m1) {
    const FriezeTable t = valuation_table(a, x, false, std::min<Int>(m0, 0), std::max<Int>(m1, 0));
    IntVec s(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) s[i] = t.at(i, 0);
    FriezeFunction k(FriezeKind::ClusterAdditive, a, std::move(s));
    if (check_admissible_A(x, trop_point_of_cluster_additive(k), depth).verdict == Verdict::No)
        throw NotAdmissible("element is not admissible for the point read from its valuations");
    if (k.window(t.m0, t.m1) != t) throw RouteDisagreement("valuation table differs from the cluster-additive recursion");
    return k;
}

}  // namespace tropfrieze
