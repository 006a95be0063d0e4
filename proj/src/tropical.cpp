#include "tropfrieze/tropical.hpp"

#include "tropfrieze/linear.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace tropfrieze {

IntVec trop_mutate_A(std::span<const Int> coords, const IntMatrix& m, std::size_t k) {
    if (coords.size() != m.rows()) throw DimensionMismatch("coordinate length differs from matrix size");
    if (k >= m.cols()) throw InvalidInput("mutation direction out of range");
    Int plus = 0, minus = 0;
    for (std::size_t j = 0; j < m.rows(); ++j) {
        const Int b = m(j, k);
        if (b > 0) plus = checked::add(plus, checked::mul(b, coords[j]));
        if (b < 0) minus = checked::add(minus, checked::mul(-b, coords[j]));
    }
    IntVec out(coords.begin(), coords.end());
    out[k] = checked::add(checked::neg(coords[k]), std::max(plus, minus));
    return out;
}

IntVec trop_mutate_Y(std::span<const Int> coords, const IntMatrix& m, std::size_t k) {
    if (coords.size() != m.cols()) throw DimensionMismatch("coordinate length differs from matrix size");
    if (k >= m.rows()) throw InvalidInput("mutation direction out of range");
    const Int rk = coords[k];
    IntVec out(coords.begin(), coords.end());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i == k) {
            out[i] = checked::neg(rk);
            continue;
        }
        const Int b = m(k, i);
        out[i] = checked::sub(checked::add(coords[i], checked::mul(checked::pos(b), rk)),
                              checked::mul(b, checked::pos(rk)));
    }
    return out;
}

std::string to_string(TropSpace s) {
    switch (s) {
        case TropSpace::A: return "A";
        case TropSpace::Y: return "Y";
        case TropSpace::Yprin: return "Yprin";
    }
    return "?";
}

TropSpace trop_space_from_string(const std::string& s) {
    if (s == "A") return TropSpace::A;
    if (s == "Y") return TropSpace::Y;
    if (s == "Yprin") return TropSpace::Yprin;
    throw InvalidInput("unknown tropical space '" + s + "'");
}

TropPoint::TropPoint(TropSpace space, IntMatrix pattern, std::size_t mutable_count, TreeAddress anchor, IntVec coords)
    : space_(space),
      pattern_(std::move(pattern)),
      mutable_count_(mutable_count),
      anchor_(std::move(anchor)),
      anchor_coords_(std::move(coords)),
      cache_(std::make_shared<Cache>()) {
    if (!pattern_.is_square()) throw DimensionMismatch("pattern matrix must be square");
    if (mutable_count_ > pattern_.rows()) throw InvalidInput("mutable count exceeds pattern size");
    if (anchor_coords_.size() != pattern_.rows()) throw DimensionMismatch("coordinate length differs from pattern size");
    for (int k : anchor_.word())
        if (static_cast<std::size_t>(k) >= mutable_count_) throw InvalidInput("anchor uses a frozen direction");
    MutationMatrix validated(pattern_);
    (void)validated;
    // Cache the anchor and every ancestor so each address has a cached prefix.
    Vertex v{anchor_coords_, tropfrieze::matrix_at(pattern_, anchor_)};
    std::vector<int> word = anchor_.word();
    cache_->vertices.emplace(word, v);
    while (!word.empty()) {
        const int k = word.back();
        word.pop_back();
        v = step(v, static_cast<std::size_t>(k));
        cache_->vertices.emplace(word, v);
    }
}

TropPoint TropPoint::on_A(const IntMatrix& m, IntVec coords, TreeAddress anchor) {
    return TropPoint(TropSpace::A, m, m.rows(), std::move(anchor), std::move(coords));
}

TropPoint TropPoint::on_Y(const IntMatrix& m, IntVec coords, TreeAddress anchor) {
    return TropPoint(TropSpace::Y, m, m.rows(), std::move(anchor), std::move(coords));
}

TropPoint TropPoint::on_Yprin(const IntMatrix& m, IntVec coords, TreeAddress anchor) {
    const std::size_t r = m.rows();
    IntMatrix big(2 * r, 2 * r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) big(i, j) = m(i, j);
        big(i, r + i) = 1;
        big(r + i, i) = -1;
    }
    return TropPoint(TropSpace::Yprin, std::move(big), r, std::move(anchor), std::move(coords));
}

TropPoint::Vertex TropPoint::step(const Vertex& v, std::size_t k) const {
    Vertex out;
    out.coords = space_ == TropSpace::A ? trop_mutate_A(v.coords, v.matrix, k) : trop_mutate_Y(v.coords, v.matrix, k);
    out.matrix = mutate_matrix(v.matrix, k);
    return out;
}

IntVec TropPoint::coords_at(const TreeAddress& addr) const {
    for (int k : addr.word())
        if (static_cast<std::size_t>(k) >= mutable_count_) throw InvalidInput("address uses a frozen direction");
    std::lock_guard lock(cache_->mutex);
    const auto& word = addr.word();
    std::size_t start = word.size();
    const Vertex* base = nullptr;
    for (;; --start) {
        auto it = cache_->vertices.find(std::vector<int>(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(start)));
        if (it != cache_->vertices.end()) {
            base = &it->second;
            break;
        }
    }
    Vertex current = *base;
    for (std::size_t j = start; j < word.size(); ++j) {
        current = step(current, static_cast<std::size_t>(word[j]));
        cache_->vertices.emplace(std::vector<int>(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(j + 1)),
                                 current);
    }
    return current.coords;
}

IntMatrix TropPoint::matrix_at(const TreeAddress& addr) const {
    coords_at(addr);
    std::lock_guard lock(cache_->mutex);
    return cache_->vertices.at(addr.word()).matrix;
}

TropPoint TropPoint::reanchored(const TreeAddress& addr) const {
    return TropPoint(space_, pattern_, mutable_count_, addr, coords_at(addr));
}

bool operator==(const TropPoint& a, const TropPoint& b) {
    return a.space_ == b.space_ && a.pattern_ == b.pattern_ && a.mutable_count_ == b.mutable_count_ &&
           a.coords_at(b.anchor_) == b.anchor_coords_;
}

TropPoint p_map(const TropPoint& delta) {
    if (delta.space() != TropSpace::A) throw InvalidInput("p-map needs a point of an A-space");
    IntVec coords = delta.matrix_at(delta.anchor()).left_mul(delta.anchor_coords());
    return TropPoint::on_Y(delta.pattern(), std::move(coords), delta.anchor());
}

TropPoint beta_map(const TropPoint& delta) {
    if (delta.space() != TropSpace::A) throw InvalidInput("beta map needs a point of an A-space");
    const std::size_t r = delta.rank();
    TropPoint zero = TropPoint::on_Yprin(delta.pattern(), IntVec(2 * r, 0));
    const IntMatrix top = zero.matrix_at(delta.anchor()).block(0, 0, r, 2 * r);
    return TropPoint::on_Yprin(delta.pattern(), top.left_mul(delta.anchor_coords()), delta.anchor());
}

TropPoint g_vector_of_cluster_monomial(const IntMatrix& b, const TreeAddress& addr, std::span<const Int> m) {
    if (m.size() != b.rows()) throw DimensionMismatch("exponent length differs from rank");
    if (!all_nonnegative(m)) throw NegativeExponent("cluster monomial exponents must be nonnegative");
    return TropPoint::on_Y(b, negated(m), addr);
}

TropPoint g_vector_of_Y_monomial(const IntMatrix& b, const TreeAddress& addr, std::span<const Int> m) {
    if (m.size() != b.rows()) throw DimensionMismatch("exponent length differs from rank");
    if (!all_nonnegative(tropfrieze::matrix_at(b, addr).right_mul(m)))
        throw InvalidInput("Y-monomial is not global: B_t m has a negative entry");
    return TropPoint::on_A(b.transpose(), negated(m), addr);
}

TropPoint d_trop_point(TropSpace space, const IntMatrix& pattern, const TreeAddress& addr, std::size_t i) {
    if (space == TropSpace::Yprin) throw InvalidInput("d-tropical points live in A- or Y-spaces");
    if (i >= pattern.rows()) throw InvalidInput("variable index out of range");
    IntVec coords(pattern.rows(), 0);
    coords[i] = -1;
    return TropPoint(space, pattern, pattern.rows(), addr, std::move(coords));
}

Int d_compat_degree(TropSpace space, const IntMatrix& pattern, const TreeAddress& addr, std::size_t i,
                    const RationalFunction& f) {
    return trop_eval(f, d_trop_point(space, pattern, addr, i).root_coords()).value;
}

namespace {

TreeAddress reversed(const TreeAddress& addr) {
    std::vector<int> w(addr.word().rbegin(), addr.word().rend());
    return TreeAddress::from_word(w);
}

}  // namespace

RationalFunction express_in_cluster(SeedKind kind, const IntMatrix& pattern, const TreeAddress& addr,
                                    const RationalFunction& f) {
    if (addr.is_root()) return f;
    const MutationMatrix bt(tropfrieze::matrix_at(pattern, addr));
    const Seed back = seed_at(kind, bt, reversed(addr));
    return substitute(f, back.cluster);
}

Int denominator_exponent(SeedKind kind, const IntMatrix& pattern, const TreeAddress& addr, std::size_t i,
                         const RationalFunction& f) {
    const RationalFunction g = express_in_cluster(kind, pattern, addr, f);
    if (!g.is_laurent()) throw InvalidInput("element is not a Laurent polynomial in the requested cluster");
    if (g.is_zero()) throw InvalidInput("zero has no denominator vector");
    return checked::neg(g.num().min_exponents()[i]);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

namespace {

bool box_search(const IntMatrix& m, std::span<const Int> offset, IntVec& u, std::size_t idx, Int bound) {
    if (idx == u.size()) return m.right_mul(u) == IntVec(offset.begin(), offset.end());
    for (Int v = 0; v <= bound; ++v) {
        u[idx] = v;
        if (box_search(m, offset, u, idx + 1, bound)) return true;
    }
    return false;
}

}  // namespace

Verdict in_integer_cone(const IntMatrix& m, std::span<const Int> offset) {
    if (offset.size() != m.rows()) throw DimensionMismatch("offset length differs from matrix rows");
    if (m.is_square()) {
        if (auto u = rational_solve(m, offset)) {
            for (const auto& q : *u)
                if (q.get_den() != 1 || q < 0) return Verdict::No;
            return Verdict::Yes;
        }
    }
    Int bound = 1;
    for (Int x : offset) bound = checked::add(bound, x < 0 ? -x : x);
    IntVec u(m.cols(), 0);
    return box_search(m, offset, u, 0, bound) ? Verdict::Yes : Verdict::Unknown;
}

namespace {

// Checks that g * z^shift is 1 + sum c_e z^e with c_e > 0 and every e accepted by `offset_ok`.
template <class OffsetCheck>
Verdict pointed_form(const RationalFunction& g, std::span<const Int> shift, OffsetCheck offset_ok) {
    if (!g.is_laurent()) return Verdict::No;
    const LaurentPoly p = g.num().times_monomial(Exponent(shift.begin(), shift.end()));
    const Exponent zero(p.nvars(), 0);
    if (p.coefficient(zero) != 1) return Verdict::No;
    Verdict out = Verdict::Yes;
    for (const auto& [e, c] : p.terms()) {
        if (c < 0) return Verdict::No;
        if (e == zero) continue;
        const Verdict v = offset_ok(e);
        if (v == Verdict::No) return Verdict::No;
        if (v == Verdict::Unknown) out = Verdict::Unknown;
    }
    return out;
}

template <class VertexCheck>
AdmissibilityReport bfs_admissibility(const IntMatrix& a_pattern, std::size_t depth, VertexCheck check) {
    AdmissibilityReport report;
    const MutationMatrix b0(a_pattern);
    const auto pattern = shared_pattern(SeedKind::A, b0);
    const std::size_t r = a_pattern.rows();
    std::unordered_set<std::string> seen;
    std::deque<std::pair<TreeAddress, std::size_t>> queue;
    seen.insert(canonical_key(pattern->at(TreeAddress{})));
    queue.emplace_back(TreeAddress{}, 0);
    bool unknown = false;
    bool truncated = false;
    while (!queue.empty()) {
        auto [addr, d] = queue.front();
        queue.pop_front();
        const Verdict v = check(addr);
        ++report.vertices_checked;
        if (v == Verdict::No) {
            report.verdict = Verdict::No;
            report.failure = addr.to_string();
            return report;
        }
        if (v == Verdict::Unknown) unknown = true;
        for (std::size_t k = 0; k < r; ++k) {
            TreeAddress next = addr.then(static_cast<int>(k));
            if (next.length() < addr.length()) continue;
            const std::string key = canonical_key(pattern->at(next));
            if (seen.contains(key)) continue;
            if (d == depth) {
                truncated = true;
                continue;
            }
            seen.insert(key);
            queue.emplace_back(std::move(next), d + 1);
        }
    }
    report.closed = !truncated;
    report.verdict = (unknown || truncated) ? Verdict::Unknown : Verdict::Yes;
    return report;
}

}  // namespace

AdmissibilityReport check_admissible_A(const RationalFunction& x, const TropPoint& rho, std::size_t depth) {
    if (rho.space() != TropSpace::Y) throw InvalidInput("A-side admissibility needs a point of a Y-space");
    const IntMatrix a_pattern = rho.pattern().transpose();
    if (x.nvars() != a_pattern.rows()) throw DimensionMismatch("element and point have different ranks");
    return bfs_admissibility(a_pattern, depth, [&](const TreeAddress& addr) {
        const RationalFunction g = express_in_cluster(SeedKind::A, a_pattern, addr, x);
        const IntMatrix mt = tropfrieze::matrix_at(a_pattern, addr);
        return pointed_form(g, rho.coords_at(addr), [&](const Exponent& e) { return in_integer_cone(mt, e); });
    });
}

AdmissibilityReport check_admissible_Y(const RationalFunction& y, const TropPoint& delta, std::size_t depth) {
    if (delta.space() != TropSpace::A) throw InvalidInput("Y-side admissibility needs a point of an A-space");
    const IntMatrix y_pattern = delta.pattern().transpose();
    if (y.nvars() != y_pattern.rows()) throw DimensionMismatch("element and point have different ranks");
    // Exchange-graph classes of the Y-pattern coincide with those of the A-pattern of delta.
    return bfs_admissibility(delta.pattern(), depth, [&](const TreeAddress& addr) {
        const RationalFunction g = express_in_cluster(SeedKind::Y, y_pattern, addr, y);
        return pointed_form(g, delta.coords_at(addr), [](const Exponent& e) {
            return all_nonnegative(e) ? Verdict::Yes : Verdict::No;
        });
    });
}

}  // namespace tropfrieze
