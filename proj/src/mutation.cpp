#include "tropfrieze/mutation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace tropfrieze {

namespace {

IntVec find_symmetrizer(const IntMatrix& b) {
    const std::size_t n = b.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (b(i, i) != 0) throw InvalidInput("mutation matrix has a nonzero diagonal entry");
        for (std::size_t j = 0; j < n; ++j) {
            const Int x = b(i, j), y = b(j, i);
            if ((x == 0) != (y == 0) || (x != 0 && (x > 0) == (y > 0)))
                throw InvalidInput("mutation matrix violates the sign condition b_ij b_ji < 0");
        }
    }
    std::vector<mpq_class> d(n, 0);
    std::vector<int> component(n, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (component[s] >= 0) continue;
        component[s] = ncomp;
        d[s] = 1;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            std::size_t i = queue.front();
            queue.pop_front();
            for (std::size_t j = 0; j < n; ++j) {
                if (b(i, j) == 0) continue;
                mpq_class dj = -d[i] * mpq_class(b(i, j)) / mpq_class(b(j, i));
                if (component[j] < 0) {
                    component[j] = ncomp;
                    d[j] = dj;
                    queue.push_back(j);
                } else if (d[j] != dj) {
                    throw InvalidInput("mutation matrix is not skew-symmetrizable");
                }
            }
        }
        ++ncomp;
    }
    IntVec out(n);
    for (int c = 0; c < ncomp; ++c) {
        mpz_class l = 1, g = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (component[i] == c) l = lcm(l, d[i].get_den());
        for (std::size_t i = 0; i < n; ++i)
            if (component[i] == c) g = gcd(g, mpz_class(d[i] * l));
        for (std::size_t i = 0; i < n; ++i)
            if (component[i] == c) {
                mpz_class v = mpz_class(d[i] * l) / g;
                if (!v.fits_slong_p()) throw Overflow("symmetrizer entry too large");
                out[i] = v.get_si();
            }
    }
    return out;
}

void check_symmetrizer(const IntMatrix& b, const IntVec& d) {
    if (d.size() != b.rows()) throw DimensionMismatch("symmetrizer length differs from matrix size");
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] <= 0) throw InvalidInput("symmetrizer entries must be positive");
        for (std::size_t j = 0; j < d.size(); ++j)
            if (checked::mul(d[i], b(i, j)) != checked::neg(checked::mul(d[j], b(j, i))))
                throw InvalidInput("D * B is not skew-symmetric");
    }
}

}  // namespace

MutationMatrix::MutationMatrix(IntMatrix b) : b_(std::move(b)) {
    if (!b_.is_square()) throw DimensionMismatch("mutation matrix must be square");
    d_ = find_symmetrizer(b_);
    check_symmetrizer(b_, d_);
}

MutationMatrix::MutationMatrix(IntMatrix b, IntVec symmetrizer) : b_(std::move(b)), d_(std::move(symmetrizer)) {
    if (!b_.is_square()) throw DimensionMismatch("mutation matrix must be square");
    check_symmetrizer(b_, d_);
}

MutationMatrix MutationMatrix::transpose() const { return MutationMatrix(b_.transpose()); }

IntMatrix mutate_matrix(const IntMatrix& b, std::size_t k) {
    if (k >= b.cols() || k >= b.rows()) throw InvalidInput("mutation direction out of range");
    IntMatrix out = b;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (i == k || j == k) {
                out(i, j) = checked::neg(b(i, j));
            } else {
                const Int pos = checked::mul(checked::pos(b(i, k)), checked::pos(b(k, j)));
                const Int neg = checked::mul(checked::pos(-b(i, k)), checked::pos(-b(k, j)));
                out(i, j) = checked::sub(checked::add(b(i, j), pos), neg);
            }
        }
    return out;
}

MutationMatrix mutate_matrix(const MutationMatrix& b, std::size_t k) {
    return MutationMatrix(mutate_matrix(b.matrix(), k), b.symmetrizer());
}

TreeAddress TreeAddress::from_word(std::span<const int> word) {
    TreeAddress a;
    for (int k : word) a = a.then(k);
    return a;
}

TreeAddress TreeAddress::then(int k) const {
    if (k < 0) throw InvalidInput("negative mutation direction");
    TreeAddress out = *this;
    if (!out.word_.empty() && out.word_.back() == k) {
        out.word_.pop_back();
    } else {
        out.word_.push_back(k);
    }
    return out;
}

std::string TreeAddress::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < word_.size(); ++i) s += (i ? "," : "") + std::to_string(word_[i] + 1);
    return s + ")";
}

std::vector<int> tree_path(const TreeAddress& from, const TreeAddress& to) {
    const auto& a = from.word();
    const auto& b = to.word();
    std::size_t common = 0;
    while (common < a.size() && common < b.size() && a[common] == b[common]) ++common;
    std::vector<int> path;
    for (std::size_t j = a.size(); j-- > common;) path.push_back(a[j]);
    for (std::size_t j = common; j < b.size(); ++j) path.push_back(b[j]);
    return path;
}

TreeAddress canonical_address(std::size_t rank, std::size_t i, Int m) {
    if (rank == 0 || i >= rank) throw InvalidInput("frieze index out of range");
    const Int r = static_cast<Int>(rank);
    const Int position = checked::add(checked::mul(m, r), static_cast<Int>(i));
    std::vector<int> word;
    if (position >= 0) {
        for (Int j = 0; j < position; ++j) word.push_back(static_cast<int>(j % r));
    } else {
        for (Int j = 0; j < -position; ++j) word.push_back(static_cast<int>(r - 1 - j % r));
    }
    return TreeAddress::from_word(word);
}

IntMatrix matrix_at(const IntMatrix& b0, const TreeAddress& addr) {
    IntMatrix b = b0;
    for (int k : addr.word()) b = mutate_matrix(b, static_cast<std::size_t>(k));
    return b;
}

Seed root_seed(SeedKind kind, const MutationMatrix& b0, std::size_t mutable_count) {
    const std::size_t n = b0.size();
    if (mutable_count > n) throw InvalidInput("mutable count exceeds matrix size");
    Seed s{b0, {}, kind, TreeAddress{}, mutable_count};
    for (std::size_t i = 0; i < n; ++i) s.cluster.push_back(RationalFunction::variable(n, i));
    return s;
}

Seed root_seed(SeedKind kind, const MutationMatrix& b0) { return root_seed(kind, b0, b0.size()); }

Seed mutate_A_seed(const Seed& s, std::size_t k) {
    if (s.kind != SeedKind::A) throw InvalidInput("A-mutation applied to a Y-seed");
    if (k >= s.mutable_count) throw InvalidInput("mutation direction out of range");
    const std::size_t n = s.matrix.size();
    RationalFunction plus = RationalFunction::constant(n, 1);
    RationalFunction minus = RationalFunction::constant(n, 1);
    for (std::size_t j = 0; j < n; ++j) {
        const Int b = s.matrix(j, k);
        if (b > 0) plus = plus * s.cluster[j].pow(b);
        if (b < 0) minus = minus * s.cluster[j].pow(-b);
    }
    Seed out = s;
    out.cluster[k] = (plus + minus) / s.cluster[k];
    out.matrix = mutate_matrix(s.matrix, k);
    out.address = s.address.then(static_cast<int>(k));
    return out;
}

Seed mutate_Y_seed(const Seed& s, std::size_t k) {
    if (s.kind != SeedKind::Y) throw InvalidInput("Y-mutation applied to an A-seed");
    if (k >= s.mutable_count) throw InvalidInput("mutation direction out of range");
    const std::size_t n = s.matrix.size();
    const RationalFunction& yk = s.cluster[k];
    const RationalFunction one_plus = RationalFunction::constant(n, 1) + yk;
    Seed out = s;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == k) {
            out.cluster[i] = yk.inverse();
            continue;
        }
        const Int b = s.matrix(k, i);
        if (b == 0) continue;
        RationalFunction v = s.cluster[i];
        if (b > 0) v = v * yk.pow(b);
        v = v * one_plus.pow(-b);
        out.cluster[i] = std::move(v);
    }
    out.matrix = mutate_matrix(s.matrix, k);
    out.address = s.address.then(static_cast<int>(k));
    return out;
}

Seed mutate_seed(const Seed& s, std::size_t k) {
    return s.kind == SeedKind::A ? mutate_A_seed(s, k) : mutate_Y_seed(s, k);
}

Pattern::Pattern(SeedKind kind, MutationMatrix b0) : Pattern(kind, b0, b0.size()) {}

Pattern::Pattern(SeedKind kind, MutationMatrix b0, std::size_t mutable_count)
    : kind_(kind), root_(root_seed(kind, b0, mutable_count)) {}

Seed Pattern::at(const TreeAddress& addr) const {
    for (int k : addr.word())
        if (static_cast<std::size_t>(k) >= root_.mutable_count) throw InvalidInput("address uses a frozen direction");
    std::lock_guard lock(mutex_);
    const auto& word = addr.word();
    std::size_t start = word.size();
    const Seed* base = nullptr;
    for (;; --start) {
        if (start == 0) {
            base = &root_;
            break;
        }
        auto it = memo_.find(std::vector<int>(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(start)));
        if (it != memo_.end()) {
            base = &it->second;
            break;
        }
    }
    Seed current = *base;
    for (std::size_t j = start; j < word.size(); ++j) {
        current = mutate_seed(current, static_cast<std::size_t>(word[j]));
        memo_.emplace(current.address.word(), current);
    }
    return current;
}

std::shared_ptr<const Pattern> shared_pattern(SeedKind kind, const MutationMatrix& b0) {
    static std::mutex registry_mutex;
    static std::map<std::pair<int, IntMatrix>, std::shared_ptr<const Pattern>> registry;
    std::lock_guard lock(registry_mutex);
    auto key = std::make_pair(static_cast<int>(kind), b0.matrix());
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;
    auto p = std::make_shared<const Pattern>(kind, b0);
    registry.emplace(std::move(key), p);
    return p;
}

Seed seed_at(SeedKind kind, const MutationMatrix& b0, const TreeAddress& addr) {
    return shared_pattern(kind, b0)->at(addr);
}

MutationMatrix principal_matrix(const MutationMatrix& b) {
    const std::size_t r = b.size();
    IntMatrix m(2 * r, 2 * r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) m(i, j) = b(i, j);
        m(i, r + i) = -1;
        m(r + i, i) = 1;
    }
    IntVec d = b.symmetrizer();
    d.insert(d.end(), b.symmetrizer().begin(), b.symmetrizer().end());
    return MutationMatrix(std::move(m), std::move(d));
}

namespace {

std::shared_ptr<const Pattern> shared_principal_pattern(const MutationMatrix& b0) {
    static std::mutex registry_mutex;
    static std::map<IntMatrix, std::shared_ptr<const Pattern>> registry;
    std::lock_guard lock(registry_mutex);
    auto it = registry.find(b0.matrix());
    if (it != registry.end()) return it->second;
    auto p = std::make_shared<const Pattern>(SeedKind::A, principal_matrix(b0), b0.size());
    registry.emplace(b0.matrix(), p);
    return p;
}

}  // namespace

PrincipalSeed principal_pattern_at(const MutationMatrix& b0, const TreeAddress& addr) {
    const std::size_t r = b0.size();
    Seed s = shared_principal_pattern(b0)->at(addr);
    PrincipalSeed out;
    out.b = s.matrix.matrix().block(0, 0, r, r);
    out.c = s.matrix.matrix().block(r, 0, r, r);
    out.u.assign(s.cluster.begin(), s.cluster.begin() + static_cast<std::ptrdiff_t>(r));
    out.p.assign(s.cluster.begin() + static_cast<std::ptrdiff_t>(r), s.cluster.end());
    out.address = addr;
    return out;
}

GCFData extract_gcf(const MutationMatrix& b0, const TreeAddress& addr) {
    const std::size_t r = b0.size();
    PrincipalSeed s = principal_pattern_at(b0, addr);
    GCFData out{IntMatrix(r, r), s.c, {}};
    for (std::size_t i = 0; i < r; ++i) {
        const RationalFunction& u = s.u[i];
        if (!u.is_laurent()) throw RouteDisagreement("principal cluster variable is not a Laurent polynomial");
        LaurentPoly f(r);
        bool found_g = false;
        for (const auto& [e, c] : u.num().terms()) {
            Exponent pe(e.begin() + static_cast<std::ptrdiff_t>(r), e.end());
            if (std::all_of(pe.begin(), pe.end(), [](Int v) { return v == 0; })) {
                if (found_g || c != 1) throw RouteDisagreement("principal cluster variable has no unique g-vector term");
                found_g = true;
                for (std::size_t j = 0; j < r; ++j) out.g(j, i) = e[j];
            }
            f.add_scaled(LaurentPoly::monomial(Exponent(r, 0), c), 1, pe);
        }
        if (!found_g) throw RouteDisagreement("principal cluster variable has no p-free term");
        out.f.push_back(std::move(f));
    }
    return out;
}

bool separation_check(const MutationMatrix& b0, const TreeAddress& addr) {
    const std::size_t r = b0.size();
    const GCFData gcf = extract_gcf(b0, addr);
    const Seed y = seed_at(SeedKind::Y, b0, addr);
    const IntMatrix bt = matrix_at(b0.matrix(), addr);
    for (std::size_t j = 0; j < r; ++j) {
        RationalFunction expected = RationalFunction::monomial(gcf.c.col(j));
        for (std::size_t i = 0; i < r; ++i)
            if (bt(i, j) != 0) expected = expected * RationalFunction(gcf.f[i]).pow(bt(i, j));
        if (!(expected == y.cluster[j])) return false;
    }
    return true;
}

bool is_cluster_monomial(const MutationMatrix& b0, const TreeAddress& addr, std::span<const Int> m) {
    (void)addr;
    if (m.size() != b0.size()) throw DimensionMismatch("exponent length differs from rank");
    return all_nonnegative(m);
}

bool is_global_Y_monomial(const MutationMatrix& b0, const TreeAddress& addr, std::span<const Int> m) {
    if (m.size() != b0.size()) throw DimensionMismatch("exponent length differs from rank");
    return all_nonnegative(matrix_at(b0.matrix(), addr).right_mul(m));
}

Seed canonical_form(const Seed& s) {
    const std::size_t n = s.cluster.size();
    const std::size_t r = s.mutable_count;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(r), [&](std::size_t a, std::size_t b) {
        return glex_compare(s.cluster[a], s.cluster[b]) < 0;
    });
    IntMatrix m(n, n);
    IntVec d(n);
    Seed out = s;
    for (std::size_t i = 0; i < n; ++i) {
        out.cluster[i] = s.cluster[perm[i]];
        d[i] = s.matrix.symmetrizer()[perm[i]];
        for (std::size_t j = 0; j < n; ++j) m(i, j) = s.matrix(perm[i], perm[j]);
    }
    out.matrix = MutationMatrix(std::move(m), std::move(d));
    return out;
}

std::string canonical_key(const Seed& s) {
    Seed c = canonical_form(s);
    std::string key;
    for (const auto& v : c.cluster) key += v.to_string() + ";";
    return key + c.matrix.matrix().to_string();
}

ExchangeGraph enumerate_exchange_graph(SeedKind kind, const MutationMatrix& b0, std::size_t max_seeds) {
    ExchangeGraph g;
    std::unordered_map<std::string, std::size_t> seen;
    std::map<std::string, RationalFunction> vars;
    Seed root = root_seed(kind, b0);
    seen.emplace(canonical_key(root), 0);
    g.seeds.push_back(root);
    for (std::size_t idx = 0; idx < g.seeds.size(); ++idx) {
        const Seed current = g.seeds[idx];
        for (std::size_t i = 0; i < current.mutable_count; ++i) vars.emplace(current.cluster[i].to_string(), current.cluster[i]);
        for (std::size_t k = 0; k < current.mutable_count; ++k) {
            Seed next = mutate_seed(current, k);
            auto [it, inserted] = seen.emplace(canonical_key(next), g.seeds.size());
            if (!inserted) continue;
            if (g.seeds.size() >= max_seeds)
                throw BudgetExceeded("exchange graph exceeds the seed budget of " + std::to_string(max_seeds));
            g.seeds.push_back(std::move(next));
        }
    }
    for (auto& [k, v] : vars) g.variables.push_back(v);
    std::sort(g.variables.begin(), g.variables.end(),
              [](const auto& a, const auto& b) { return glex_compare(a, b) < 0; });
    return g;
}

}  // namespace tropfrieze
