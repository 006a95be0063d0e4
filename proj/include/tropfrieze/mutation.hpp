#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "tropfrieze/matrix.hpp"
#include "tropfrieze/rational_function.hpp"

namespace tropfrieze {

// Square skew-symmetrizable integer matrix. Invariant: diag(D) * B is skew-symmetric.
class MutationMatrix {
public:
    MutationMatrix() = default;
    explicit MutationMatrix(IntMatrix b);
    MutationMatrix(IntMatrix b, IntVec symmetrizer);

    const IntMatrix& matrix() const { return b_; }
    const IntVec& symmetrizer() const { return d_; }
    std::size_t size() const { return b_.rows(); }
    Int operator()(std::size_t i, std::size_t j) const { return b_(i, j); }
    MutationMatrix transpose() const;
    MutationMatrix operator-() const { return MutationMatrix(-b_, d_); }

    friend bool operator==(const MutationMatrix& a, const MutationMatrix& b) { return a.b_ == b.b_; }

private:
    IntMatrix b_;
    IntVec d_;
};

IntMatrix mutate_matrix(const IntMatrix& b, std::size_t k);
MutationMatrix mutate_matrix(const MutationMatrix& b, std::size_t k);

// Reduced word of 0-based directions read from the root. No two consecutive labels are equal.
class TreeAddress {
public:
    TreeAddress() = default;
    static TreeAddress from_word(std::span<const int> word);

    const std::vector<int>& word() const { return word_; }
    std::size_t length() const { return word_.size(); }
    bool is_root() const { return word_.empty(); }
    TreeAddress then(int k) const;
    // Word with 1-based labels, e.g. "(1,2)".
    std::string to_string() const;

    friend bool operator==(const TreeAddress&, const TreeAddress&) = default;
    friend auto operator<=>(const TreeAddress&, const TreeAddress&) = default;

private:
    std::vector<int> word_;
};

// Directions walked from `from` to `to` along the unique tree path.
std::vector<int> tree_path(const TreeAddress& from, const TreeAddress& to);

// Address of t(i, m) on the belt path, i 0-based.
TreeAddress canonical_address(std::size_t rank, std::size_t i, Int m);

// Matrix of the matrix pattern at addr, starting from b0 at the root.
IntMatrix matrix_at(const IntMatrix& b0, const TreeAddress& addr);

enum class SeedKind { A, Y };

// Only the first mutable_count directions mutate; the remaining cluster entries are frozen.
struct Seed {
    MutationMatrix matrix;
    std::vector<RationalFunction> cluster;
    SeedKind kind = SeedKind::A;
    TreeAddress address;
    std::size_t mutable_count = 0;
};

Seed root_seed(SeedKind kind, const MutationMatrix& b0, std::size_t mutable_count);
Seed root_seed(SeedKind kind, const MutationMatrix& b0);
Seed mutate_A_seed(const Seed& s, std::size_t k);
Seed mutate_Y_seed(const Seed& s, std::size_t k);
Seed mutate_seed(const Seed& s, std::size_t k);

// Memoized seed pattern on the tree, keyed by reduced address. Safe for concurrent use.
class Pattern {
public:
    Pattern(SeedKind kind, MutationMatrix b0);
    Pattern(SeedKind kind, MutationMatrix b0, std::size_t mutable_count);

    Seed at(const TreeAddress& addr) const;
    SeedKind kind() const { return kind_; }
    const MutationMatrix& initial_matrix() const { return root_.matrix; }
    std::size_t mutable_count() const { return root_.mutable_count; }

private:
    SeedKind kind_;
    Seed root_;
    mutable std::mutex mutex_;
    mutable std::map<std::vector<int>, Seed> memo_;
};

// Shared pattern for (kind, b0), created on first use.
std::shared_ptr<const Pattern> shared_pattern(SeedKind kind, const MutationMatrix& b0);
Seed seed_at(SeedKind kind, const MutationMatrix& b0, const TreeAddress& addr);

// 2r x 2r matrix [[B, -I], [I, 0]] whose first r directions give principal coefficients.
MutationMatrix principal_matrix(const MutationMatrix& b);

struct PrincipalSeed {
    IntMatrix b;                          // B_t, r x r
    IntMatrix c;                          // C_t, r x r
    std::vector<RationalFunction> u;      // mutable variables in (u_1..u_r, p_1..p_r)
    std::vector<RationalFunction> p;      // frozen variables
    TreeAddress address;
};

PrincipalSeed principal_pattern_at(const MutationMatrix& b0, const TreeAddress& addr);

struct GCFData {
    IntMatrix g;                    // column i: g-vector of u_{t;i}
    IntMatrix c;                    // column i: c-vector
    std::vector<LaurentPoly> f;     // F-polynomials in r variables
};

GCFData extract_gcf(const MutationMatrix& b0, const TreeAddress& addr);

// Checks y_t = y^{C_t} * F_t(y)^{B_t} at addr.
bool separation_check(const MutationMatrix& b0, const TreeAddress& addr);

bool is_cluster_monomial(const MutationMatrix& b0, const TreeAddress& addr, std::span<const Int> m);
bool is_global_Y_monomial(const MutationMatrix& b0, const TreeAddress& addr, std::span<const Int> m);

// Seed with cluster sorted in graded-lex order and the matrix permuted to match.
Seed canonical_form(const Seed& s);
std::string canonical_key(const Seed& s);

inline constexpr std::size_t kDefaultBudget = 10000;

struct ExchangeGraph {
    std::vector<Seed> seeds;                  // one representative per unordered seed, in BFS order
    std::vector<RationalFunction> variables;  // distinct mutable cluster entries, graded-lex sorted
};

// Throws BudgetExceeded when more than max_seeds unordered seeds are found.
ExchangeGraph enumerate_exchange_graph(SeedKind kind, const MutationMatrix& b0,
                                       std::size_t max_seeds = kDefaultBudget);

}  // namespace tropfrieze
