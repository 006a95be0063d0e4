#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "tropfrieze/matrix.hpp"
#include "tropfrieze/mutation.hpp"
#include "tropfrieze/rational_function.hpp"

namespace tropfrieze {

// delta'_k = -delta_k + max(sum_j [m_jk]+ delta_j, sum_j [-m_jk]+ delta_j), using column k of m.
IntVec trop_mutate_A(std::span<const Int> coords, const IntMatrix& m, std::size_t k);
// rho'_k = -rho_k and rho'_i = rho_i + [m_ki]+ rho_k - m_ki [rho_k]+, using row k of m.
IntVec trop_mutate_Y(std::span<const Int> coords, const IntMatrix& m, std::size_t k);

enum class TropSpace { A, Y, Yprin };

std::string to_string(TropSpace s);
TropSpace trop_space_from_string(const std::string& s);

// Tropical point of the A- or Y-space of the pattern with initial matrix `pattern`.
// For Yprin the pattern is [[M, I], [-I, 0]] with only the first r directions mutable.
// Copies share one synchronized coordinate cache; the point itself never changes.
class TropPoint {
public:
    TropPoint(TropSpace space, IntMatrix pattern, std::size_t mutable_count, TreeAddress anchor, IntVec coords);

    static TropPoint on_A(const IntMatrix& m, IntVec coords, TreeAddress anchor = {});
    static TropPoint on_Y(const IntMatrix& m, IntVec coords, TreeAddress anchor = {});
    // Point of the principal Y-space over the r x r matrix m; coords have length 2r.
    static TropPoint on_Yprin(const IntMatrix& m, IntVec coords, TreeAddress anchor = {});

    TropSpace space() const { return space_; }
    const IntMatrix& pattern() const { return pattern_; }
    std::size_t rank() const { return mutable_count_; }
    std::size_t dimension() const { return pattern_.rows(); }
    const TreeAddress& anchor() const { return anchor_; }
    const IntVec& anchor_coords() const { return anchor_coords_; }

    IntVec coords_at(const TreeAddress& addr) const;
    IntMatrix matrix_at(const TreeAddress& addr) const;
    IntVec root_coords() const { return coords_at(TreeAddress{}); }

    // Same point re-anchored at addr.
    TropPoint reanchored(const TreeAddress& addr) const;

    friend bool operator==(const TropPoint& a, const TropPoint& b);

private:
    struct Vertex {
        IntVec coords;
        IntMatrix matrix;
    };
    struct Cache {
        std::mutex mutex;
        std::map<std::vector<int>, Vertex> vertices;
    };

    Vertex step(const Vertex& v, std::size_t k) const;

    TropSpace space_;
    IntMatrix pattern_;
    std::size_t mutable_count_;
    TreeAddress anchor_;
    IntVec anchor_coords_;
    std::shared_ptr<Cache> cache_;
};

// Y-point of the same pattern with coords delta_t M_t.
TropPoint p_map(const TropPoint& delta);

// Principal Y-point over the same r x r pattern with coords (delta_t M_t, delta_t C_t^T).
TropPoint beta_map(const TropPoint& delta);

// g-vector of the cluster monomial x_t^m of the A-pattern of b^T: the Y-point of b with coords -m at addr.
TropPoint g_vector_of_cluster_monomial(const IntMatrix& b, const TreeAddress& addr, std::span<const Int> m);
// g-vector of the global Y-monomial y_t^m of the Y-pattern of b: the A-point of b^T with coords -m at addr.
TropPoint g_vector_of_Y_monomial(const IntMatrix& b, const TreeAddress& addr, std::span<const Int> m);

// d-tropical point of the i-th variable at addr: coords -e_i at addr in the given space.
TropPoint d_trop_point(TropSpace space, const IntMatrix& pattern, const TreeAddress& addr, std::size_t i);

// Tropical evaluation of f (in the initial variables) at the d-tropical point of the i-th variable at addr.
Int d_compat_degree(TropSpace space, const IntMatrix& pattern, const TreeAddress& addr, std::size_t i,
                    const RationalFunction& f);

// Entry i of the denominator vector of f written in the cluster at addr of the pattern.
Int denominator_exponent(SeedKind kind, const IntMatrix& pattern, const TreeAddress& addr, std::size_t i,
                         const RationalFunction& f);

// f (written in the root cluster) rewritten in the cluster at addr of the pattern.
RationalFunction express_in_cluster(SeedKind kind, const IntMatrix& pattern, const TreeAddress& addr,
                                    const RationalFunction& f);

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

// Is offset in m * Z>=0^r? Exact when m is square and invertible, otherwise a bounded search.
Verdict in_integer_cone(const IntMatrix& m, std::span<const Int> offset);

struct AdmissibilityReport {
    Verdict verdict = Verdict::Unknown;
    std::size_t vertices_checked = 0;
    bool closed = false;  // every exchange-graph class was reached within depth
    std::string failure;  // first failing vertex, empty unless verdict is No
};

// x (in the root cluster of the A-pattern of rho.pattern()^T) against the Y-point rho.
AdmissibilityReport check_admissible_A(const RationalFunction& x, const TropPoint& rho, std::size_t depth);
// y (in the root cluster of the Y-pattern of delta.pattern()^T) against the A-point delta.
AdmissibilityReport check_admissible_Y(const RationalFunction& y, const TropPoint& delta, std::size_t depth);

}  // namespace tropfrieze
