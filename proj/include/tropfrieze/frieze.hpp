#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tropfrieze/cartan.hpp"
#include "tropfrieze/rational_function.hpp"
#include "tropfrieze/tropical.hpp"

namespace tropfrieze {

enum class FriezeKind { Additive, ClusterAdditive, TropicalFrieze };

std::string to_string(FriezeKind k);

// Values on rows i (0-based) and columns m in [m0, m1].
struct FriezeTable {
    Int m0 = 0;
    Int m1 = -1;
    std::vector<IntVec> rows;

    Int at(std::size_t i, Int m) const { return rows.at(i).at(static_cast<std::size_t>(m - m0)); }
    std::string to_tsv() const;
    friend bool operator==(const FriezeTable&, const FriezeTable&) = default;
};

// Integer function on [1,r] x Z determined by one slice and the recursion of its kind:
//   d(i,m) + d(i,m+1) = R(i,m) over sum_{j>i} (-a_ji) d(j,m) + sum_{j<i} (-a_ji) d(j,m+1),
// with R linear (additive), [.]+ per term (cluster-additive) or [.]+ of the sum (tropical frieze).
// Copies share one synchronized memo of slices.
class FriezeFunction {
public:
    FriezeFunction(FriezeKind kind, CartanMatrix cartan, IntVec slice, Int slice_m = 0);

    FriezeKind kind() const { return kind_; }
    const CartanMatrix& cartan() const { return cartan_; }
    std::size_t rank() const { return cartan_.rank(); }

    Int operator()(std::size_t i, Int m) const;
    IntVec slice(Int m) const;
    FriezeTable window(Int m0, Int m1) const;

    // True iff every relation with both columns inside [m0, m1] holds for the given kind.
    bool satisfies(FriezeKind kind, Int m0, Int m1) const;
    bool equal_on(const FriezeFunction& o, Int m0, Int m1) const;

private:
    struct Memo {
        std::mutex mutex;
        std::map<Int, IntVec> slices;
    };

    const IntVec& slice_locked(Int m) const;

    FriezeKind kind_;
    CartanMatrix cartan_;
    std::shared_ptr<Memo> memo_;
};

// Right-hand side of the recursion at (i, m) given the two neighbouring slices.
Int frieze_rhs(FriezeKind kind, const CartanMatrix& a, std::size_t i, std::span<const Int> at_m,
               std::span<const Int> at_m_plus_1);

// Checks the defining relation of `kind` for an arbitrary table.
bool table_satisfies(FriezeKind kind, const CartanMatrix& a, const FriezeTable& t);

FriezeFunction additive_extend(const CartanMatrix& a, IntVec slice);

// Cluster-additive function with slice -e_i at column m.
FriezeFunction hammock(const CartanMatrix& a, std::size_t i, Int m);

// x(i,m): variable i at t(i,m) of the A-pattern of B_A^T. Its relation uses exponents -a_ij.
RationalFunction generic_A_frieze(const CartanMatrix& a, std::size_t i, Int m);
// y(i,m): variable i at t(i,m) of the Y-pattern of B_A.
RationalFunction generic_Y_frieze(const CartanMatrix& a, std::size_t i, Int m);

// Cartan matrix A' with pattern = B_{A'} (or -B_{A'} when allow_negated).
CartanMatrix cartan_of_pattern(const IntMatrix& pattern, bool allow_negated);

// Coordinate i of p at t(i, m).
Int point_value(const TropPoint& p, std::size_t i, Int m);
FriezeTable point_table(const TropPoint& p, Int m0, Int m1);

// Tropical frieze f(i,m) = delta_{t(i,m);i} for an A-point of pattern +-B_{A'}; throws RouteDisagreement
// unless the recursion table equals the coordinate readback on [m0, m1].
FriezeFunction f_from_trop_point(const TropPoint& delta, Int m0 = -6, Int m1 = 6);
// Cluster-additive k(i,m) = rho_{t(i,m);i} for a Y-point of pattern B_{A'}; certified like f_from_trop_point.
FriezeFunction k_from_trop_point(const TropPoint& rho, Int m0 = -6, Int m1 = 6);

// A-point of pattern B_A whose readback is the tropical frieze f.
TropPoint trop_point_of_frieze(const FriezeFunction& f);
// Y-point of pattern B_A whose readback is the cluster-additive function k.
TropPoint trop_point_of_cluster_additive(const FriezeFunction& k);

enum class PLSign { Plus, Minus };

// E+(d)_i = d_i + sum_{j<i} a_ji [d_j]+ ; E-(d)_i = d_i + sum_{j>i} a_ji [d_j]+.
IntVec EA_apply(const CartanMatrix& a, PLSign sign, std::span<const Int> d);
IntVec EA_invert(const CartanMatrix& a, PLSign sign, std::span<const Int> v);

// k|_{m+1} = (E+)^{-1}(-E-(k|_m)) and its inverse.
IntVec slice_step(const CartanMatrix& a, std::span<const Int> s);
IntVec slice_step_back(const CartanMatrix& a, std::span<const Int> s);

// k_[1](i,m) = k(i,m-1).
FriezeFunction shift(const FriezeFunction& f);
// (rho[1])_{t0} = E+((E-)^{-1}(-rho_{t0})) for a Y-point of pattern B_A.
TropPoint shift_trop(const TropPoint& rho);

// k(i,m) = sum_{j>i} (-a_ji) f(j,m) + sum_{j<i} (-a_ji) f(j,m+1), a cluster-additive function.
FriezeFunction ensemble_map_friezes(const FriezeFunction& f);

// g-vector of x(i,m) (a Y-point of B_A) and of y(i,m) (an A-point of B_A^T).
TropPoint g_vector_of_generic_A(const CartanMatrix& a, std::size_t i, Int m);
TropPoint g_vector_of_generic_Y(const CartanMatrix& a, std::size_t i, Int m);

// f_y(i,m) = val at the g-vector of x(i,m) of y, a tropical frieze for A^T.
// Throws NotAdmissible when y is certainly not admissible for its own realization.
FriezeFunction f_from_admissible_y(const CartanMatrix& a, const RationalFunction& y, std::size_t depth = 12,
                                   Int m0 = -4, Int m1 = 4);
// k_x(i,m) = val at the g-vector of y(i,m) of x, a cluster-additive function for A.
FriezeFunction k_from_admissible_x(const CartanMatrix& a, const RationalFunction& x, std::size_t depth = 12,
                                   Int m0 = -4, Int m1 = 4);

}  // namespace tropfrieze
