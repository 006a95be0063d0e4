#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropfrieze/cartan.hpp"
#include "tropfrieze/frieze.hpp"
#include "tropfrieze/tropical.hpp"

namespace tropfrieze {

struct Classification {
    bool finite = false;
    std::vector<std::vector<std::size_t>> blocks;  // indecomposable components, 0-based indices
    std::vector<mpz_class> leading_minors;        // of diag(D) A
};

// Finite type iff diag(D) A is positive definite.
Classification classify(const CartanMatrix& a);

struct GridPoint {
    std::size_t i = 0;
    Int m = 0;
    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Finite-type data for the Coxeter element c = s_1 ... s_r acting on weights in the omega-basis.
struct RootSystemData {
    CartanMatrix cartan;
    std::vector<IntVec> positive_roots;  // in the basis of simple roots, sorted
    std::vector<std::size_t> star;       // c^{h(i;c)} omega_i = -omega_{star[i]}
    IntVec h;                            // h(i;c)
    Int coxeter_number = 0;              // order of c

    std::size_t domain_size() const;
    // F(i,m) = (i*, m + 1 + h(i*;c)).
    GridPoint glide(GridPoint p) const;
    GridPoint glide_inverse(GridPoint p) const;
    // (i, m) with 0 <= m <= h(i;c), in increasing (m, i) order.
    std::vector<GridPoint> fundamental_domain() const;
    bool in_domain(GridPoint p) const;
    // Representative in the fundamental domain of the orbit of p.
    GridPoint reduce(GridPoint p) const;
};

// Throws NotFiniteType.
RootSystemData coxeter_data(const CartanMatrix& a);
// Shared, computed once per Cartan matrix.
const RootSystemData& root_data(const CartanMatrix& a);

// c applied to a weight in the omega-basis.
IntVec coxeter_apply(const CartanMatrix& a, std::span<const Int> weight);

struct PeriodicityReport {
    std::size_t checks = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks x(F(i,m)) = x(i,m) and y(F(i,m)) = y(i,m) for m in [m0, m1] when `generic`, and
// f(F(i,m)) = f(i,m) for every sample function.
PeriodicityReport verify_periodicity(const CartanMatrix& a, Int m0, Int m1, std::span<const FriezeFunction> samples,
                                     bool generic = true);

struct Monomial {
    TreeAddress address;
    IntVec exponents;
    RationalFunction value;
};

// Cluster monomial x_t^{-rho_t} of the A-pattern of B^T at a vertex where -rho_t >= 0 (rho in Y_B).
Monomial mono_from_gvector_A(const TropPoint& rho);
// Global Y-monomial y_t^{-delta_t} of the Y-pattern of B at a vertex where -delta_t B_t^T >= 0 (delta in A_{B^T}).
Monomial mono_from_gvector_Y(const TropPoint& delta);

struct PairingResult {
    Int value = 0;
    Int via_x = 0;       // val_delta(x_rho)
    Int via_y = 0;       // val_rho(y_delta)
    Int via_domain = 0;  // sum over D_A of f_delta(i,m) [-k_rho(i,m)]+
    Int via_max = 0;     // max over vertices of -delta_t rho_t^T
};

// delta in A_{B^T}, rho in Y_B with B = B_A. Throws RouteDisagreement unless all routes agree.
PairingResult pairing(const CartanMatrix& a, const TropPoint& delta, const TropPoint& rho);

struct DomainProduct {
    std::map<GridPoint, Int> exponents;  // positive exponents only
    RationalFunction value;
};

// x_rho = prod_{D_A} x(i,m)^{[-k_rho(i,m)]+}.
DomainProduct x_from_rho(const CartanMatrix& a, const TropPoint& rho);

// F(i,m) for 0 <= m <= m_max via F(i,0) = 1 and
// F(i,m) F(i,m+1) = p^{[-c(i,m)]+} + p^{[c(i,m)]+} prod_{j>i} F(j,m)^{-a_ji} prod_{j<i} F(j,m+1)^{-a_ji}.
std::map<GridPoint, LaurentPoly> Fim_recursion(const CartanMatrix& a, Int m_max);

// y_delta = y^{-delta_{t0}} prod_{D_A} F(i,m)(y)^{[-k(i,m-1)]+} with k read from the point of Y_{-B^T}
// with coords -delta_{t0} B^T at t0.
DomainProduct y_from_delta(const CartanMatrix& a, const TropPoint& delta);

// Multiplicities [-k(i,m)]+ over D_A; throws RouteDisagreement unless the hammock sum reproduces k.
std::map<GridPoint, Int> decompose_hammocks(const FriezeFunction& k);

struct DualityReport {
    std::size_t pairs = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// (x(i,m) || x(j,n))_d = (x'(j,n) || x'(i,m))_d over D_A pairs, x from the A-pattern of B and x' from that of B^T.
DualityReport d_duality_check(const CartanMatrix& a);

// Cluster monomial z = z_w^m of A_B: the g-vector of x_w^m in A_{-B} equals the shift of minus the g-vector of z.
bool phi_gvector_law(const CartanMatrix& a, const TreeAddress& w, std::span<const Int> m);

}  // namespace tropfrieze
