#pragma once

#include <string>
#include <vector>

#include "tropfrieze/matrix.hpp"
#include "tropfrieze/mutation.hpp"

namespace tropfrieze {

// Symmetrizable generalized Cartan matrix.
// Invariants: a_ii = 2, a_ij <= 0 for i != j, a_ij = 0 iff a_ji = 0, and diag(D) A is symmetric.
class CartanMatrix {
public:
    CartanMatrix() = default;
    explicit CartanMatrix(IntMatrix a, std::string name = {});

    const IntMatrix& matrix() const { return a_; }
    const IntVec& symmetrizer() const { return d_; }
    const std::string& name() const { return name_; }
    std::size_t rank() const { return a_.rows(); }
    Int operator()(std::size_t i, std::size_t j) const { return a_(i, j); }
    CartanMatrix transpose() const;

    friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) { return a.a_ == b.a_; }

private:
    IntMatrix a_;
    IntVec d_;
    std::string name_;
};

// b_ij = a_ij for i < j, -a_ij for i > j, zero diagonal.
MutationMatrix B_of(const CartanMatrix& a);

// Bourbaki-labelled Cartan matrix for names A1..A8, B2..B5, C2..C5, D4..D6, E6, F4, G2.
CartanMatrix cartan_by_name(const std::string& name);
std::vector<std::string> registered_cartan_names();

}  // namespace tropfrieze
