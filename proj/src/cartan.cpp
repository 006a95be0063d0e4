#include "tropfrieze/cartan.hpp"

#include <algorithm>

namespace tropfrieze {

namespace {

IntMatrix b_matrix(const IntMatrix& a) {
    const std::size_t r = a.rows();
    IntMatrix b(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (i < j) b(i, j) = a(i, j);
            if (i > j) b(i, j) = checked::neg(a(i, j));
        }
    return b;
}

void link(IntMatrix& a, std::size_t i, std::size_t j, Int aij = -1, Int aji = -1) {
    a(i, j) = aij;
    a(j, i) = aji;
}

IntMatrix chain(std::size_t n) {
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
    for (std::size_t i = 0; i + 1 < n; ++i) link(a, i, i + 1);
    return a;
}

}  // namespace

CartanMatrix::CartanMatrix(IntMatrix a, std::string name) : a_(std::move(a)), name_(std::move(name)) {
    if (!a_.is_square() || a_.rows() == 0) throw DimensionMismatch("Cartan matrix must be square and nonempty");
    for (std::size_t i = 0; i < a_.rows(); ++i)
        for (std::size_t j = 0; j < a_.cols(); ++j) {
            if (i == j && a_(i, j) != 2) throw InvalidInput("Cartan matrix diagonal entries must be 2");
            if (i != j && a_(i, j) > 0) throw InvalidInput("Cartan matrix off-diagonal entries must be <= 0");
        }
    d_ = MutationMatrix(b_matrix(a_)).symmetrizer();
}

CartanMatrix CartanMatrix::transpose() const {
    return CartanMatrix(a_.transpose(), name_.empty() ? name_ : name_ + "^T");
}

MutationMatrix B_of(const CartanMatrix& a) { return MutationMatrix(b_matrix(a.matrix()), a.symmetrizer()); }

CartanMatrix cartan_by_name(const std::string& name) {
    if (name.size() < 2) throw InvalidInput("unknown Cartan type '" + name + "'");
    const char family = name[0];
    std::size_t n = 0;
    try {
        std::size_t used = 0;
        n = std::stoul(name.substr(1), &used);
        if (used != name.size() - 1) throw InvalidInput("");
    } catch (const std::exception&) {
        throw InvalidInput("unknown Cartan type '" + name + "'");
    }
    IntMatrix a;
    if (family == 'A' && n >= 1 && n <= 8) {
        a = chain(n);
    } else if (family == 'B' && n >= 2 && n <= 5) {
        a = chain(n);
        a(n - 1, n - 2) = -2;
    } else if (family == 'C' && n >= 2 && n <= 5) {
        a = chain(n);
        a(n - 2, n - 1) = -2;
    } else if (family == 'D' && n >= 4 && n <= 6) {
        a = chain(n);
        link(a, n - 2, n - 1, 0, 0);
        link(a, n - 3, n - 1);
    } else if (name == "E6") {
        a = IntMatrix(6, 6);
        for (std::size_t i = 0; i < 6; ++i) a(i, i) = 2;
        link(a, 0, 2);
        link(a, 2, 3);
        link(a, 3, 4);
        link(a, 4, 5);
        link(a, 1, 3);
    } else if (name == "F4") {
        a = chain(4);
        a(2, 1) = -2;
    } else if (name == "G2") {
        a = chain(2);
        a(1, 0) = -3;
    } else {
        throw InvalidInput("unknown Cartan type '" + name + "'");
    }
    return CartanMatrix(std::move(a), name);
}

std::vector<std::string> registered_cartan_names() {
    std::vector<std::string> out;
    for (int n = 1; n <= 8; ++n) out.push_back("A" + std::to_string(n));
    for (int n = 2; n <= 5; ++n) out.push_back("B" + std::to_string(n));
    for (int n = 2; n <= 5; ++n) out.push_back("C" + std::to_string(n));
    for (int n = 4; n <= 6; ++n) out.push_back("D" + std::to_string(n));
    out.insert(out.end(), {"E6", "F4", "G2"});
    return out;
}

}  // namespace tropfrieze
