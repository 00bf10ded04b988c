#pragma once

#include "qbundle/matrix.hpp"
#include "qbundle/uea.hpp"

#include <stdexcept>
#include <vector>

namespace qb {

/// Raised when a module does not split into irreducibles along the
/// highest-weight construction.
struct DecompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Finite-dimensional U_q(sl2)-module in a weight basis. Weights are
/// h-eigenvalues; k acts on a weight-m vector by u^(2m), i.e. q^(m/2).
class Module {
public:
    Module() = default;
    /// Builds a module from generator matrices; k must be diagonal with
    /// entries u^(2m). Throws std::invalid_argument if a relation fails.
    static Module from_generators(Matrix e, Matrix f, Matrix k);

    std::size_t dim() const { return weights_.size(); }
    const std::vector<int>& weights() const { return weights_; }
    const Matrix& e() const { return e_; }
    const Matrix& f() const { return f_; }
    const Matrix& k() const { return k_; }
    const Matrix& kinv() const { return kinv_; }
    /// k^b as a diagonal matrix.
    Matrix k_power(int b) const;

    /// Representation matrix of x.
    Matrix act(const UEAElement& x) const;
    Matrix act(const Pbw& m) const;

    /// Checks every defining relation as an exact matrix identity.
    bool satisfies_relations() const;

private:
    std::vector<int> weights_;
    Matrix e_, f_, k_, kinv_;
};

/// The (n+1)-dimensional irreducible module W(n) with basis w_0..w_n,
/// k w_j = u^(2(n-2j)) w_j,  e w_j = [j] w_{j-1},  f w_j = [n-j] w_{j+1}.
const Module& irrep(int n);

/// Tensor product through the coproduct; basis index (i, j) -> i * dim(b) + j.
Module tensor(const Module& a, const Module& b);
/// Direct sum, first summand first.
Module direct_sum(const Module& a, const Module& b);

struct ModuleMap {
    Module source;
    Module target;
    Matrix matrix;  // target.dim() x source.dim()
    /// True iff matrix * source(x) == target(x) * matrix for x = e, f, k.
    bool intertwines() const;
};

struct Component {
    int highest = 0;
    ModuleMap embedding;   // irrep(highest) -> W
    ModuleMap projection;  // W -> irrep(highest)
};

/// Splits W into irreducibles. Highest-weight vectors are the kernel of e on
/// each weight space; the rest of each copy is generated by f. Components are
/// listed by decreasing highest weight. Projections are the rows of the inverse
/// of the assembled change of basis, so sum emb*proj = id and proj_i*emb_j = delta_ij.
std::vector<Component> decompose(const Module& w);

/// Coefficient (q - q^-1)^n q^(n(n-1)/2) / [n]! of the R-matrix series.
Scalar r_coefficient(int n);

/// The universal R-matrix acting on W1 (x) W2:
///   R = q^(H(x)H/2) * sum_n c_n (e k)^n (x) (k^-1 f)^n,
/// where q^(H(x)H/2) acts on weights (m1, m2) by u^(2 m1 m2). The series
/// terminates by nilpotency. It satisfies R Delta(x) = Delta^op(x) R.
Matrix universal_R(const Module& w1, const Module& w2);

/// Flip P on W1 (x) W2 -> W2 (x) W1.
Matrix flip(std::size_t dim1, std::size_t dim2);

using UEAMatrix = std::vector<std::vector<UEAElement>>;

/// (id (x) pi_W)(R) as a dim x dim matrix with entries in U_q.
UEAMatrix r_matrix_second_leg(const Module& w);
/// (id (x) pi_W)(R_21).
UEAMatrix r21_matrix_second_leg(const Module& w);
UEAMatrix multiply(const UEAMatrix& a, const UEAMatrix& b);

}  // namespace qb
