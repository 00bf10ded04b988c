#pragma once

#include "qbundle/coeff.hpp"

#include <map>
#include <string>
#include <vector>

namespace qb {

/// Subset Theta of the simple roots {1..rank}. The reductive subalgebra U_l is
/// generated by k^(+-1) and by e_j, f_j for j in Theta; the parabolic U_p adds
/// e_j for j outside Theta.
struct ThetaChoice {
    int rank = 1;
    std::vector<int> subset;

    /// Throws std::invalid_argument for a rank other than 1 or an index outside 1..rank.
    void validate() const;
    bool contains(int j) const;
};

std::vector<UEAElement> levi_generators(const ThetaChoice& theta);
std::vector<UEAElement> parabolic_generators(const ThetaChoice& theta);

/// Basis of the invariant subalgebra E_q up to a level, block by block.
struct InvariantBasis {
    int level = 0;
    std::vector<CoeffElement> elements;
    std::map<int, int> per_level;  // level -> number of basis elements in that block
};

/// Joint kernel of f -> x o f - eps(x) f over the generators of U_l, per level.
InvariantBasis invariants(const ThetaChoice& theta, int level);
bool is_invariant(const ThetaChoice& theta, const CoeffElement& f);

/// Coordinates of f in the span of basis; throws NoSolution if f is outside it.
std::vector<Scalar> coordinates(const std::vector<CoeffElement>& basis, const CoeffElement& f);

struct ComoduleReport {
    bool passed = true;
    std::size_t checked = 0;
    std::string witness;
};

/// Checks that every right leg of Delta(f) lies in the invariant span, for
/// each basis element f up to the level.
ComoduleReport comodule_check(const ThetaChoice& theta, int level);

}  // namespace qb
