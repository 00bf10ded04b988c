#include "qbundle/homspace.hpp"

#include <algorithm>

namespace qb {

void ThetaChoice::validate() const {
    if (rank != 1) throw std::invalid_argument("only rank 1 is implemented");
    for (int j : subset)
        if (j < 1 || j > rank) throw std::invalid_argument("theta index " + std::to_string(j) + " out of range");
}

bool ThetaChoice::contains(int j) const { return std::find(subset.begin(), subset.end(), j) != subset.end(); }

std::vector<UEAElement> levi_generators(const ThetaChoice& theta) {
    theta.validate();
    std::vector<UEAElement> gens{UEAElement::k(), UEAElement::k(-1)};
    if (theta.contains(1)) {
        gens.push_back(UEAElement::e());
        gens.push_back(UEAElement::f());
    }
    return gens;
}

std::vector<UEAElement> parabolic_generators(const ThetaChoice& theta) {
    auto gens = levi_generators(theta);
    if (!theta.contains(1)) gens.push_back(UEAElement::e());
    return gens;
}

InvariantBasis invariants(const ThetaChoice& theta, int level) {
    const auto gens = levi_generators(theta);
    InvariantBasis out;
    out.level = level;
    for (int n = 0; n <= level; ++n) {
        // x o t_{ij} = sum_k t_{ik} pi(x)_{kj}: the condition acts on the right
        // index, so the kernel is a subspace of C^{n+1} shared by every row i.
        const std::size_t d = static_cast<std::size_t>(n) + 1;
        std::vector<Vector> rows;
        for (const auto& g : gens) {
            Matrix m = irrep(n).act(g) - Matrix::identity(d) * counit(g);
            for (std::size_t r = 0; r < d; ++r) rows.push_back(m.row(r));
        }
        const auto ker = kernel(Matrix::from_rows(rows, d));
        for (int i = 0; i <= n; ++i)
            for (const auto& c : ker) {
                CoeffElement f;
                for (std::size_t j = 0; j < d; ++j) f.add_term({n, i, static_cast<int>(j)}, c[j]);
                out.elements.push_back(std::move(f));
            }
        out.per_level[n] = static_cast<int>(d * ker.size());
    }
    return out;
}

bool is_invariant(const ThetaChoice& theta, const CoeffElement& f) {
    for (const auto& g : levi_generators(theta))
        if (!(circle(g, f) == f * counit(g))) return false;
    return true;
}

std::vector<Scalar> coordinates(const std::vector<CoeffElement>& basis, const CoeffElement& f) {
    std::map<CoeffIndex, std::size_t> pos;
    for (const auto& b : basis)
        for (const auto& [idx, c] : b.terms()) pos.emplace(idx, 0);
    for (const auto& [idx, c] : f.terms())
        if (!pos.count(idx)) throw NoSolution("element has a coefficient outside the span");
    std::size_t r = 0;
    for (auto& [idx, p] : pos) p = r++;
    Matrix m(pos.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (const auto& [idx, v] : basis[c].terms()) m(pos[idx], c) = v;
    Vector rhs(pos.size());
    for (const auto& [idx, v] : f.terms()) rhs[pos[idx]] = v;
    return solve(m, rhs);
}

ComoduleReport comodule_check(const ThetaChoice& theta, int level) {
    const InvariantBasis basis = invariants(theta, level);
    ComoduleReport report;
    for (const auto& f : basis.elements) {
        // Group Delta(f) by left basis element; each right leg must be invariant.
        std::map<CoeffIndex, CoeffElement> legs;
        for (const auto& [a, b] : coproduct(f)) {
            const auto& [idx, c] = *a.terms().begin();
            legs[idx] += b * c;
        }
        for (const auto& [left, right] : legs) {
            ++report.checked;
            try {
                coordinates(basis.elements, right);
            } catch (const NoSolution&) {
                report.passed = false;
                if (report.witness.empty()) report.witness = "right leg of " + f.to_string() + ": " + right.to_string();
            }
        }
    }
    return report;
}

}  // namespace qb
