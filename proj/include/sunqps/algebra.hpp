#pragma once

// Generalized SU(N) generator algebra in the symmetric representation with
// quantum number M.  The representation space is spanned by occupation
// states |m_1,...,m_N> with sum(m_k) = M; dimension d = C(N+M-1, M).
//
// The N^2-1 generators split into off-diagonal pairs (symmetric and
// antisymmetric combinations of the ladder operators that move one quantum
// between two modes) and N-1 diagonal generators.  For M=1 they are the
// generalized Gell-Mann matrices.  Indexing follows the conventional
// Gell-Mann numbering: for each b = 2..N the pairs (a,b), a < b, occupy
// slots (b-1)^2 + 2(a-1) (symmetric) and the slot after (antisymmetric),
// and the diagonal generator with label c sits at slot (c+1)^2 - 1.
// All slot indices here are the conventional 1-based labels.

#include <vector>

#include "sunqps/types.hpp"

namespace sunqps {

struct BasisState {
    std::vector<int> occupations;  // m_1..m_N, all >= 0

    int total() const;
};

struct RepBasis {
    int n = 0;
    int m = 0;
    Index dim = 0;
    std::vector<BasisState> states;  // descending lexicographic: (M,0,..,0) first,
                                     // lowest-weight (0,..,0,M) last

    /// Position of an occupation tuple in the basis ordering; -1 if absent.
    Index index_of(const std::vector<int>& occupations) const;
};

enum class GeneratorKind { OffDiagSym, OffDiagAntisym, Diagonal };

struct GeneratorLabel {
    GeneratorKind kind;
    int a = 0;  // off-diagonal pair (a,b), 1-based, a < b
    int b = 0;
    int c = 0;  // diagonal label, 1..N-1
};

struct GeneratorSet {
    int n = 0;
    int m = 0;
    Index dim = 0;
    std::vector<ComplexMatrix> matrices;  // slot i holds Lambda(i+1)
    std::vector<GeneratorLabel> labels;

    Index count() const { return static_cast<Index>(matrices.size()); }

    /// Generator by its conventional 1-based label k = 1..N^2-1.
    const ComplexMatrix& lambda(int k) const;
    const GeneratorLabel& label(int k) const;
};

struct StructureConstants {
    Complex scale;  // the constant c in [L_i, L_j] = c f_ijk L_k

    struct Entry {
        int i, j, k;  // 1-based generator labels
        double value;
    };
    std::vector<Entry> entries;  // |value| > 1e-12, ordered by (i,j,k)

    /// f_ijk; entries not stored are zero.
    double value(int i, int j, int k) const;
};

/// d = C(n+m-1, m).  Throws std::domain_error for n < 2 or m < 1.
int rep_dimension(int n, int m);

RepBasis build_basis(int n, int m);

GeneratorSet build_generators(int n, int m);

/// Tr[L_i L_j] = trace_norm * delta_ij with trace_norm = (2m/(n+1)) C(n+m, m).
double generator_trace_norm(int n, int m);

/// f_ijk = Tr[[L_i, L_j] L_k] / (scale * trace_norm); totally antisymmetric.
StructureConstants structure_constants(const GeneratorSet& gens, Complex scale = Complex(0.0, 2.0));

/// Symmetric bilinear product on generator-coefficient vectors,
///   (x*y)_k = sqrt(n(n-1)/2)/(n-2) * (1/4) Tr[{X, Y} L_k],  X = x.L, Y = y.L,
/// normalized so that Bloch vectors of pure states are idempotent, n*n = n.
/// Defined for fundamental (m=1) generator sets with n >= 3; the prefactor
/// is singular at n = 2.
RealVector star_product(const RealVector& x, const RealVector& y, const GeneratorSet& gens);

}  // namespace sunqps
