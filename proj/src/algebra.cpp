#include "sunqps/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace sunqps {

namespace {

void check_rep_args(int n, int m) {
    if (n < 2) throw std::domain_error("rep_dimension: n must be >= 2, got " + std::to_string(n));
    if (m < 1) throw std::domain_error("rep_dimension: m must be >= 1, got " + std::to_string(m));
}

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Matrix of the ladder operator moving one quantum from mode b to mode a
// (0-based modes), with amplitude sqrt((m_a + 1) m_b).
ComplexMatrix ladder_matrix(const RepBasis& basis, int a, int b) {
    ComplexMatrix out = ComplexMatrix::Zero(basis.dim, basis.dim);
    std::vector<int> target;
    for (Index j = 0; j < basis.dim; ++j) {
        const auto& occ = basis.states[static_cast<std::size_t>(j)].occupations;
        if (occ[static_cast<std::size_t>(b)] == 0) continue;
        target = occ;
        target[static_cast<std::size_t>(a)] += 1;
        target[static_cast<std::size_t>(b)] -= 1;
        const Index i = basis.index_of(target);
        const double amp = std::sqrt(double(occ[static_cast<std::size_t>(a)] + 1) *
                                     double(occ[static_cast<std::size_t>(b)]));
        out(i, j) = amp;
    }
    return out;
}

}  // namespace

int BasisState::total() const {
    return std::accumulate(occupations.begin(), occupations.end(), 0);
}

Index RepBasis::index_of(const std::vector<int>& occupations) const {
    // States are stored in descending lexicographic order.
    auto it = std::lower_bound(states.begin(), states.end(), occupations,
                               [](const BasisState& s, const std::vector<int>& occ) {
                                   return s.occupations > occ;
                               });
    if (it == states.end() || it->occupations != occupations) return -1;
    return static_cast<Index>(it - states.begin());
}

const ComplexMatrix& GeneratorSet::lambda(int k) const {
    if (k < 1 || k > static_cast<int>(matrices.size()))
        throw std::out_of_range("GeneratorSet::lambda: k = " + std::to_string(k) +
                                " outside 1.." + std::to_string(matrices.size()));
    return matrices[static_cast<std::size_t>(k - 1)];
}

const GeneratorLabel& GeneratorSet::label(int k) const {
    if (k < 1 || k > static_cast<int>(labels.size()))
        throw std::out_of_range("GeneratorSet::label: k = " + std::to_string(k) +
                                " outside 1.." + std::to_string(labels.size()));
    return labels[static_cast<std::size_t>(k - 1)];
}

double StructureConstants::value(int i, int j, int k) const {
    for (const auto& e : entries)
        if (e.i == i && e.j == j && e.k == k) return e.value;
    return 0.0;
}

int rep_dimension(int n, int m) {
    check_rep_args(n, m);
    return static_cast<int>(binomial(n + m - 1, m));
}

RepBasis build_basis(int n, int m) {
    check_rep_args(n, m);
    RepBasis basis;
    basis.n = n;
    basis.m = m;

    // Enumerate occupation tuples in descending lexicographic order directly:
    // at each slot take the largest remaining occupation first.
    std::vector<int> current(static_cast<std::size_t>(n), 0);
    auto emit = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == n - 1) {
            current[static_cast<std::size_t>(slot)] = remaining;
            basis.states.push_back(BasisState{current});
            return;
        }
        for (int q = remaining; q >= 0; --q) {
            current[static_cast<std::size_t>(slot)] = q;
            self(self, slot + 1, remaining - q);
        }
    };
    emit(emit, 0, m);

    basis.dim = static_cast<Index>(basis.states.size());
    return basis;
}

double generator_trace_norm(int n, int m) {
    check_rep_args(n, m);
    return (2.0 * m / (n + 1)) * static_cast<double>(binomial(n + m, m));
}

GeneratorSet build_generators(int n, int m) {
    const RepBasis basis = build_basis(n, m);
    const Index d = basis.dim;

    GeneratorSet set;
    set.n = n;
    set.m = m;
    set.dim = d;
    set.matrices.resize(static_cast<std::size_t>(n) * n - 1);
    set.labels.resize(set.matrices.size());

    for (int b = 2; b <= n; ++b) {
        for (int a = 1; a < b; ++a) {
            const ComplexMatrix up = ladder_matrix(basis, a - 1, b - 1);
            const ComplexMatrix down = up.adjoint();
            const int k = (b - 1) * (b - 1) + 2 * (a - 1);  // 1-based symmetric slot
            set.matrices[static_cast<std::size_t>(k - 1)] = up + down;
            set.matrices[static_cast<std::size_t>(k)] = Complex(0, -1) * (up - down);
            set.labels[static_cast<std::size_t>(k - 1)] = {GeneratorKind::OffDiagSym, a, b, 0};
            set.labels[static_cast<std::size_t>(k)] = {GeneratorKind::OffDiagAntisym, a, b, 0};
        }
    }
    for (int c = 1; c <= n - 1; ++c) {
        ComplexMatrix diag = ComplexMatrix::Zero(d, d);
        const double scale = std::sqrt(2.0 / (double(c) * (c + 1)));
        for (Index j = 0; j < d; ++j) {
            const auto& occ = basis.states[static_cast<std::size_t>(j)].occupations;
            int weighted = 0;
            for (int k = 0; k < c; ++k) weighted += occ[static_cast<std::size_t>(k)];
            weighted -= c * occ[static_cast<std::size_t>(c)];
            diag(j, j) = scale * weighted;
        }
        const int k = (c + 1) * (c + 1) - 1;
        set.matrices[static_cast<std::size_t>(k - 1)] = std::move(diag);
        set.labels[static_cast<std::size_t>(k - 1)] = {GeneratorKind::Diagonal, 0, 0, c};
    }
    return set;
}

StructureConstants structure_constants(const GeneratorSet& gens, Complex scale) {
    if (std::abs(scale) == 0.0)
        throw std::invalid_argument("structure_constants: scale must be nonzero");

    const double trace_norm = generator_trace_norm(gens.n, gens.m);
    const int count = static_cast<int>(gens.count());
    constexpr double kCutoff = 1e-12;

    StructureConstants out;
    out.scale = scale;
    for (int i = 1; i <= count; ++i) {
        for (int j = 1; j <= count; ++j) {
            if (i == j) continue;
            const ComplexMatrix comm =
                gens.lambda(i) * gens.lambda(j) - gens.lambda(j) * gens.lambda(i);
            for (int k = 1; k <= count; ++k) {
                const Complex f = (comm * gens.lambda(k)).trace() / (scale * trace_norm);
                if (std::abs(f.imag()) > kCutoff) {
                    std::ostringstream msg;
                    msg << "structure_constants: f(" << i << "," << j << "," << k
                        << ") is not real for scale (" << scale.real() << "," << scale.imag()
                        << "); residual " << f.imag();
                    throw std::invalid_argument(msg.str());
                }
                if (std::abs(f.real()) > kCutoff)
                    out.entries.push_back({i, j, k, f.real()});
            }
        }
    }
    return out;
}

RealVector star_product(const RealVector& x, const RealVector& y, const GeneratorSet& gens) {
    if (gens.m != 1)
        throw std::domain_error("star_product: defined for fundamental (m=1) generator sets");
    if (gens.n == 2)
        throw std::domain_error("star_product: prefactor is singular at n = 2");
    if (x.size() != gens.count() || y.size() != gens.count())
        throw std::invalid_argument("star_product: vectors must have length n^2-1 = " +
                                    std::to_string(gens.count()));

    const int n = gens.n;
    const double prefactor = std::sqrt(n * (n - 1) / 2.0) / (n - 2);

    ComplexMatrix xm = ComplexMatrix::Zero(gens.dim, gens.dim);
    ComplexMatrix ym = ComplexMatrix::Zero(gens.dim, gens.dim);
    for (Index k = 0; k < gens.count(); ++k) {
        xm += x(k) * gens.matrices[static_cast<std::size_t>(k)];
        ym += y(k) * gens.matrices[static_cast<std::size_t>(k)];
    }
    const ComplexMatrix anti = xm * ym + ym * xm;

    RealVector out(gens.count());
    for (Index k = 0; k < gens.count(); ++k)
        out(k) = prefactor * 0.25 *
                 (anti * gens.matrices[static_cast<std::size_t>(k)]).trace().real();
    return out;
}

}  // namespace sunqps
