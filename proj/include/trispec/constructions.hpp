#pragma once

// Named triangle families: complete families, the join families T_{c,b}
// (all triangles of K_c joined with b independent vertices), their closed-form
// 2-down spectra and explicit eigenvectors, and the three-block families that
// realise a prescribed triangle budget.

#include <cstdint>
#include <vector>

#include "trispec/family.hpp"
#include "trispec/incidence.hpp"

namespace trispec {

/// All C(n,3) triples on {1..n}. Requires n >= 3.
TriangleFamily complete_family(int n);

struct GcbSpec {
    int c = 3;  // clique size, >= 3
    int b = 1;  // joined independent vertices, >= 1
};

void validate(const GcbSpec& spec);

/// Triangles of K_c v (b independent vertices) on vertex set {1..b+c}:
/// all triples inside {1..c} plus {i, j, k} with i < j <= c < k.
TriangleFamily gcb_family(const GcbSpec& spec);
inline std::int64_t gcb_size(int c, int b) { return choose3(c) + b * choose2(c); }

struct SpectrumRow {
    double eigenvalue;
    std::int64_t multiplicity;
    bool operator==(const SpectrumRow&) const = default;
};

/// Rows (0, C(c,3)+(b-1)C(c-1,2)), (c, (b-1)(c-1)), (b+c, C(c,2)) of the
/// 2-down Laplacian of T_{c,b}; rows of multiplicity zero are dropped.
std::vector<SpectrumRow> gcb_closed_form_spectrum(const GcbSpec& spec);

/// Vector with rational entries numerators[i] / denominator.
struct RationalVector {
    std::vector<std::int64_t> numerators;
    std::int64_t denominator = 1;
};

/// Eigenvector of L2_down(T_{c,b}) for eigenvalue c, indexed by the triangles
/// of gcb_family(spec). Requires b >= 2, 2 <= x <= c, c+1 <= y <= b+c-1.
RationalVector eigvec_c(const GcbSpec& spec, int x, int y);

/// Eigenvector of L1_up(T_{c,b}) for eigenvalue b+c, indexed by the edges of
/// G_{c,b}; denominator b. Requires 1 <= x < y <= c.
RationalVector eigvec_bc(const GcbSpec& spec, int x, int y);

/// True when m * v == value * v holds exactly.
bool is_exact_eigenvector(const IntMatrix& m, const RationalVector& v, std::int64_t value);

struct BudgetDecomposition {
    int a = 3;
    std::int64_t x = 0, y = 0, z = 0;
    std::int64_t budget = 0;

    /// (C(a,3)+x C(a,2)) + (C(a+1,3)+y C(a+1,2)) + (C(a+2,3)+z C(a+2,2)).
    [[nodiscard]] std::int64_t reconstruct() const;
};

inline std::int64_t frobenius_threshold(std::int64_t a) { return 2 * a * a * a + 2 * a * a + 1; }

/// Writes `budget` as |T_{a,x}| + |T_{a+1,y}| + |T_{a+2,z}| with x, y, z >= 1.
/// Follows the coin-problem construction; throws
/// std::domain_error("below Frobenius threshold") for budget < 2a^3 + 2a^2 + 1.
BudgetDecomposition frobenius_decompose(int a, std::int64_t budget);

/// T_{a,x} ⊔ T_{a+1,y} ⊔ T_{a+2,z}.
TriangleFamily decomposition_family(const BudgetDecomposition& d);

struct GrowthFamily {
    TriangleFamily family;
    int a = 0;
    BudgetDecomposition decomposition;
};

/// Largest a with 3a^3 <= t, i.e. floor((t/3)^(1/3)).
int cube_root_level(std::int64_t t);

/// A family with exactly t triangles and lambda >= floor((t/3)^(1/3)). Requires t >= 81.
GrowthFamily phi_lower_bound_family(std::int64_t t);

}  // namespace trispec
