#include "trispec/constructions.hpp"

#include <stdexcept>
#include <string>

namespace trispec {

TriangleFamily complete_family(int n) {
    if (n < 3) throw std::invalid_argument("complete_family: n must be >= 3");
    std::vector<Triangle> out;
    out.reserve(static_cast<std::size_t>(choose3(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) out.emplace_back(i, j, k);
    return TriangleFamily(std::move(out));
}

void validate(const GcbSpec& spec) {
    if (spec.c < 3 || spec.b < 1)
        throw std::invalid_argument("G_{c,b} needs c >= 3 and b >= 1 (got c=" + std::to_string(spec.c) +
                                    ", b=" + std::to_string(spec.b) + ")");
}

TriangleFamily gcb_family(const GcbSpec& spec) {
    validate(spec);
    const int c = spec.c;
    std::vector<Triangle> out;
    for (int i = 1; i <= c; ++i)
        for (int j = i + 1; j <= c; ++j) {
            for (int k = j + 1; k <= c; ++k) out.emplace_back(i, j, k);
            for (int apex = c + 1; apex <= c + spec.b; ++apex) out.emplace_back(i, j, apex);
        }
    return TriangleFamily(std::move(out));
}

std::vector<SpectrumRow> gcb_closed_form_spectrum(const GcbSpec& spec) {
    validate(spec);
    const std::int64_t c = spec.c, b = spec.b;
    const std::vector<SpectrumRow> rows = {
        {0.0, choose3(c) + (b - 1) * choose2(c - 1)},
        {static_cast<double>(c), (b - 1) * (c - 1)},
        {static_cast<double>(b + c), choose2(c)},
    };
    std::vector<SpectrumRow> out;
    for (const auto& r : rows)
        if (r.multiplicity > 0) out.push_back(r);
    return out;
}

RationalVector eigvec_c(const GcbSpec& spec, int x, int y) {
    validate(spec);
    const int c = spec.c, b = spec.b;
    if (b < 2) throw std::invalid_argument("eigvec_c: needs b >= 2");
    if (x < 2 || x > c || y < c + 1 || y > b + c - 1)
        throw std::out_of_range("eigvec_c: need 2 <= x <= c and c+1 <= y <= b+c-1");

    const auto family = gcb_family(spec);
    RationalVector v{std::vector<std::int64_t>(family.size(), 0), 1};
    const auto last = static_cast<Vertex>(b + c);
    for (int i = 1; i <= c; ++i) {
        if (i == x) continue;
        const Triangle near(i, x, y);
        const Triangle far(i, x, last);
        v.numerators[*family.index_of(near)] += sign_triangle_edge(near, Edge(x, y));
        v.numerators[*family.index_of(far)] -= sign_triangle_edge(far, Edge(x, last));
    }
    return v;
}

RationalVector eigvec_bc(const GcbSpec& spec, int x, int y) {
    validate(spec);
    const int c = spec.c, b = spec.b;
    if (x < 1 || x >= y || y > c) throw std::out_of_range("eigvec_bc: need 1 <= x < y <= c");

    const auto graph = support_graph(gcb_family(spec));
    RationalVector w{std::vector<std::int64_t>(graph.edge_count(), 0), b};
    w.numerators[*graph.edge_index(Edge(x, y))] = b;
    for (int i = c + 1; i <= b + c; ++i) {
        w.numerators[*graph.edge_index(Edge(x, i))] -= 1;
        w.numerators[*graph.edge_index(Edge(y, i))] += 1;
    }
    return w;
}

bool is_exact_eigenvector(const IntMatrix& m, const RationalVector& v, std::int64_t value) {
    // The common denominator cancels from both sides.
    const auto mv = m * std::span<const std::int64_t>(v.numerators);
    for (std::size_t i = 0; i < mv.size(); ++i)
        if (mv[i] != value * v.numerators[i]) return false;
    return true;
}

std::int64_t BudgetDecomposition::reconstruct() const {
    const std::int64_t A = a;
    return (choose3(A) + x * choose2(A)) + (choose3(A + 1) + y * choose2(A + 1)) +
           (choose3(A + 2) + z * choose2(A + 2));
}

BudgetDecomposition frobenius_decompose(int a, std::int64_t budget) {
    if (a < 3) throw std::invalid_argument("frobenius_decompose: a must be >= 3");
    if (budget < frobenius_threshold(a))
        throw std::domain_error("below Frobenius threshold: N=" + std::to_string(budget) + " < " +
                                std::to_string(frobenius_threshold(a)));

    const std::int64_t A = a;
    const std::int64_t unit = choose2(A);  // C(a,2); C(a+1,2) - unit = a, C(a+2,2) - unit = 2a+1
    std::int64_t rest = budget;
    for (std::int64_t i = 0; i < 3; ++i) rest -= choose3(A + i) + choose2(A + i);

    // Find q with rest in [q C(a,2) + 2a(a-1), q C(a,2) + q a], then write
    // rest - q C(a,2) = y a + z (2a+1) with smallest z; x = q - y - z >= 0.
    for (std::int64_t q = 1; q * unit + 2 * A * (A - 1) <= rest; ++q) {
        if (rest > q * unit + q * A) continue;
        const std::int64_t coins = rest - q * unit;
        for (std::int64_t z = 0; z * (2 * A + 1) <= coins; ++z) {
            const std::int64_t left = coins - z * (2 * A + 1);
            if (left % A != 0) continue;
            const std::int64_t y = left / A;
            const std::int64_t x = q - y - z;
            if (x < 0) break;
            BudgetDecomposition d{a, x + 1, y + 1, z + 1, budget};
            if (d.reconstruct() != budget) throw std::logic_error("frobenius_decompose: identity mismatch");
            return d;
        }
    }
    throw std::logic_error("frobenius_decompose: no interval I_q contains the remainder");
}

TriangleFamily decomposition_family(const BudgetDecomposition& d) {
    const auto first = gcb_family({d.a, static_cast<int>(d.x)});
    const auto second = gcb_family({d.a + 1, static_cast<int>(d.y)});
    const auto third = gcb_family({d.a + 2, static_cast<int>(d.z)});
    return disjoint_union(disjoint_union(first, second), third);
}

int cube_root_level(std::int64_t t) {
    int a = 0;
    while (3 * static_cast<std::int64_t>(a + 1) * (a + 1) * (a + 1) <= t) ++a;
    return a;
}

GrowthFamily phi_lower_bound_family(std::int64_t t) {
    if (t < 81) throw std::invalid_argument("phi_lower_bound_family: t must be >= 81");
    GrowthFamily g;
    g.a = cube_root_level(t);
    g.decomposition = frobenius_decompose(g.a, t);
    g.family = decomposition_family(g.decomposition);
    if (static_cast<std::int64_t>(g.family.size()) != t)
        throw std::logic_error("phi_lower_bound_family: size mismatch");
    return g;
}

}  // namespace trispec
