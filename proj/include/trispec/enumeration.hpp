#pragma once

// Isomorphism-free enumeration of connected triangle families and exact
// computation of phi(t) = max lambda over families with t triangles.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trispec/family.hpp"

namespace trispec {

/// Canonical relabelling onto {0..v-1}: the lexicographically smallest sorted
/// triangle list over all relabellings that order vertices by their refined
/// colour class (triangle degree, then the colours of co-occurring vertices).
/// Throws std::length_error when the within-class search exceeds `max_permutations`.
TriangleFamily canonical_form(const TriangleFamily& family, std::uint64_t max_permutations = 50'000'000);

/// Text key of a family, e.g. "0,1,2;0,1,3".
std::string family_key(const TriangleFamily& family);
TriangleFamily family_from_key(const std::string& key);

/// True when the support graph is connected.
bool is_connected(const TriangleFamily& family);

struct FamilyClass {
    std::string key;        // family_key of the canonical form
    TriangleFamily family;  // canonical representative
    double lambda = 0.0;
};

/// Hard cap on vertices per family for the canonical check.
inline constexpr int kMaxVerticesCap = 16;

/// One representative per isomorphism class of t-triangle families with a
/// connected support graph and at most `max_vertices` vertices, sorted by key.
/// Throws std::invalid_argument if max_vertices exceeds kMaxVerticesCap.
std::vector<TriangleFamily> enumerate_connected_families(int t, int max_vertices);

struct PhiSearchOptions {
    int max_vertices = 0;          // 0: 2t+1, enough for every connected family
    double budget_seconds = 0.0;   // 0: unlimited
    bool prune = true;
    unsigned threads = 1;
    std::optional<std::filesystem::path> checkpoint;
};

struct PhiEntry {
    int t = 0;
    double phi = 0.0;
    TriangleFamily witness;
    bool exhaustive = false;
    std::vector<int> partition;          // component sizes of the witness
    std::size_t connected_classes = 0;   // classes seen at level t
    std::size_t pruned_parents = 0;
};

struct PhiTable {
    std::map<int, PhiEntry> entries;

    /// Lambda(t) = max_{s <= t} phi(s) over the stored entries.
    [[nodiscard]] std::map<int, double> running_max() const;
};

/// phi(t) as the best split t = t_1 + ... + t_k of min_i phi_conn(t_i), with
/// phi_conn from the connected enumeration. Only the final level is pruned,
/// and only parents whose counting-lemma bound is below the incumbent.
PhiEntry phi_exact(int t, const PhiSearchOptions& options = {});
/// phi(1..t_max), sharing one enumeration.
PhiTable phi_table(int t_max, const PhiSearchOptions& options = {});

/// Counting-lemma ceiling on lambda for any t-triangle family containing a
/// subfamily with `vertices` vertices: the largest n >= 3 with
/// (n-1)(n-2) * vertices <= 6t, or 2 if there is none.
int counting_upper_bound(int t, std::size_t vertices);

}  // namespace trispec
