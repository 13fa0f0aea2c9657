#include "trispec/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "trispec/spectra.hpp"

namespace trispec {

namespace {

using Tri = std::array<std::uint8_t, 3>;

struct DenseFamily {
    int v = 0;
    std::vector<Tri> tris;
};

DenseFamily densify(const TriangleFamily& family) {
    const auto verts = family.vertices();
    DenseFamily d;
    d.v = static_cast<int>(verts.size());
    d.tris.reserve(family.size());
    auto label = [&](Vertex x) {
        return static_cast<std::uint8_t>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
    };
    for (const auto& t : family) d.tris.push_back({label(t[0]), label(t[1]), label(t[2])});
    return d;
}

std::size_t distinct(const std::vector<int>& colors) {
    auto c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

std::vector<int> rank_signatures(const std::vector<std::vector<int>>& sig) {
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(sig.size());
    for (std::size_t x = 0; x < sig.size(); ++x)
        out[x] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[x]) - sorted.begin());
    return out;
}

std::vector<int> refine_colors(const DenseFamily& d) {
    std::vector<std::vector<int>> sig(d.v, std::vector<int>{0});
    for (const auto& t : d.tris)
        for (auto x : t) ++sig[x][0];
    auto colors = rank_signatures(sig);

    for (;;) {
        for (int x = 0; x < d.v; ++x) sig[x].assign(1, colors[x]);
        for (const auto& t : d.tris)
            for (int i = 0; i < 3; ++i) {
                int a = colors[t[(i + 1) % 3]], b = colors[t[(i + 2) % 3]];
                if (a > b) std::swap(a, b);
                sig[t[i]].push_back(a * d.v + b);
            }
        for (auto& s : sig) std::sort(s.begin() + 1, s.end());
        auto next = rank_signatures(sig);
        const bool stable = distinct(next) == distinct(colors);
        colors = std::move(next);
        if (stable) return colors;
    }
}

std::vector<Tri> relabel_sorted(const std::vector<Tri>& tris, const std::vector<std::uint8_t>& label) {
    std::vector<Tri> out(tris.size());
    for (std::size_t i = 0; i < tris.size(); ++i) {
        Tri t{label[tris[i][0]], label[tris[i][1]], label[tris[i][2]]};
        std::sort(t.begin(), t.end());
        out[i] = t;
    }
    std::sort(out.begin(), out.end());
    return out;
}

TriangleFamily to_family(const std::vector<Tri>& tris) {
    std::vector<Triangle> out;
    out.reserve(tris.size());
    for (const auto& t : tris) out.emplace_back(t[0], t[1], t[2]);
    return TriangleFamily(std::move(out));
}

std::vector<Tri> canonical_tris(const TriangleFamily& family, std::uint64_t max_permutations) {
    const auto d = densify(family);
    if (d.v > 255) throw std::length_error("canonical_form: more than 255 vertices");
    const auto colors = refine_colors(d);

    const int ncolors = *std::max_element(colors.begin(), colors.end()) + 1;
    std::vector<std::vector<std::uint8_t>> cells(ncolors);
    for (int x = 0; x < d.v; ++x) cells[colors[x]].push_back(static_cast<std::uint8_t>(x));

    std::uint64_t total = 1;
    for (const auto& cell : cells)
        for (std::uint64_t k = 2; k <= cell.size(); ++k) {
            total *= k;
            if (total > max_permutations)
                throw std::length_error("canonical_form: permutation search exceeds " +
                                        std::to_string(max_permutations) + "; lower --max-vertices");
        }

    std::vector<std::uint8_t> label(d.v);
    auto assign = [&] {
        std::uint8_t pos = 0;
        for (const auto& cell : cells)
            for (auto x : cell) label[x] = pos++;
    };

    assign();
    auto best = relabel_sorted(d.tris, label);
    for (;;) {
        std::size_t c = 0;
        while (c < cells.size() && !std::next_permutation(cells[c].begin(), cells[c].end())) ++c;
        if (c == cells.size()) break;
        assign();
        auto candidate = relabel_sorted(d.tris, label);
        if (candidate < best) best = std::move(candidate);
    }
    return best;
}

std::string key_of(const std::vector<Tri>& tris) {
    std::string key;
    for (const auto& t : tris) {
        if (!key.empty()) key += ';';
        key += std::to_string(t[0]) + ',' + std::to_string(t[1]) + ',' + std::to_string(t[2]);
    }
    return key;
}

// Children of a canonical parent on {0..v-1}: add one triangle meeting the
// parent in at least one vertex, using at most two fresh labels v and v+1.
template <typename Sink>
void for_each_extension(const FamilyClass& parent, int max_vertices, Sink&& sink) {
    const auto& tris = parent.family.triangles();
    const auto verts = parent.family.vertices();
    const auto v = static_cast<Vertex>(verts.size());
    auto emit = [&](Vertex a, Vertex b, Vertex c) {
        const Triangle extra(a, b, c);
        if (parent.family.contains(extra)) return;
        std::vector<Triangle> next(tris.begin(), tris.end());
        next.push_back(extra);
        sink(TriangleFamily(std::move(next)));
    };
    for (Vertex a = 0; a < v; ++a)
        for (Vertex b = a + 1; b < v; ++b)
            for (Vertex c = b + 1; c < v; ++c) emit(a, b, c);
    if (static_cast<int>(v) + 1 <= max_vertices)
        for (Vertex a = 0; a < v; ++a)
            for (Vertex b = a + 1; b < v; ++b) emit(a, b, v);
    if (static_cast<int>(v) + 2 <= max_vertices)
        for (Vertex a = 0; a < v; ++a) emit(a, v, v + 1);
}

using Clock = std::chrono::steady_clock;

struct LevelResult {
    std::vector<FamilyClass> classes;  // sorted by key
    bool complete = true;              // not cut by the budget
    std::size_t pruned_parents = 0;
};

struct Pruning {
    int t = 0;
    double incumbent = 0.0;
};

void atomic_max(std::atomic<double>& target, double value) {
    double cur = target.load();
    while (value > cur && !target.compare_exchange_weak(cur, value)) {
    }
}

LevelResult extend_level(const std::vector<FamilyClass>& parents, int max_vertices, unsigned threads,
                         std::optional<Clock::time_point> deadline, const std::optional<Pruning>& pruning) {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> out_of_time{false};
    std::atomic<std::size_t> pruned{0};
    std::atomic<double> incumbent{pruning ? pruning->incumbent : 0.0};
    std::mutex merge_mutex;
    std::vector<FamilyClass> merged;

    auto worker = [&] {
        std::vector<FamilyClass> local;
        std::unordered_set<std::string> seen;
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= parents.size()) break;
            if (deadline && Clock::now() > *deadline) {
                out_of_time = true;
                break;
            }
            const auto& parent = parents[i];
            if (pruning) {
                const int bound = counting_upper_bound(pruning->t, parent.family.vertices().size());
                if (bound < incumbent.load() - 1e-9) {
                    ++pruned;
                    continue;
                }
            }
            for_each_extension(parent, max_vertices, [&](TriangleFamily child) {
                auto canon = canonical_tris(child, std::numeric_limits<std::uint64_t>::max());
                auto key = key_of(canon);
                if (!seen.insert(key).second) return;
                FamilyClass cls{std::move(key), to_family(canon), 0.0};
                if (pruning) {
                    cls.lambda = lambda_of(cls.family);
                    atomic_max(incumbent, cls.lambda);
                }
                local.push_back(std::move(cls));
            });
        }
        std::lock_guard lock(merge_mutex);
        for (auto& c : local) merged.push_back(std::move(c));
    };

    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(parents.size())));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    merged.erase(std::unique(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.key == b.key; }),
                 merged.end());

    if (!pruning) {
        std::atomic<std::size_t> idx{0};
        auto eval = [&] {
            for (std::size_t i = idx.fetch_add(1); i < merged.size(); i = idx.fetch_add(1))
                merged[i].lambda = lambda_of(merged[i].family);
        };
        std::vector<std::thread> evals;
        for (unsigned k = 1; k < n; ++k) evals.emplace_back(eval);
        eval();
        for (auto& th : evals) th.join();
    }

    LevelResult result;
    result.classes = std::move(merged);
    result.complete = !out_of_time;
    result.pruned_parents = pruned;
    return result;
}

std::vector<FamilyClass> first_level() {
    const TriangleFamily single{{0, 1, 2}};
    return {FamilyClass{family_key(single), single, lambda_of(single)}};
}

int resolve_max_vertices(int t, int requested) {
    const int m = requested > 0 ? requested : 2 * t + 1;
    if (m > kMaxVerticesCap)
        throw std::invalid_argument("max_vertices " + std::to_string(m) + " exceeds the canonical-form cap of " +
                                    std::to_string(kMaxVerticesCap) + "; pass --max-vertices <= " +
                                    std::to_string(kMaxVerticesCap));
    if (m < 3) throw std::invalid_argument("max_vertices must be >= 3");
    return m;
}

// Checkpoint: "max_vertices M", then per completed level the lines
// "level s <key> <lambda>" followed by "complete s <count>".
class Checkpoint {
public:
    Checkpoint(std::filesystem::path path, int max_vertices) : path_(std::move(path)), max_vertices_(max_vertices) {}

    std::vector<std::vector<FamilyClass>> load() const {
        std::vector<std::vector<FamilyClass>> levels;
        std::ifstream in(path_);
        if (!in) return levels;
        std::string line;
        std::vector<FamilyClass> pending;
        int pending_level = 0;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::string tag;
            ls >> tag;
            if (tag == "max_vertices") {
                int m = 0;
                ls >> m;
                if (m != max_vertices_)
                    throw std::invalid_argument("checkpoint " + path_.string() + " was written with max_vertices " +
                                                std::to_string(m));
            } else if (tag == "level") {
                int s = 0;
                std::string key;
                double lambda = 0.0;
                ls >> s >> key >> lambda;
                if (!ls || s != static_cast<int>(levels.size()) + 1) break;
                pending_level = s;
                pending.push_back(FamilyClass{key, family_from_key(key), lambda});
            } else if (tag == "complete") {
                int s = 0;
                std::size_t count = 0;
                ls >> s >> count;
                if (!ls || s != pending_level || count != pending.size()) break;
                levels.push_back(std::move(pending));
                pending.clear();
            }
        }
        return levels;
    }

    void start() const {
        std::ofstream out(path_, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint " + path_.string());
        out << "# trispec phi checkpoint\nmax_vertices " << max_vertices_ << '\n';
    }

    void append(int s, const std::vector<FamilyClass>& level) const {
        std::ofstream out(path_, std::ios::app);
        if (!out) throw std::runtime_error("cannot write checkpoint " + path_.string());
        out << std::setprecision(17);
        for (const auto& c : level) out << "level " << s << ' ' << c.key << ' ' << c.lambda << '\n';
        out << "complete " << s << ' ' << level.size() << '\n';
    }

private:
    std::filesystem::path path_;
    int max_vertices_;
};

void partitions(int rest, int largest, std::vector<int>& current, const std::function<void(const std::vector<int>&)>& f) {
    if (rest == 0) {
        f(current);
        return;
    }
    for (int p = std::min(rest, largest); p >= 1; --p) {
        current.push_back(p);
        partitions(rest - p, p, current, f);
        current.pop_back();
    }
}

struct ConnectedBest {
    double lambda = 0.0;
    const FamilyClass* witness = nullptr;
};

ConnectedBest best_of(const std::vector<FamilyClass>& level) {
    ConnectedBest best;
    for (const auto& c : level)
        if (!best.witness || c.lambda > best.lambda + 1e-9) best = {c.lambda, &c};
    return best;
}

struct SplitChoice {
    double value = -1.0;
    std::vector<int> parts;
};

// Best split of t using phi_conn values; `allow_whole` controls the
// single-part partition {t}.
SplitChoice best_split(int t, const std::vector<ConnectedBest>& conn, bool allow_whole) {
    SplitChoice best;
    std::vector<int> current;
    partitions(t, t, current, [&](const std::vector<int>& parts) {
        if (!allow_whole && parts.size() == 1) return;
        double value = std::numeric_limits<double>::infinity();
        for (int p : parts) {
            if (!conn[p].witness) return;
            value = std::min(value, conn[p].lambda);
        }
        if (value > best.value + 1e-9) best = {value, parts};
    });
    return best;
}

PhiEntry make_entry(int t, const std::vector<ConnectedBest>& conn, bool exhaustive, std::size_t classes,
                    std::size_t pruned) {
    PhiEntry e;
    e.t = t;
    e.exhaustive = exhaustive;
    e.connected_classes = classes;
    e.pruned_parents = pruned;
    const auto split = best_split(t, conn, true);
    if (split.value < 0) return e;
    e.phi = split.value;
    e.partition = split.parts;
    for (int p : split.parts) e.witness = disjoint_union(e.witness, conn[p].witness->family);
    return e;
}

PhiTable run_search(int t_max, const PhiSearchOptions& options) {
    if (t_max < 1) throw std::invalid_argument("phi: t must be >= 1");
    const int max_vertices = resolve_max_vertices(t_max, options.max_vertices);
    const unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    std::optional<Clock::time_point> deadline;
    if (options.budget_seconds > 0)
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(options.budget_seconds));

    std::optional<Checkpoint> checkpoint;
    std::vector<std::vector<FamilyClass>> levels(1);  // levels[s], s >= 1
    if (options.checkpoint) {
        checkpoint.emplace(*options.checkpoint, max_vertices);
        auto loaded = checkpoint->load();
        checkpoint->start();
        for (std::size_t s = 0; s < loaded.size(); ++s) {
            checkpoint->append(static_cast<int>(s) + 1, loaded[s]);
            if (s < static_cast<std::size_t>(t_max)) levels.push_back(std::move(loaded[s]));
        }
    }

    std::vector<std::size_t> pruned_at(t_max + 1, 0);
    std::vector<bool> level_complete(t_max + 1, true);

    for (int s = static_cast<int>(levels.size()); s <= t_max; ++s) {
        if (s == 1) {
            levels.push_back(first_level());
        } else {
            std::optional<Pruning> pruning;
            if (options.prune && s == t_max) {
                std::vector<ConnectedBest> conn(s + 1);
                for (int r = 1; r < s; ++r) conn[r] = best_of(levels[r]);
                const auto split = best_split(s, conn, false);
                pruning = Pruning{s, std::max(0.0, split.value)};
            }
            auto result = extend_level(levels[s - 1], max_vertices, threads, deadline, pruning);
            levels.push_back(std::move(result.classes));
            pruned_at[s] = result.pruned_parents;
            if (!result.complete) {
                for (int r = s; r <= t_max; ++r) level_complete[r] = false;
                for (int r = s + 1; r <= t_max; ++r) levels.emplace_back();
                break;
            }
        }
        if (checkpoint && pruned_at[s] == 0 && !(options.prune && s == t_max && s > 1))
            checkpoint->append(s, levels[s]);
    }

    std::vector<ConnectedBest> conn(t_max + 1);
    for (int s = 1; s <= t_max; ++s) conn[s] = best_of(levels[s]);

    PhiTable table;
    for (int s = 1; s <= t_max; ++s) {
        const bool ex = level_complete[s] && max_vertices >= 2 * s + 1;
        table.entries[s] = make_entry(s, conn, ex, levels[s].size(), pruned_at[s]);
    }
    return table;
}

}  // namespace

TriangleFamily canonical_form(const TriangleFamily& family, std::uint64_t max_permutations) {
    if (family.empty()) return family;
    return to_family(canonical_tris(family, max_permutations));
}

std::string family_key(const TriangleFamily& family) {
    std::string key;
    for (const auto& t : family) {
        if (!key.empty()) key += ';';
        key += std::to_string(t[0]) + ',' + std::to_string(t[1]) + ',' + std::to_string(t[2]);
    }
    return key;
}

TriangleFamily family_from_key(const std::string& key) {
    std::vector<Triangle> tris;
    std::istringstream in(key);
    std::string item;
    while (std::getline(in, item, ';')) {
        std::array<Vertex, 3> v{};
        char c1 = 0, c2 = 0;
        std::istringstream is(item);
        if (!(is >> v[0] >> c1 >> v[1] >> c2 >> v[2]) || c1 != ',' || c2 != ',')
            throw std::invalid_argument("malformed family key: " + key);
        tris.emplace_back(v[0], v[1], v[2]);
    }
    return TriangleFamily(std::move(tris));
}

bool is_connected(const TriangleFamily& family) {
    return !family.empty() && support_graph(family).component_count() == 1;
}

int counting_upper_bound(int t, std::size_t vertices) {
    int n = 2;
    while (static_cast<std::int64_t>(n) * (n - 1) * static_cast<std::int64_t>(vertices) <= 6LL * t) ++n;
    return n;
}

std::vector<TriangleFamily> enumerate_connected_families(int t, int max_vertices) {
    if (t < 1) throw std::invalid_argument("enumerate_connected_families: t must be >= 1");
    const int m = resolve_max_vertices(t, max_vertices);
    auto level = first_level();
    for (int s = 2; s <= t; ++s) level = extend_level(level, m, 1, std::nullopt, std::nullopt).classes;
    std::vector<TriangleFamily> out;
    out.reserve(level.size());
    for (auto& c : level) out.push_back(std::move(c.family));
    return out;
}

std::map<int, double> PhiTable::running_max() const {
    std::map<int, double> out;
    double best = 0.0;
    for (const auto& [t, e] : entries) {
        best = std::max(best, e.phi);
        out[t] = best;
    }
    return out;
}

PhiEntry phi_exact(int t, const PhiSearchOptions& options) { return run_search(t, options).entries.at(t); }

PhiTable phi_table(int t_max, const PhiSearchOptions& options) { return run_search(t_max, options); }

}  // namespace trispec
