#include "cid/critical.hpp"

#include <atomic>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

#include "cid/errors.hpp"

namespace cid {

SymMatrix generalized_laplacian(const Digraph& d) {
    const int n = d.order();
    SymMatrix m(n, n, n);
    for (int u = 0; u < n; ++u) {
        m.at(u, u) = Polynomial::variable(n, u);
        for (int v = 0; v < n; ++v)
            if (d.has_arc(u, v)) m.at(u, v) = Polynomial::constant(n, -1);
    }
    return m;
}

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

bool has_unit_constant(const std::vector<Polynomial>& gens) {
    for (const auto& g : gens)
        if (g.is_constant() && !g.is_zero() && (g.constant_value() == 1 || g.constant_value() == -1)) return true;
    return false;
}

} // namespace

std::vector<Polynomial> critical_ideal_gens(const Digraph& d, int i) {
    const int n = d.order();
    if (i < 1 || i > n) throw std::invalid_argument("critical_ideal_gens: index out of range 1..n");
    const SymMatrix lap = generalized_laplacian(d);
    const auto sets = combinations(n, i);
    std::vector<Polynomial> gens;
    for (const auto& rows : sets)
        for (const auto& cols : sets) {
            Polynomial det = determinant(lap.submatrix(rows, cols));
            if (!det.is_zero()) gens.push_back(std::move(det));
        }
    return gens;
}

int algebraic_corank(const Digraph& d, const GroebnerOptions& opts) {
    const int n = d.order();
    for (int i = 1; i <= n; ++i) {
        const auto gens = critical_ideal_gens(d, i);
        const bool trivial = has_unit_constant(gens) || is_trivial(gens, opts);
        if (!trivial) return i - 1;
    }
    return n;
}

CriticalIdealReport critical_ideal_report(const Digraph& d, const GroebnerOptions& opts) {
    const int n = d.order();
    CriticalIdealReport report{d, std::vector<bool>(n, false), 0};
    for (int i = 1; i <= n; ++i) {
        const auto gens = critical_ideal_gens(d, i);
        const bool trivial = has_unit_constant(gens) || is_trivial(gens, opts);
        report.trivial[i - 1] = trivial;
        if (!trivial) break; // nestedness: all later ideals stay nontrivial
        report.gamma = i;
    }
    return report;
}

bool is_gamma_critical(const Digraph& d, const GroebnerOptions& opts) {
    if (d.order() < 2) throw std::invalid_argument("is_gamma_critical: needs at least 2 vertices");
    const int gamma = algebraic_corank(d, opts);
    for (int v = 0; v < d.order(); ++v)
        if (algebraic_corank(delete_vertex(d, v), opts) >= gamma) return false;
    return true;
}

const ForbiddenFamily& forbidden_family() {
    static const ForbiddenFamily family = {
        {"F31", from_arcs(3, {{0, 2}, {2, 1}})},
        {"F32", from_arcs(3, {{0, 2}, {1, 2}, {2, 0}})},
        {"F33", from_arcs(3, {{0, 2}, {2, 0}, {2, 1}})},
        {"F34", from_arcs(3, {{0, 2}, {1, 2}, {2, 0}, {2, 1}})},
        {"F35", from_arcs(3, {{0, 1}, {1, 2}, {2, 0}})},
        {"F36", from_arcs(3, {{0, 1}, {0, 2}, {1, 0}, {2, 1}})},
        {"F37", from_arcs(3, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}})},
        {"F41", from_arcs(4, {{0, 2}, {0, 3}, {1, 3}})},
        {"F42", from_arcs(4, {{0, 2}, {0, 3}, {1, 3}, {2, 3}})},
        {"F43", from_arcs(4, {{0, 2}, {3, 0}, {3, 1}, {3, 2}})},
        {"F44", from_arcs(4, {{0, 2}, {0, 3}, {1, 3}, {2, 0}, {2, 3}})},
        {"F45", from_arcs(4, {{0, 2}, {1, 2}, {3, 0}, {3, 1}, {3, 2}})},
        {"F46", from_arcs(4, {{0, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}})},
        {"F47", from_arcs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})},
        {"F48", from_arcs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 2}, {1, 3}, {2, 3}})},
        {"F49", from_arcs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 2}, {1, 3}, {2, 3}, {3, 2}})},
        {"F410", from_arcs(4, {{0, 1}, {1, 0}, {2, 0}, {2, 1}, {2, 3}, {3, 0}, {3, 1}})},
    };
    return family;
}

bool is_f_free(const Digraph& d) {
    for (const auto& member : forbidden_family()) {
        if (member.digraph.order() > d.order()) continue;
        if (contains_induced(d, member.digraph)) return false;
    }
    return true;
}

namespace {

// Deleted subdigraphs repeat heavily across a census run; gamma is memoized
// by canonical form under a mutex (inserts are idempotent).
struct GammaMemo {
    std::map<CanonicalForm, int> table;
    std::mutex mutex;

    int gamma_of(const Digraph& d, const GroebnerOptions& opts) {
        const CanonicalForm key = canonical_form(d);
        {
            std::lock_guard lock(mutex);
            auto it = table.find(key);
            if (it != table.end()) return it->second;
        }
        const int g = algebraic_corank(d, opts);
        std::lock_guard lock(mutex);
        table.emplace(key, g);
        return g;
    }
};

} // namespace

std::vector<CensusEntry> census_scan(int n, int jobs, const std::set<std::string>* skip,
                                     const std::function<void(const CensusEntry&)>& on_entry) {
    if (n < 2 || n > 5) throw capability_error("census: supported for 2..5 vertices");
    if (jobs < 1) throw std::invalid_argument("census: jobs must be >= 1");
    const std::vector<Digraph> classes = enumerate_connected(n);

    std::vector<std::optional<CensusEntry>> slots(classes.size());
    GammaMemo memo;
    GroebnerOptions opts;
    std::atomic<bool> stop{false};
    std::mutex error_mutex;
    std::mutex entry_mutex;
    std::optional<resource_limit_error> first_error;

    auto worker = [&](int tid) {
        for (std::size_t idx = static_cast<std::size_t>(tid); idx < classes.size(); idx += jobs) {
            if (stop.load(std::memory_order_relaxed)) return;
            const Digraph& d = classes[idx];
            std::string d6 = emit_digraph6(d);
            if (skip && skip->count(d6)) continue;
            try {
                const int gamma = memo.gamma_of(d, opts);
                bool critical = true;
                for (int v = 0; v < n && critical; ++v)
                    if (memo.gamma_of(delete_vertex(d, v), opts) >= gamma) critical = false;
                slots[idx] = CensusEntry{d, std::move(d6), gamma, critical};
                if (on_entry) {
                    std::lock_guard lock(entry_mutex);
                    on_entry(*slots[idx]);
                }
            } catch (const resource_limit_error& e) {
                std::lock_guard lock(error_mutex);
                if (!first_error)
                    first_error.emplace(std::string("census: step cap hit at digraph ") + d6 + ": " + e.what(),
                                        e.partial_basis_size(), e.steps());
                stop.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
        for (auto& t : threads) t.join();
    }
    if (first_error) throw *first_error;

    std::vector<CensusEntry> out;
    out.reserve(classes.size());
    for (auto& slot : slots)
        if (slot) out.push_back(std::move(*slot));
    return out;
}

std::map<int, long> census(int n, int jobs) {
    std::map<int, long> counts;
    for (const auto& entry : census_scan(n, jobs))
        if (entry.critical) ++counts[entry.gamma];
    return counts;
}

} // namespace cid
