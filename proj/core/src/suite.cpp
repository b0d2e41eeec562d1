#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "sombor/graph_io.hpp"
#include "sombor/inequalities.hpp"

namespace sombor {

ParameterGrid ParameterGrid::defaults() {
    ParameterGrid g;
    g.alpha = {-2.0, -1.0, -0.5, 1.0 / 3.0, 0.5, 1.0, 2.0, 3.0};
    g.beta = {-2.0, -1.0, -0.5, 0.25, 1.0 / 3.0, 0.5, 1.0, 2.0};
    g.lambda = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
    g.mu = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
    g.p = {1.25, 1.5, 2.0, 3.0};
    return g;
}

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SOMBOR_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::size_t SuiteReport::count(Verdict v) const {
    std::size_t n = 0;
    for (const SuiteRow& row : rows) n += row.result.verdict == v;
    return n;
}

std::size_t SuiteReport::count(TheoremId id, Verdict v) const {
    std::size_t n = 0;
    for (const SuiteRow& row : rows) n += row.result.theorem == id && row.result.verdict == v;
    return n;
}

namespace {

// Test fixture: reverse one bound so the harness can prove it notices a
// broken inequality. Re-derives the verdict from the swapped orientation.
void corrupt(CheckResult& r) {
    if (r.verdict == Verdict::hypothesis_unmet) return;
    std::swap(r.lhs, r.rhs);
    r.slack = r.rhs - r.lhs;
    const double tol = kCheckTolerance * std::max(std::fabs(r.lhs), std::fabs(r.rhs));
    if (r.slack < -tol) r.verdict = Verdict::violated;
    else if (r.strict) r.verdict = Verdict::holds_strict;
    else r.verdict = std::fabs(r.slack) <= tol ? Verdict::tight : Verdict::holds_strict;
    if (!r.strict) r.tightness_observed = std::fabs(r.slack) <= tol;
}

void theorem_rows(const Graph& g, TheoremId id, const ParameterGrid& grid,
                  std::vector<CheckResult>& out) {
    const auto take = [&](std::vector<CheckResult> rows) {
        out.insert(out.end(), std::make_move_iterator(rows.begin()),
                   std::make_move_iterator(rows.end()));
    };
    switch (id) {
        case TheoremId::ka_power_chain:
            for (double a : grid.alpha)
                for (double b : grid.beta)
                    for (double l : grid.lambda) take(check_ka_power_chain(g, a, b, l));
            break;
        case TheoremId::reduced_ka_power_chain:
            for (double a : grid.alpha)
                for (double b : grid.beta)
                    for (double l : grid.lambda) take(check_reduced_ka_power_chain(g, a, b, l));
            break;
        case TheoremId::so_alpha_chain:
            for (double a : grid.alpha)
                for (double mu : grid.mu) take(check_so_alpha_chain(g, a, mu));
            break;
        case TheoremId::so_alpha_vs_zagreb:
            for (double a : grid.alpha) take(check_so_alpha_vs_zagreb(g, a));
            break;
        case TheoremId::modified_sombor_vs_banhatti:
            out.push_back(check_modified_sombor_vs_banhatti(g));
            break;
        case TheoremId::ka_vs_variable_zagreb:
            for (double a : grid.alpha)
                for (double b : grid.beta) out.push_back(check_ka_vs_variable_zagreb(g, a, b));
            break;
        case TheoremId::sombor_vs_forgotten:
            out.push_back(check_sombor_vs_forgotten(g));
            break;
        case TheoremId::holder_product_chain:
            for (double a : grid.alpha)
                for (double b : grid.beta)
                    for (double mu : grid.mu)
                        for (double p : grid.p) take(check_holder_product_chain(g, a, b, mu, p));
            break;
        case TheoremId::holder_edge_count_bound:
            for (double a : grid.alpha)
                for (double mu : grid.mu)
                    for (double p : grid.p) out.push_back(check_holder_edge_count_bound(g, a, mu, p));
            break;
        case TheoremId::sombor_product_bounds:
            take(check_sombor_product_bounds(g));
            break;
        case TheoremId::so_alpha_zagreb_sharp:
            for (double a : grid.alpha) {
                take(check_so_alpha_zagreb_sharp(g, a, false));
                // the per-edge run re-reports the shared lower bound; keep
                // only its upper row
                for (CheckResult& r : check_so_alpha_zagreb_sharp(g, a, true))
                    if (r.case_index == 2) out.push_back(std::move(r));
            }
            break;
        case TheoremId::sombor_zagreb_sharp:
            take(check_sombor_zagreb_sharp(g, false));
            for (CheckResult& r : check_sombor_zagreb_sharp(g, true))
                if (r.case_index == 2) out.push_back(std::move(r));
            break;
        case TheoremId::sombor_zagreb_isi:
            take(check_sombor_isi_bounds(g));
            break;
    }
}

}  // namespace

SuiteReport run_suite(std::span<const Graph> corpus, const ParameterGrid& grid,
                      const SuiteOptions& options) {
    SuiteReport report;
    report.graphs = corpus.size();

    const int max_useful = corpus.empty() ? 1 : static_cast<int>(corpus.size());
    const int threads = std::max(1, std::min(resolve_thread_count(options.threads), max_useful));

    std::vector<std::vector<SuiteRow>> buffers(static_cast<std::size_t>(threads));
    const auto worker = [&](int w) {
        const std::size_t begin = corpus.size() * static_cast<std::size_t>(w) / threads;
        const std::size_t end = corpus.size() * (static_cast<std::size_t>(w) + 1) / threads;
        std::vector<SuiteRow>& rows = buffers[static_cast<std::size_t>(w)];
        std::vector<CheckResult> scratch;
        for (std::size_t gi = begin; gi < end; ++gi) {
            const Graph& g = corpus[gi];
            const std::string g6 = to_graph6(g);
            for (TheoremId id : kTheoremCatalog) {
                scratch.clear();
                theorem_rows(g, id, grid, scratch);
                for (CheckResult& r : scratch) {
                    if (options.corrupt_checker && id == TheoremId::modified_sombor_vs_banhatti)
                        corrupt(r);
                    rows.push_back(SuiteRow{static_cast<int>(gi), g6, std::move(r)});
                }
            }
        }
    };

    if (threads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        for (std::thread& t : pool) t.join();
    }

    std::size_t total = 0;
    for (const auto& b : buffers) total += b.size();
    report.rows.reserve(total);
    for (auto& b : buffers)
        report.rows.insert(report.rows.end(), std::make_move_iterator(b.begin()),
                           std::make_move_iterator(b.end()));
    return report;
}

}  // namespace sombor
