#include <zf/solver.hh>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>

using namespace zf;

namespace
{
    constexpr std::size_t batch_size = 4096;
    constexpr std::size_t memo_capacity = 32;

    // Stepping through k-subsets of {0..n-1} in lexicographic order.
    class Combinations
    {
        public:
            Combinations(int n, int k) : _n(n), _idx(k)
            {
                for (int i = 0 ; i < k ; ++i)
                    _idx[i] = i;
                _done = k > n;
            }

            auto done() const -> bool { return _done; }

            auto current() const -> VertexSet
            {
                VertexSet result;
                for (int v : _idx)
                    result.set(v);
                return result;
            }

            auto advance() -> void
            {
                int k = static_cast<int>(_idx.size());
                int i = k - 1;
                while (i >= 0 && _idx[i] == _n - k + i)
                    --i;
                if (i < 0) {
                    _done = true;
                    return;
                }
                ++_idx[i];
                for (int j = i + 1 ; j < k ; ++j)
                    _idx[j] = _idx[j - 1] + 1;
            }

        private:
            int _n;
            std::vector<int> _idx;
            bool _done;
    };

    auto evaluate_slice(const Graph & g, const VertexSet * first, const VertexSet * last, int * out, bool memo) -> void
    {
        std::vector<VertexSet> failed;
        std::size_t next_slot = 0;
        for ( ; first != last ; ++first, ++out) {
            if (memo) {
                bool dominated = false;
                for (auto & f : failed)
                    if (first->subset_of(f)) {
                        dominated = true;
                        break;
                    }
                if (dominated) {
                    *out = -1;
                    continue;
                }
            }
            auto p = propagate(g, *first);
            *out = p.complete ? p.rounds : -1;
            if (memo && ! p.complete) {
                if (failed.size() < memo_capacity)
                    failed.push_back(p.closure);
                else
                    failed[next_slot++ % memo_capacity] = p.closure;
            }
        }
    }

    // ESU-style growth: every connected set is reached exactly once, from its
    // smallest vertex, by only ever adding exclusive neighbours above the root.
    auto grow(const Graph & g, const VertexSet & within, const VertexSet & sub, VertexSet ext,
            const VertexSet & seen, const VertexSet & above_root, int size, std::vector<VertexSet> & out) -> void
    {
        if (sub.count() == size) {
            out.push_back(sub);
            return;
        }
        while (! ext.empty()) {
            int w = ext.first();
            ext.reset(w);
            auto exclusive = (g.adjacency(w) - seen) & within & above_root;
            auto child = sub;
            child.set(w);
            grow(g, within, child, ext | exclusive, seen | g.closed_neighbourhood(w), above_root, size, out);
        }
    }
}

auto zf::budget_from_environment() -> long long
{
    if (const char * env = std::getenv("ZF_BUDGET")) {
        try {
            long long value = std::stoll(env);
            if (value > 0)
                return value;
        }
        catch (const std::exception &) {
        }
    }
    return default_budget;
}

auto zf::connected_subsets(const Graph & g, const VertexSet & within, int size) -> std::vector<VertexSet>
{
    std::vector<VertexSet> result;
    if (size < 1 || size > within.count())
        return result;

    for (int root : within) {
        VertexSet above_root = g.vertices();
        for (int v = 0 ; v <= root ; ++v)
            above_root.reset(v);
        VertexSet sub;
        sub.set(root);
        auto ext = g.adjacency(root) & within & above_root;
        grow(g, within, sub, ext, g.closed_neighbourhood(root), above_root, size, result);
    }

    std::sort(result.begin(), result.end(), lex_less);
    return result;
}

Solver::Solver(const Graph & g, SolverOptions options) :
    _g(g), _options(options), _components(components(g))
{
    if (_options.jobs < 1)
        _options.jobs = 1;
}

auto Solver::charge(long long evaluations, int level) -> void
{
    if (_stats.closures + evaluations > _options.budget) {
        _stats.exceeded = true;
        throw BudgetExceeded("closure budget of " + std::to_string(_options.budget) + " exhausted at set size "
                + std::to_string(level), level, _g.size(), _stats.closures);
    }
    _stats.closures += evaluations;
}

auto Solver::scan(const std::vector<VertexSet> & candidates, std::vector<int> & rounds) -> void
{
    rounds.assign(candidates.size(), -1);
    std::size_t total = candidates.size();
    std::size_t jobs = std::min<std::size_t>(_options.jobs, std::max<std::size_t>(1, total / 64));

    if (jobs <= 1) {
        evaluate_slice(_g, candidates.data(), candidates.data() + total, rounds.data(), _options.memo_failed);
        return;
    }

    std::vector<std::thread> workers;
    std::size_t per = (total + jobs - 1) / jobs;
    for (std::size_t j = 0 ; j < jobs ; ++j) {
        std::size_t lo = j * per, hi = std::min(total, lo + per);
        if (lo >= hi)
            break;
        workers.emplace_back(evaluate_slice, std::cref(_g), candidates.data() + lo, candidates.data() + hi,
                rounds.data() + lo, _options.memo_failed);
    }
    for (auto & w : workers)
        w.join();
}

auto Solver::connected_sets(std::size_t component, int size) -> const std::vector<VertexSet> &
{
    auto key = std::make_pair(component, size);
    auto it = _connected_cache.find(key);
    if (it == _connected_cache.end())
        it = _connected_cache.emplace(key, connected_subsets(_g, _components[component], size)).first;
    return it->second;
}

auto Solver::connected_candidates(int k) -> std::vector<VertexSet>
{
    std::vector<VertexSet> result;
    std::size_t c = _components.size();
    std::vector<int> sizes(c);

    // Distribute k over the components, at least one vertex each, then take
    // the product of each component's connected sets of that size.
    auto combine = [&] (auto & self, std::size_t i, const VertexSet & acc) -> void {
        if (i == c) {
            result.push_back(acc);
            return;
        }
        for (auto & s : connected_sets(i, sizes[i]))
            self(self, i + 1, acc | s);
    };

    auto distribute = [&] (auto & self, std::size_t i, int remaining) -> void {
        if (i == c) {
            if (remaining == 0)
                combine(combine, 0, VertexSet{});
            return;
        }
        int left_after = static_cast<int>(c - i - 1);
        int cap = std::min(_components[i].count(), remaining - left_after);
        for (int s = 1 ; s <= cap ; ++s) {
            sizes[i] = s;
            self(self, i + 1, remaining - s);
        }
    };

    distribute(distribute, 0, k);
    std::sort(result.begin(), result.end(), lex_less);
    return result;
}

auto Solver::minimum_level(bool connected) -> const Level &
{
    auto & cached = connected ? _connected : _plain;
    if (cached)
        return *cached;

    int n = _g.size();
    int start = std::max(1, _g.min_degree());
    if (connected) {
        start = std::max(start, static_cast<int>(_components.size()));
        if (_plain)
            start = std::max(start, _plain->size);
    }

    std::vector<int> rounds;
    for (int k = start ; k <= n ; ++k) {
        Level level{ k, {}, {} };
        auto collect = [&] (const std::vector<VertexSet> & batch) {
            charge(static_cast<long long>(batch.size()), k);
            scan(batch, rounds);
            for (std::size_t i = 0 ; i < batch.size() ; ++i)
                if (rounds[i] >= 0) {
                    level.sets.push_back(batch[i]);
                    level.rounds.push_back(rounds[i]);
                }
        };

        if (connected) {
            auto all = connected_candidates(k);
            _stats.candidates += static_cast<long long>(all.size());
            for (std::size_t lo = 0 ; lo < all.size() ; lo += batch_size) {
                std::vector<VertexSet> batch(all.begin() + lo, all.begin() + std::min(all.size(), lo + batch_size));
                collect(batch);
            }
        }
        else {
            std::vector<VertexSet> batch;
            batch.reserve(batch_size);
            for (Combinations c(n, k) ; ! c.done() ; c.advance()) {
                batch.push_back(c.current());
                if (batch.size() == batch_size) {
                    _stats.candidates += static_cast<long long>(batch.size());
                    collect(batch);
                    batch.clear();
                }
            }
            if (! batch.empty()) {
                _stats.candidates += static_cast<long long>(batch.size());
                collect(batch);
            }
        }

        if (! level.sets.empty()) {
            cached = std::move(level);
            return *cached;
        }
    }

    // V is always a (connected) zero forcing set, so the loop returns.
    throw Error(ErrorKind::InvalidSpec, "no zero forcing set found; graph invariant broken");
}

auto Solver::zero_forcing_number() -> Witnessed
{
    auto & level = minimum_level(false);
    return Witnessed{ level.size, level.sets.front() };
}

auto Solver::connected_zero_forcing_number() -> Witnessed
{
    auto & level = minimum_level(true);
    return Witnessed{ level.size, level.sets.front() };
}

auto Solver::enumerate_min_zfs(int k) -> std::vector<VertexSet>
{
    auto & level = minimum_level(false);
    if (k != level.size)
        throw Error(ErrorKind::WrongSize, "requested size " + std::to_string(k) + " but Z(G) = " + std::to_string(level.size));
    return level.sets;
}

auto Solver::enumerate_min_czfs(int k) -> std::vector<VertexSet>
{
    auto & level = minimum_level(true);
    if (k != level.size)
        throw Error(ErrorKind::WrongSize, "requested size " + std::to_string(k) + " but Z_c(G) = " + std::to_string(level.size));
    return level.sets;
}

auto Solver::propagation_extrema(bool connected) -> Extrema
{
    auto & level = minimum_level(connected);
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1 ; i < level.sets.size() ; ++i) {
        if (level.rounds[i] < level.rounds[lo])
            lo = i;
        if (level.rounds[i] > level.rounds[hi])
            hi = i;
    }
    return Extrema{ level.size, static_cast<long long>(level.sets.size()),
        Witnessed{ level.rounds[lo], level.sets[lo] }, Witnessed{ level.rounds[hi], level.sets[hi] } };
}

auto Solver::report() -> SolveReport
{
    auto started = std::chrono::steady_clock::now();
    SolveReport result;
    result.n = _g.size();
    result.m = _g.edge_count();

    try {
        auto plain = propagation_extrema(false);
        result.z = zero_forcing_number();
        result.pt = plain.min;
        result.PT = plain.max;
        result.min_zfs_count = plain.count;

        auto conn = propagation_extrema(true);
        result.z_c = connected_zero_forcing_number();
        result.pt_c = conn.min;
        result.PT_c = conn.max;
        result.min_czfs_count = conn.count;
    }
    catch (const BudgetExceeded &) {
        _stats.exceeded = true;
    }

    _stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    result.stats = _stats;
    return result;
}

auto zf::zero_forcing_number(const Graph & g, SolverOptions options) -> Witnessed
{
    return Solver(g, options).zero_forcing_number();
}

auto zf::connected_zero_forcing_number(const Graph & g, SolverOptions options) -> Witnessed
{
    return Solver(g, options).connected_zero_forcing_number();
}

auto zf::propagation_extrema(const Graph & g, bool connected, SolverOptions options) -> Extrema
{
    return Solver(g, options).propagation_extrema(connected);
}

auto zf::solve_report(const Graph & g, SolverOptions options) -> SolveReport
{
    return Solver(g, options).report();
}
