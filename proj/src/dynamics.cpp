#include "harmolight/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

namespace harmolight {

State rule_step(const Graph& g, const State& s) {
    const std::size_t n = g.vertex_count();
    if (s.length() != n)
        throw std::invalid_argument("state length does not match vertex count");
    const auto adj = g.adjacency_lists();
    State out(n);
    for (std::size_t v = 0; v < n; ++v) {
        unsigned excited = 0;
        for (std::uint32_t u : adj[v])
            excited += s.get(u);
        bool on;
        if (!s.get(v))
            on = excited & 1u; // law 1: odd number of excited neighbors
        else
            on = (adj[v].size() - excited) & 1u; // law 2: odd number of calm neighbors
        if (on)
            out.set(v, true);
    }
    return out;
}

TraceResult evolve(const Graph& g, const State& start, std::uint64_t max_steps,
                   bool keep_trajectory) {
    const BitMatrix a = harmonic_matrix(g);
    if (start.length() != g.vertex_count())
        throw std::invalid_argument("state length does not match vertex count");

    const std::uint64_t apply_budget = max_steps > UINT64_MAX / 4 ? UINT64_MAX : 4 * max_steps + 16;
    std::uint64_t applications = 0;
    auto step = [&](const State& s) {
        if (++applications > apply_budget)
            throw std::runtime_error("evolution did not close a cycle within " +
                                     std::to_string(max_steps) + " steps");
        return a * s;
    };

    // Brent's algorithm: cycle length first, then the preperiod.
    std::uint64_t power = 1, lambda = 1;
    State tortoise = start;
    State hare = step(start);
    while (!(tortoise == hare)) {
        if (power == lambda) {
            tortoise = hare;
            power *= 2;
            lambda = 0;
        }
        hare = step(hare);
        ++lambda;
    }

    State front = start;
    for (std::uint64_t i = 0; i < lambda; ++i)
        front = step(front);
    State back = start;
    std::uint64_t mu = 0;
    while (!(back == front)) {
        back = step(back);
        front = step(front);
        ++mu;
    }

    if (mu + lambda > max_steps)
        throw std::runtime_error("evolution did not close a cycle within " +
                                 std::to_string(max_steps) + " steps");

    TraceResult result;
    result.preperiod = mu;
    result.cycle_length = lambda;
    if (keep_trajectory) {
        result.trajectory.reserve(mu + lambda);
        State s = start;
        for (std::uint64_t i = 0; i < mu + lambda; ++i) {
            result.trajectory.push_back(s);
            s = a * s;
        }
    }
    return result;
}

EvolutionDigraph brute_digraph(const Graph& g, std::uint64_t state_limit, unsigned workers) {
    const std::size_t n = g.vertex_count();
    if (n >= 63 || (std::uint64_t{1} << n) > state_limit)
        throw std::runtime_error("graph too large for exhaustive enumeration (2^" +
                                 std::to_string(n) + " states, limit " +
                                 std::to_string(state_limit) + ")");
    const std::uint64_t n_states = std::uint64_t{1} << n;
    if (n_states > UINT32_MAX)
        throw std::runtime_error("state space exceeds 32-bit indexing");

    EvolutionDigraph d;
    d.n_vertices = n;
    d.n_states = n_states;
    d.successor.assign(n_states, 0);

    // Column masks of the harmonic matrix: successor(x) = xor of columns at
    // the set bits of x.
    const BitMatrix a = harmonic_matrix(g);
    std::vector<std::uint64_t> col(n, 0);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
            if (a.get(r, c))
                col[c] |= std::uint64_t{1} << r;

    auto fill = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t x = begin; x < end; ++x) {
            std::uint64_t y = 0;
            std::uint64_t bits = x;
            while (bits != 0) {
                y ^= col[std::countr_zero(bits)];
                bits &= bits - 1;
            }
            d.successor[x] = static_cast<std::uint32_t>(y);
        }
    };
    if (workers <= 1 || n_states < (std::uint64_t{1} << 16)) {
        fill(0, n_states);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (n_states + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = std::min<std::uint64_t>(w * chunk, n_states);
            const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, n_states);
            if (begin < end)
                pool.emplace_back(fill, begin, end);
        }
        for (auto& t : pool)
            t.join();
    }

    // Cycle discovery by path walking.
    d.on_cycle.assign(n_states, 0);
    std::vector<std::uint8_t> status(n_states, 0); // 0 new, 1 on path, 2 done
    std::vector<std::uint32_t> pos(n_states, 0);
    std::vector<std::uint32_t> path;
    for (std::uint64_t s = 0; s < n_states; ++s) {
        if (status[s] != 0)
            continue;
        path.clear();
        std::uint32_t cur = static_cast<std::uint32_t>(s);
        while (status[cur] == 0) {
            status[cur] = 1;
            pos[cur] = static_cast<std::uint32_t>(path.size());
            path.push_back(cur);
            cur = d.successor[cur];
        }
        if (status[cur] == 1) {
            std::vector<std::uint32_t> cycle(path.begin() + pos[cur], path.end());
            const auto min_it = std::min_element(cycle.begin(), cycle.end());
            std::rotate(cycle.begin(), min_it, cycle.end());
            for (std::uint32_t c : cycle)
                d.on_cycle[c] = 1;
            d.cycles.push_back(std::move(cycle));
        }
        for (std::uint32_t p : path)
            status[p] = 2;
    }

    // Depths by reverse BFS from the cycle states over a CSR predecessor map.
    std::vector<std::uint32_t> offset(n_states + 1, 0);
    for (std::uint64_t s = 0; s < n_states; ++s)
        ++offset[d.successor[s] + 1];
    for (std::uint64_t s = 0; s < n_states; ++s)
        offset[s + 1] += offset[s];
    std::vector<std::uint32_t> preds(n_states);
    {
        std::vector<std::uint32_t> cursor(offset.begin(), offset.end() - 1);
        for (std::uint64_t s = 0; s < n_states; ++s)
            preds[cursor[d.successor[s]]++] = static_cast<std::uint32_t>(s);
    }
    d.tail_depth.assign(n_states, 0);
    std::vector<std::uint32_t> queue;
    queue.reserve(n_states);
    for (std::uint64_t s = 0; s < n_states; ++s)
        if (d.on_cycle[s])
            queue.push_back(static_cast<std::uint32_t>(s));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t v = queue[head];
        for (std::uint32_t i = offset[v]; i < offset[v + 1]; ++i) {
            const std::uint32_t p = preds[i];
            if (!d.on_cycle[p] && d.tail_depth[p] == 0) {
                d.tail_depth[p] = d.tail_depth[v] + 1;
                queue.push_back(p);
            }
        }
    }
    return d;
}

LoopEnsemble oracle_loop_ensemble(const EvolutionDigraph& d) {
    LoopEnsemble e;
    for (const auto& cycle : d.cycles)
        e.add_loops(cycle.size(), 1);
    return e;
}

std::vector<std::uint64_t> oracle_kernel_counts(const EvolutionDigraph& d) {
    // BFS from the zero state over predecessors, skipping its self-loop;
    // dist[x] is the number of steps x needs to die out.
    constexpr std::uint32_t kUnreached = UINT32_MAX;
    std::vector<std::uint32_t> dist(d.n_states, kUnreached);
    dist[0] = 0;
    // Invert the successor array once.
    std::vector<std::uint32_t> offset(d.n_states + 1, 0);
    for (std::uint64_t s = 0; s < d.n_states; ++s)
        ++offset[d.successor[s] + 1];
    for (std::uint64_t s = 0; s < d.n_states; ++s)
        offset[s + 1] += offset[s];
    std::vector<std::uint32_t> preds(d.n_states);
    {
        std::vector<std::uint32_t> cursor(offset.begin(), offset.end() - 1);
        for (std::uint64_t s = 0; s < d.n_states; ++s)
            preds[cursor[d.successor[s]]++] = static_cast<std::uint32_t>(s);
    }
    std::vector<std::uint32_t> queue{0};
    std::uint32_t max_depth = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t v = queue[head];
        for (std::uint32_t i = offset[v]; i < offset[v + 1]; ++i) {
            const std::uint32_t p = preds[i];
            if (p != 0 && dist[p] == kUnreached) {
                dist[p] = dist[v] + 1;
                max_depth = std::max(max_depth, dist[p]);
                queue.push_back(p);
            }
        }
    }
    std::vector<std::uint64_t> counts(max_depth, 0);
    std::vector<std::uint64_t> at_depth(max_depth + 1, 0);
    for (std::uint64_t s = 0; s < d.n_states; ++s)
        if (dist[s] != kUnreached)
            ++at_depth[dist[s]];
    std::uint64_t running = at_depth[0];
    for (std::uint32_t j = 1; j <= max_depth; ++j) {
        running += at_depth[j];
        counts[j - 1] = running;
    }
    return counts;
}

std::string export_dot(const EvolutionDigraph& d) {
    auto label = [&](std::uint64_t s) {
        std::string bits(d.n_vertices, '0');
        for (std::size_t i = 0; i < d.n_vertices; ++i)
            if ((s >> i) & 1u)
                bits[i] = '1';
        return bits;
    };
    std::string out = "digraph evolution {\n  node [shape=circle];\n";
    for (std::uint64_t s = 0; s < d.n_states; ++s)
        if (d.is_cycle_state(s))
            out += "  \"" + label(s) + "\" [shape=doublecircle];\n";
    for (std::uint64_t s = 0; s < d.n_states; ++s)
        out += "  \"" + label(s) + "\" -> \"" + label(d.successor[s]) + "\";\n";
    out += "}\n";
    return out;
}

} // namespace harmolight
