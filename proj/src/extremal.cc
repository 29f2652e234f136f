#include <zf/verify.hh>

#include <algorithm>
#include <functional>

using namespace zf;

auto zf::extremal_kind_name(ExtremalKind kind) -> std::string_view
{
    switch (kind) {
        case ExtremalKind::NotExtremal:      return "NotExtremal";
        case ExtremalKind::DisconnectedCase: return "DisconnectedCase";
        case ExtremalKind::PCForm:           return "PCForm";
        case ExtremalKind::PCPlusTail:       return "PCPlusTail";
    }
    return "Unknown";
}

namespace
{
    auto sorted_degrees(const Graph & g) -> std::vector<int>
    {
        auto d = g.degree_sequence();
        std::sort(d.begin(), d.end());
        return d;
    }

    // Calls fn for every way of writing total as k nonnegative parts.
    auto for_each_composition(int total, int k, const std::function<bool (const std::vector<int> &)> & fn) -> bool
    {
        std::vector<int> parts(k, 0);
        std::function<bool (int, int)> rec = [&] (int i, int left) -> bool {
            if (i == k - 1) {
                parts[i] = left;
                return fn(parts);
            }
            for (int p = 0 ; p <= left ; ++p) {
                parts[i] = p;
                if (rec(i + 1, left - p))
                    return true;
            }
            return false;
        };
        return rec(0, total);
    }

    // Calls fn for every size-c subset of {0..n-1} that contains `required`.
    auto for_each_subset(int n, int c, const VertexSet & required, const std::function<bool (const VertexSet &)> & fn) -> bool
    {
        VertexSet chosen;
        std::function<bool (int, int)> rec = [&] (int i, int left) -> bool {
            if (left == 0) {
                for (int r : required)
                    if (! chosen.test(r))
                        return false;
                return fn(chosen);
            }
            if (n - i < left)
                return false;
            chosen.set(i);
            if (rec(i + 1, left - 1))
                return true;
            chosen.reset(i);
            if (required.test(i))
                return false;
            return rec(i + 1, left);
        };
        return rec(0, c);
    }
}

auto zf::recognize_extremal_form(const Graph & g, const RecognizerOptions & options) -> ExtremalForm
{
    if (g.size() > options.limit)
        throw Error(ErrorKind::TooLarge, "extremal form recognition limited to " + std::to_string(options.limit) + " vertices");

    int n = g.size(), m = g.edge_count();

    if (! is_connected(g)) {
        if (n >= 2 && are_isomorphic(g, disjoint_union(complete(1), path(n - 1)), options.limit))
            return ExtremalForm{ ExtremalKind::DisconnectedCase, std::nullopt };
        return {};
    }

    auto degrees = sorted_degrees(g);
    ExtremalForm found;

    // tail == 1 means no tail; a tail of t vertices adds t-1 vertices and edges
    for (int tail = 1 ; n - (tail - 1) >= 3 ; ++tail) {
        int base_n = n - (tail - 1), base_m = m - (tail - 1);

        for (int k = 1 ; k <= base_n - 2 ; ++k) {
            int fresh_total = base_n - k - 2;
            int chords = base_m - (2 * k + 1 + fresh_total);
            if (chords < 0 || chords > fresh_total)
                continue;

            bool done = for_each_composition(fresh_total, k, [&] (const std::vector<int> & sizes) -> bool {
                if (tail == 1 && options.strict && sizes.back() != 0)
                    return false;

                // chord slots, cycle by cycle
                std::vector<std::pair<int, int>> slots;
                for (int i = 1 ; i <= k ; ++i)
                    for (int j = 1 ; j <= sizes[i - 1] ; ++j)
                        slots.emplace_back(i, j);

                VertexSet required;
                if (options.minimum_time_chords && sizes[0] > 0) {
                    // slots of cycle 1 come first: index j-1 holds u^1_j
                    required.set(sizes[0] - 1);   // next to v_1
                    if (k == 1)
                        required.set(0);          // next to v_3
                }
                if (required.count() > chords)
                    return false;

                std::vector<int> attach_points;
                if (tail > 1) {
                    attach_points.push_back(k + 1);
                    if (options.tail_at_v2 && k > 1)
                        attach_points.push_back(2);
                }
                else
                    attach_points.push_back(0);

                return for_each_subset(static_cast<int>(slots.size()), chords, required, [&] (const VertexSet & pick) -> bool {
                    PCSpec spec;
                    spec.n = sizes;
                    spec.chords.assign(k, {});
                    for (int s : pick)
                        spec.chords[slots[s].first - 1].push_back(slots[s].second);

                    for (int at : attach_points) {
                        if (tail > 1)
                            spec.tail = PCTail{ at, tail };
                        auto h = pc_graph(spec);
                        if (h.edge_count() != m || sorted_degrees(h) != degrees)
                            continue;
                        if (are_isomorphic(g, h, options.limit)) {
                            found = ExtremalForm{ tail > 1 ? ExtremalKind::PCPlusTail : ExtremalKind::PCForm, spec };
                            return true;
                        }
                    }
                    return false;
                });
            });

            if (done)
                return found;
        }
    }

    return {};
}
