#include "ordtree/containment.hpp"

#include <algorithm>
#include <bit>

namespace ordtree {

namespace {

// Backtracking matcher. Pattern vertices are 0-based internally and are
// assigned "keys": host positions read from a frame origin. Linear mode has
// one frame (key = label - 1). Cyclic mode has one frame per host vertex s,
// with pattern vertex 0 pinned to key 0 at host s, so every cyclic embedding
// is produced in exactly one frame. Keys must increase with the pattern
// index, which is the whole order-preservation constraint.
class Matcher {
public:
    Matcher(Mode mode, const AdjacencyMatrix& host, const Graph& pattern, const std::vector<std::pair<int, int>>& pins)
        : mode_(mode), host_(host), h_(host.size()), p_(pattern.n())
    {
        adj_.assign(static_cast<std::size_t>(p_), {});
        for (const auto& e : pattern.edges()) {
            adj_[static_cast<std::size_t>(e.u - 1)].push_back(e.v - 1);
            adj_[static_cast<std::size_t>(e.v - 1)].push_back(e.u - 1);
        }
        pin_.assign(static_cast<std::size_t>(p_), -1);
        for (auto [pv, hv] : pins) {
            if (pv < 1 || pv > p_ || hv < 1 || hv > h_)
                throw InputError("pin outside vertex range");
            auto& slot = pin_[static_cast<std::size_t>(pv - 1)];
            if (slot >= 0 && slot != hv - 1)
                conflicting_pins_ = true;
            slot = hv - 1;
        }
        host_degree_.resize(static_cast<std::size_t>(h_));
        for (int x = 0; x < h_; ++x)
            host_degree_[static_cast<std::size_t>(x)] = host.degree(x);
        build_order();
        key_.assign(static_cast<std::size_t>(p_), -1);
        img_.assign(static_cast<std::size_t>(p_), -1);
    }

    // Returns false if the visitor asked to stop.
    bool run(const std::function<bool(const std::vector<int>&)>& visit)
    {
        if (p_ > h_ || conflicting_pins_)
            return true;
        visit_ = &visit;
        if (mode_ == Mode::linear) {
            base_ = 0;
            return extend(0);
        }
        for (int s = 0; s < h_; ++s) {
            if (pin_[0] >= 0 && pin_[0] != s)
                continue;
            base_ = s;
            if (!extend(0))
                return false;
        }
        return true;
    }

private:
    void build_order()
    {
        std::vector<char> placed(static_cast<std::size_t>(p_), 0);
        auto take = [&](int v) {
            placed[static_cast<std::size_t>(v)] = 1;
            order_.push_back(v);
        };
        if (mode_ == Mode::cyclic || std::none_of(pin_.begin(), pin_.end(), [](int x) { return x >= 0; }))
            take(0);
        for (int v = 0; v < p_; ++v)
            if (pin_[static_cast<std::size_t>(v)] >= 0 && !placed[static_cast<std::size_t>(v)])
                take(v);
        while (static_cast<int>(order_.size()) < p_) {
            // Most already-placed neighbours first; ties by index.
            int best = -1;
            int best_links = -1;
            for (int v = 0; v < p_; ++v) {
                if (placed[static_cast<std::size_t>(v)])
                    continue;
                int links = 0;
                for (int w : adj_[static_cast<std::size_t>(v)])
                    links += placed[static_cast<std::size_t>(w)];
                if (links > best_links) {
                    best = v;
                    best_links = links;
                }
            }
            take(best);
        }
        parent_.assign(static_cast<std::size_t>(p_), -1);
        checks_.assign(static_cast<std::size_t>(p_), {});
        std::vector<char> before(static_cast<std::size_t>(p_), 0);
        for (int v : order_) {
            for (int w : adj_[static_cast<std::size_t>(v)]) {
                if (!before[static_cast<std::size_t>(w)])
                    continue;
                if (parent_[static_cast<std::size_t>(v)] < 0)
                    parent_[static_cast<std::size_t>(v)] = w;
                else
                    checks_[static_cast<std::size_t>(v)].push_back(w);
            }
            before[static_cast<std::size_t>(v)] = 1;
        }
    }

    int to_key(int x) const { return mode_ == Mode::linear ? x : (x - base_ + h_) % h_; }
    int to_host(int key) const { return mode_ == Mode::linear ? key : (key + base_) % h_; }

    bool accept(int v, int x, int key, int lo, int hi) const
    {
        if (key < lo || key > hi)
            return false;
        if (host_degree_[static_cast<std::size_t>(x)] < static_cast<int>(adj_[static_cast<std::size_t>(v)].size()))
            return false;
        for (int w : checks_[static_cast<std::size_t>(v)])
            if (!host_.test(x, img_[static_cast<std::size_t>(w)]))
                return false;
        return true;
    }

    bool place_and_recurse(std::size_t depth, int v, int x, int key)
    {
        key_[static_cast<std::size_t>(v)] = key;
        img_[static_cast<std::size_t>(v)] = x;
        bool keep_going = extend(depth + 1);
        key_[static_cast<std::size_t>(v)] = -1;
        img_[static_cast<std::size_t>(v)] = -1;
        return keep_going;
    }

    bool extend(std::size_t depth)
    {
        if (depth == order_.size())
            return (*visit_)(img_);
        int v = order_[depth];
        // Feasible key window from the nearest placed pattern vertices on each side.
        int lo = v;
        int hi = h_ - p_ + v;
        for (int u = 0; u < p_; ++u) {
            int k = key_[static_cast<std::size_t>(u)];
            if (k < 0)
                continue;
            if (u < v)
                lo = std::max(lo, k + (v - u));
            else
                hi = std::min(hi, k - (u - v));
        }
        if (mode_ == Mode::cyclic && v == 0)
            lo = hi = 0;
        if (lo > hi)
            return true;

        if (int pinned = pin_[static_cast<std::size_t>(v)]; pinned >= 0) {
            int parent = parent_[static_cast<std::size_t>(v)];
            if (parent >= 0 && !host_.test(pinned, img_[static_cast<std::size_t>(parent)]))
                return true;
            int key = to_key(pinned);
            if (!accept(v, pinned, key, lo, hi))
                return true;
            return place_and_recurse(depth, v, pinned, key);
        }

        int parent = parent_[static_cast<std::size_t>(v)];
        if (parent >= 0) {
            auto row = host_.row(img_[static_cast<std::size_t>(parent)]);
            for (std::size_t w = 0; w < row.size(); ++w) {
                for (std::uint64_t bits = row[w]; bits; bits &= bits - 1) {
                    int x = static_cast<int>(w * 64) + std::countr_zero(bits);
                    int key = to_key(x);
                    if (accept(v, x, key, lo, hi) && !place_and_recurse(depth, v, x, key))
                        return false;
                }
            }
            return true;
        }
        for (int key = lo; key <= hi; ++key) {
            int x = to_host(key);
            if (accept(v, x, key, lo, hi) && !place_and_recurse(depth, v, x, key))
                return false;
        }
        return true;
    }

    Mode mode_;
    const AdjacencyMatrix& host_;
    int h_;
    int p_;
    int base_ = 0;
    bool conflicting_pins_ = false;
    std::vector<std::vector<int>> adj_;
    std::vector<int> pin_;
    std::vector<int> host_degree_;
    std::vector<int> order_;
    std::vector<int> parent_;
    std::vector<std::vector<int>> checks_;
    std::vector<int> key_;
    std::vector<int> img_;
    const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
};

bool cyclically_increasing(const std::vector<int>& seq)
{
    int descents = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] > seq[(i + 1) % seq.size()])
            ++descents;
    return descents <= 1;
}

} // namespace

void for_each_embedding(Mode mode, const AdjacencyMatrix& host, const Graph& pattern, const SearchOptions& options,
                        const EmbeddingVisitor& visit)
{
    if (pattern.mode() != mode)
        throw InputError("host and pattern modes differ");
    int p = pattern.n();
    bool stopped = false;
    {
        Matcher matcher(mode, host, pattern, options.pins);
        std::function<bool(const std::vector<int>&)> emit = [&](const std::vector<int>& img) {
            Embedding emb{mode, false, {}};
            emb.map.reserve(img.size());
            for (int x : img)
                emb.map.push_back(x + 1);
            return visit(emb);
        };
        stopped = !matcher.run(emit);
    }
    if (stopped || mode != Mode::cyclic || !options.allow_reflection)
        return;

    Graph reversed = mirror(pattern);
    std::vector<std::pair<int, int>> pins;
    for (auto [pv, hv] : options.pins)
        pins.emplace_back(p + 1 - pv, hv);
    Matcher matcher(mode, host, reversed, pins);
    std::function<bool(const std::vector<int>&)> emit = [&](const std::vector<int>& img) {
        Embedding emb{mode, true, std::vector<int>(static_cast<std::size_t>(p))};
        for (int v = 1; v <= p; ++v)
            emb.map[static_cast<std::size_t>(v - 1)] = img[static_cast<std::size_t>(p - v)] + 1;
        // Maps that preserve the orientation as well were already reported.
        if (cyclically_increasing(emb.map))
            return true;
        return visit(emb);
    };
    matcher.run(emit);
}

void for_each_embedding(const Graph& host, const Graph& pattern, const SearchOptions& options,
                        const EmbeddingVisitor& visit)
{
    if (host.mode() != pattern.mode())
        throw InputError("host and pattern modes differ");
    for_each_embedding(host.mode(), host.adjacency_matrix(), pattern, options, visit);
}

std::optional<Embedding> find_embedding(const Graph& host, const Graph& pattern, const SearchOptions& options)
{
    std::optional<Embedding> found;
    for_each_embedding(host, pattern, options, [&](const Embedding& e) {
        found = e;
        return false;
    });
    return found;
}

std::vector<Embedding> find_all_embeddings(const Graph& host, const Graph& pattern, const SearchOptions& options)
{
    std::vector<Embedding> all;
    for_each_embedding(host, pattern, options, [&](const Embedding& e) {
        all.push_back(e);
        return true;
    });
    return all;
}

bool contains(const Graph& host, const Graph& pattern, const SearchOptions& options)
{
    return find_embedding(host, pattern, options).has_value();
}

std::optional<Embedding> find_embedding_through(Mode mode, const AdjacencyMatrix& host, const Graph& pattern, Edge e)
{
    std::optional<Embedding> found;
    auto stop = [&](const Embedding& emb) {
        found = emb;
        return false;
    };
    for (const auto& pe : pattern.edges()) {
        SearchOptions options;
        options.pins = {{pe.u, e.u}, {pe.v, e.v}};
        for_each_embedding(mode, host, pattern, options, stop);
        if (found)
            return found;
        if (mode == Mode::cyclic) {
            options.pins = {{pe.u, e.v}, {pe.v, e.u}};
            for_each_embedding(mode, host, pattern, options, stop);
            if (found)
                return found;
        }
    }
    return found;
}

bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& embedding)
{
    const auto& map = embedding.map;
    if (static_cast<int>(map.size()) != pattern.n() || embedding.mode != host.mode())
        return false;
    std::vector<int> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    if (!sorted.empty() && (sorted.front() < 1 || sorted.back() > host.n()))
        return false;
    if (embedding.mode == Mode::linear) {
        if (embedding.reflected || !std::is_sorted(map.begin(), map.end()))
            return false;
    } else {
        std::vector<int> seq = map;
        if (embedding.reflected)
            std::reverse(seq.begin(), seq.end());
        if (!cyclically_increasing(seq))
            return false;
    }
    return std::all_of(pattern.edges().begin(), pattern.edges().end(),
                       [&](const Edge& e) { return host.has_edge(embedding(e.u), embedding(e.v)); });
}

} // namespace ordtree
