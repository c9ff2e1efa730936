#include "lahkit/forest.hpp"

#include <algorithm>
#include <numeric>

namespace lahkit {

bool Forest::valid() const {
    if (static_cast<int>(children.size()) != n + 1) return false;
    std::vector<bool> seen(n + 1, false);
    for (int r : roots) {
        if (r < 1 || r > n || seen[r]) return false;
        seen[r] = true;
    }
    for (int v = 1; v <= n; ++v)
        for (int c : children[v]) {
            if (c <= v || c > n || seen[c]) return false;
            seen[c] = true;
        }
    for (int v = 1; v <= n; ++v)
        if (!seen[v]) return false;
    return true;
}

std::vector<int> LukPath::heights() const {
    std::vector<int> h(steps.size() + 1);
    h[0] = start_height;
    for (size_t j = 0; j < steps.size(); ++j) h[j + 1] = h[j] + steps[j];
    return h;
}

void LukPath::validate() const {
    if (labels.size() != steps.size())
        throw invalid_path("LukPath: label/step count mismatch");
    auto h = heights();
    const size_t n = steps.size();
    if (n == 0) {
        if (start_height != 0) throw invalid_path("LukPath: empty path must sit at 0");
        return;
    }
    for (size_t j = 0; j < n; ++j) {
        if (steps[j] < -1) throw invalid_path("LukPath: step below -1");
        if (h[j] < 1) throw invalid_path("LukPath: height reached 0 before the end");
        if (labels[j] < 1 || labels[j] > h[j])
            throw invalid_path("LukPath: label out of range at step " + std::to_string(j + 1));
    }
    if (h[n] != 0) throw invalid_path("LukPath: must end at height 0");
}

namespace {

void enumerate_rec(Forest& f, int next, int n, bool ordered,
                   const std::function<void(const Forest&)>& visit) {
    if (next > n) {
        visit(f);
        return;
    }
    // vertex `next` as a child of any existing vertex, in any gap
    for (int v = 1; v < next; ++v) {
        auto& kids = f.children[v];
        for (size_t pos = 0; pos <= kids.size(); ++pos) {
            kids.insert(kids.begin() + pos, next);
            enumerate_rec(f, next + 1, n, ordered, visit);
            kids.erase(kids.begin() + pos);
        }
    }
    // vertex `next` as a new root
    if (ordered) {
        for (size_t pos = 0; pos <= f.roots.size(); ++pos) {
            f.roots.insert(f.roots.begin() + pos, next);
            enumerate_rec(f, next + 1, n, ordered, visit);
            f.roots.erase(f.roots.begin() + pos);
        }
    } else {
        f.roots.push_back(next); // roots stay ascending: next is the largest
        enumerate_rec(f, next + 1, n, ordered, visit);
        f.roots.pop_back();
    }
}

} // namespace

void enumerate_increasing_forests(int n, int k, bool ordered,
                                  const std::function<void(const Forest&)>& visit,
                                  int cap) {
    if (n < 0 || k < 0 || k > n)
        throw domain_error("enumerate_increasing_forests: need 0 <= k <= n");
    if (n > cap)
        throw cap_exceeded("enumerate_increasing_forests: n = " + std::to_string(n) +
                           " exceeds cap " + std::to_string(cap));
    Forest f(n);
    enumerate_rec(f, 1, n, ordered, [&](const Forest& g) {
        if (g.k() == k) visit(g);
    });
}

std::vector<Forest> list_increasing_forests(int n, int k, bool ordered, int cap) {
    std::vector<Forest> out;
    enumerate_increasing_forests(n, k, ordered, [&](const Forest& f) { out.push_back(f); },
                                 cap);
    return out;
}

int vertex_level(const Forest& f, int j) {
    if (j < 1 || j > f.n) throw domain_error("vertex_level: unknown vertex");
    int straddling = 0;
    for (int v = 1; v < j; ++v)
        for (int c : f.children[v])
            if (c > j) ++straddling;
    int rj = 0;
    for (int r : f.roots)
        if (r <= j) ++rj; // roots are tree minima
    return straddling + f.k() + 1 - rj;
}

MPoly lah_brute(int n, int k, const WeightSpec& w, int cap) {
    if (n > cap)
        throw cap_exceeded("lah_brute: n exceeds cap " + std::to_string(cap));
    MPoly total;
    enumerate_increasing_forests(n, k, /*ordered=*/false, [&](const Forest& f) {
        MPoly weight(1);
        for (int v = 1; v <= n; ++v)
            weight *= w.phi(f.degree(v), vertex_level(f, v));
        total += weight;
    }, cap);
    return total;
}

namespace {

void preorder(const Forest& f, std::vector<int>& order) {
    std::vector<int> stack;
    for (auto it = f.roots.rbegin(); it != f.roots.rend(); ++it) stack.push_back(*it);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        const auto& kids = f.children[v];
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
}

} // namespace

LukPath forest_to_path(const Forest& f) {
    LukPath p;
    p.start_height = f.k();
    p.steps.resize(f.n);
    p.labels.resize(f.n);
    for (int j = 1; j <= f.n; ++j) p.steps[j - 1] = f.degree(j) - 1;

    std::vector<int> order;
    preorder(f, order);
    std::vector<int> pos(f.n + 1);
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

    std::vector<bool> is_root(f.n + 1, false);
    for (int r : f.roots) is_root[r] = true;

    // xi_j = 1 + #{v > j : v is a root or a child of some u <= j-1,
    //              and v precedes j in preorder}
    for (int j = 1; j <= f.n; ++j) {
        int count = 0;
        for (int v = j + 1; v <= f.n; ++v) {
            if (pos[v] >= pos[j]) continue;
            bool eligible = is_root[v];
            if (!eligible) {
                for (int u = 1; u < j && !eligible; ++u)
                    eligible = std::find(f.children[u].begin(), f.children[u].end(), v) !=
                               f.children[u].end();
            }
            if (eligible) ++count;
        }
        p.labels[j - 1] = 1 + count;
    }
    return p;
}

namespace {

// Scratch node for path_to_forest: a vertex id (> 0) or a vacant slot (0).
struct BuildNode {
    int id = 0;
    std::vector<int> kids; // indices into the node pool
};

// Collect pool indices of vacant slots in preorder.
void collect_slots(const std::vector<BuildNode>& pool, const std::vector<int>& roots,
                   std::vector<int>& slots) {
    std::vector<int> stack;
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) stack.push_back(*it);
    while (!stack.empty()) {
        int idx = stack.back();
        stack.pop_back();
        if (pool[idx].id == 0) slots.push_back(idx);
        const auto& kids = pool[idx].kids;
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
}

} // namespace

Forest path_to_forest(const LukPath& p) {
    p.validate();
    const int n = static_cast<int>(p.steps.size());
    const int k = p.start_height;

    std::vector<BuildNode> pool(k);
    std::vector<int> roots(k);
    std::iota(roots.begin(), roots.end(), 0);

    for (int j = 1; j <= n; ++j) {
        std::vector<int> slots;
        collect_slots(pool, roots, slots);
        int idx = slots[p.labels[j - 1] - 1];
        pool[idx].id = j;
        int new_slots = p.steps[j - 1] + 1;
        for (int s = 0; s < new_slots; ++s) {
            pool.push_back(BuildNode{});
            pool[idx].kids.push_back(static_cast<int>(pool.size()) - 1);
        }
    }

    Forest f(n);
    for (int r : roots) f.roots.push_back(pool[r].id);
    for (const auto& node : pool)
        for (int kid : node.kids) f.children[node.id].push_back(pool[kid].id);
    return f;
}

void enumerate_set_partitions(
    int n, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int next) {
        if (next > n) {
            visit(blocks);
            return;
        }
        // index-based: the recursion grows and shrinks the block vector
        for (size_t i = 0, count = blocks.size(); i < count; ++i) {
            blocks[i].push_back(next);
            rec(next + 1);
            blocks[i].pop_back();
        }
        blocks.push_back({next});
        rec(next + 1);
        blocks.pop_back();
    };
    rec(1);
}

bool is_stirling_word(const std::vector<int>& word) {
    const size_t m = word.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t kk = i + 1; kk < m; ++kk)
            if (word[i] == word[kk])
                for (size_t j = i + 1; j < kk; ++j)
                    if (word[j] < word[i]) return false;
    return true;
}

bool StirlingSetPartition::valid(int copies) const {
    if (decorations.size() != blocks.size()) return false;
    for (size_t b = 0; b < blocks.size(); ++b) {
        std::map<int, int> counts;
        for (int v : decorations[b]) ++counts[v];
        if (counts.size() != blocks[b].size()) return false;
        for (int v : blocks[b])
            if (counts[v] != copies) return false;
        if (!is_stirling_word(decorations[b])) return false;
    }
    return true;
}

namespace {

// Statistics weight of a Stirling permutation per the decorated-partition
// interpretation: x_i when the i-th occurrence of a letter ends a descent
// (1 <= i <= r-1), x_r when the last occurrence of a letter begins an
// ascent.
MPoly stirling_word_weight(const std::vector<int>& word, int r) {
    const int m = static_cast<int>(word.size());
    MPoly weight(1);
    std::map<int, int> occ;
    std::vector<int> occ_index(m);
    for (int p = 0; p < m; ++p) occ_index[p] = ++occ[word[p]];
    const int copies = r - 1;
    for (int p = 0; p < m; ++p) {
        int i = occ_index[p];
        if (i <= r - 1 && p > 0 && word[p - 1] > word[p])
            weight *= MPoly(Var::x(i));
        if (i == copies && p + 1 < m && word[p] < word[p + 1])
            weight *= MPoly(Var::x(r));
    }
    return weight;
}

// Enumerate Stirling permutations of the multiset with `copies` copies of
// each letter in `letters` (ascending), by inserting the run of copies of
// each successive letter into every gap.
void enumerate_stirling_perms(const std::vector<int>& letters, int copies,
                              const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> word;
    std::function<void(size_t)> rec = [&](size_t li) {
        if (li == letters.size()) {
            visit(word);
            return;
        }
        int letter = letters[li];
        for (size_t gap = 0; gap <= word.size(); ++gap) {
            word.insert(word.begin() + gap, copies, letter);
            rec(li + 1);
            word.erase(word.begin() + gap, word.begin() + gap + copies);
        }
    };
    rec(0);
}

} // namespace

void enumerate_stirling_set_partitions(
    int n, int copies, const std::function<void(const StirlingSetPartition&)>& visit) {
    enumerate_set_partitions(n, [&](const std::vector<std::vector<int>>& blocks) {
        StirlingSetPartition sp;
        sp.blocks = blocks;
        sp.decorations.resize(blocks.size());
        std::function<void(size_t)> decorate = [&](size_t b) {
            if (b == blocks.size()) {
                visit(sp);
                return;
            }
            enumerate_stirling_perms(blocks[b], copies, [&](const std::vector<int>& w) {
                sp.decorations[b] = w;
                decorate(b + 1);
            });
        };
        decorate(0);
    });
}

MPoly stirling_genpoly(int n, int r, int cap) {
    if (n < 0 || r < 1) throw domain_error("stirling_genpoly: need n >= 0, r >= 1");
    if (n > cap) throw cap_exceeded("stirling_genpoly: n exceeds cap");
    MPoly y(Var::y());
    MPoly total;
    enumerate_set_partitions(n, [&](const std::vector<std::vector<int>>& blocks) {
        MPoly weight(1);
        for (const auto& b : blocks) {
            weight *= y;
            if (r == 1) {
                weight *= MPoly(Var::x(1)).pow(static_cast<int>(b.size()) - 1);
            } else {
                MPoly block_sum;
                enumerate_stirling_perms(b, r - 1, [&](const std::vector<int>& word) {
                    block_sum += stirling_word_weight(word, r);
                });
                weight *= block_sum;
            }
        }
        total += weight;
    });
    return total;
}

} // namespace lahkit
