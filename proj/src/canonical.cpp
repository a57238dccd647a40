#include "turan/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

#include "turan/graph6.hpp"

namespace turan {

namespace {

using Cells = std::vector<std::vector<int>>;

// Upper-triangle bits in column-major order (x01, x02, x12, x03, ...),
// packed big-endian into 64-bit blocks. The first C(p,2) bits depend only
// on the first p labels, which is what makes prefix pruning sound.
struct BitEncoding {
    std::vector<std::uint64_t> blocks;
    int bits = 0;

    void push(bool b) {
        if (bits % 64 == 0) blocks.push_back(0);
        if (b) blocks.back() |= std::uint64_t(1) << (63 - bits % 64);
        ++bits;
    }
};

// <0, 0, >0 comparison over the first `bits` positions of both encodings.
int compare_bits(const BitEncoding& a, const std::vector<std::uint64_t>& b, int bits) {
    const int full = bits / 64;
    for (int w = 0; w < full; ++w) {
        if (a.blocks[w] != b[w]) return a.blocks[w] < b[w] ? -1 : 1;
    }
    const int rest = bits % 64;
    if (rest) {
        const std::uint64_t mask = ~std::uint64_t(0) << (64 - rest);
        const std::uint64_t av = a.blocks[full] & mask;
        const std::uint64_t bv = b[full] & mask;
        if (av != bv) return av < bv ? -1 : 1;
    }
    return 0;
}

class ComponentCanonicalizer {
public:
    ComponentCanonicalizer(const std::vector<std::uint64_t>& adj, int k) : adj_(adj), k_(k) {}

    // Labeling position -> local vertex, minimizing the bit encoding.
    std::vector<int> run() {
        Cells cells(1);
        cells[0].resize(k_);
        for (int v = 0; v < k_; ++v) cells[0][v] = v;
        search(std::move(cells));
        return best_labeling_;
    }

    const std::vector<std::uint64_t>& best_blocks() const { return best_blocks_; }

private:
    // Splits the first cell whose members disagree on the count vector
    // against all current cells, sub-cells ordered by ascending signature;
    // repeats until equitable. Signatures live in a flat per-call buffer
    // (counts fit a byte), ordered exactly like the former vector<int> keys.
    void refine(Cells& cells) const {
        std::uint64_t mask[64];
        std::uint8_t sig[64 * 64];
        int member_of[64];
        for (;;) {
            const std::size_t ncells = cells.size();
            for (std::size_t c = 0; c < ncells; ++c) {
                mask[c] = 0;
                for (int v : cells[c]) mask[c] |= std::uint64_t(1) << v;
            }
            bool split = false;
            for (std::size_t c = 0; c < ncells && !split; ++c) {
                const std::size_t len = cells[c].size();
                if (len < 2) continue;
                for (std::size_t i = 0; i < len; ++i) {
                    member_of[i] = static_cast<int>(i);
                    std::uint8_t* row = sig + i * ncells;
                    for (std::size_t d = 0; d < ncells; ++d)
                        row[d] = static_cast<std::uint8_t>(std::popcount(adj_[cells[c][i]] & mask[d]));
                }
                bool uniform = true;
                for (std::size_t i = 1; i < len && uniform; ++i)
                    uniform = std::memcmp(sig, sig + i * ncells, ncells) == 0;
                if (uniform) continue;
                std::sort(member_of, member_of + len, [&](int a, int b) {
                    const int cmp = std::memcmp(sig + a * ncells, sig + b * ncells, ncells);
                    return cmp != 0 ? cmp < 0 : cells[c][a] < cells[c][b];
                });
                Cells next;
                next.reserve(ncells + 2);
                for (std::size_t d = 0; d < c; ++d) next.push_back(std::move(cells[d]));
                std::vector<int> group{cells[c][member_of[0]]};
                for (std::size_t i = 1; i < len; ++i) {
                    if (std::memcmp(sig + member_of[i - 1] * ncells, sig + member_of[i] * ncells, ncells) != 0) {
                        next.push_back(std::move(group));
                        group.clear();
                    }
                    group.push_back(cells[c][member_of[i]]);
                }
                next.push_back(std::move(group));
                for (std::size_t d = c + 1; d < ncells; ++d) next.push_back(std::move(cells[d]));
                cells = std::move(next);
                split = true;
            }
            if (!split) return;
        }
    }

    BitEncoding encode_prefix(const Cells& cells, int prefix) const {
        BitEncoding enc;
        for (int col = 1; col < prefix; ++col) {
            const std::uint64_t row_mask = adj_[cells[col][0]];
            for (int row = 0; row < col; ++row) enc.push((row_mask >> cells[row][0]) & 1);
        }
        return enc;
    }

    void search(Cells cells) {
        refine(cells);
        int prefix = 0;
        while (prefix < static_cast<int>(cells.size()) && cells[prefix].size() == 1) ++prefix;

        const BitEncoding enc = encode_prefix(cells, prefix);
        int cmp = -1;
        if (have_best_) {
            cmp = compare_bits(enc, best_blocks_, enc.bits);
            if (cmp > 0) return;  // every completion is larger
        }

        if (prefix == static_cast<int>(cells.size())) {
            if (!have_best_ || cmp < 0) {
                have_best_ = true;
                best_blocks_ = enc.blocks;
                best_labeling_.resize(k_);
                for (int i = 0; i < k_; ++i) best_labeling_[i] = cells[i][0];
            }
            return;
        }

        const std::vector<int> branch = cells[prefix];
        for (int v : branch) {
            Cells child;
            child.reserve(cells.size() + 1);
            for (int d = 0; d < prefix; ++d) child.push_back(cells[d]);
            child.push_back({v});
            std::vector<int> rest;
            for (int w : branch)
                if (w != v) rest.push_back(w);
            child.push_back(std::move(rest));
            for (std::size_t d = prefix + 1; d < cells.size(); ++d) child.push_back(cells[d]);
            search(std::move(child));
        }
    }

    const std::vector<std::uint64_t>& adj_;
    int k_;
    bool have_best_ = false;
    std::vector<std::uint64_t> best_blocks_;
    std::vector<int> best_labeling_;
};

struct CanonicalComponent {
    int order;
    std::vector<std::uint64_t> blocks;
    std::vector<int> vertices;  // global ids, canonical position order

    bool operator<(const CanonicalComponent& other) const {
        if (order != other.order) return order < other.order;
        return blocks < other.blocks;
    }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
    if (g.order() > 64) throw std::invalid_argument("canonical labeling capped at 64 vertices");
    std::vector<CanonicalComponent> comps;
    for (const auto& comp : components(g)) {
        const int k = static_cast<int>(comp.size());
        std::vector<std::uint64_t> adj(k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.has_edge(comp[i], comp[j])) {
                    adj[i] |= std::uint64_t(1) << j;
                    adj[j] |= std::uint64_t(1) << i;
                }
        ComponentCanonicalizer canon(adj, k);
        const std::vector<int> labeling = canon.run();
        CanonicalComponent cc;
        cc.order = k;
        cc.blocks = canon.best_blocks();
        cc.vertices.reserve(k);
        for (int pos = 0; pos < k; ++pos) cc.vertices.push_back(comp[labeling[pos]]);
        comps.push_back(std::move(cc));
    }
    std::sort(comps.begin(), comps.end());

    std::vector<int> new_label(g.order());
    int next = 0;
    for (const auto& cc : comps)
        for (int v : cc.vertices) new_label[v] = next++;
    return apply_permutation(g, new_label);
}

CanonicalForm canonical_form(const Graph& g) { return CanonicalForm{to_graph6(canonical_graph(g))}; }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace turan
