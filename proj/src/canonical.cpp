#include "z4wb/canonical.hpp"

#include <algorithm>
#include <map>

namespace z4wb {

namespace {

// Backtracking search for the column order minimizing the sequence of RREF
// column contents.  The first j columns of the RREF depend only on the first
// j chosen columns, which makes the objective prefix-decidable.
//
// Branching is restricted by an isomorphism-invariant refinement: at each
// node the unchosen columns are partitioned by their incidence pattern with
// the minimum-weight codewords relative to the chosen prefix, and only one
// cell (smallest, then least signature) is branched on.  Ties inside the
// cell are cut by content minimality and by orbits of the automorphisms
// discovered so far.
struct Searcher {
    const BinaryCode& code;
    int n, k;
    uint64_t node_cap;
    uint64_t nodes = 0;

    std::vector<int> col_class;  // column -> initial class (ordered partition)
    std::vector<BitVec> words;   // minimum-weight codewords, for refinement

    std::vector<int> cur_order;  // chosen original columns
    std::vector<uint32_t> cur_contents;

    bool have_best = false;
    std::vector<int> best_order;
    std::vector<uint32_t> best_contents;

    std::vector<Permutation> auts;

    explicit Searcher(const BinaryCode& c, uint64_t cap) : code(c), node_cap(cap) {
        n = c.length();
        k = c.dim();
        init_partition();
    }

    // Initial ordered partition of columns by incidence counts with the two
    // lowest populated nonzero weights; codewords of the lowest weight are
    // kept for prefix refinement during the search.  Minimum-weight words
    // of the dual code share the automorphism group and are often far more
    // numerous, so they join the refinement set when the dual is small
    // enough to enumerate.
    void init_partition() {
        std::vector<std::pair<uint64_t, uint64_t>> sig(n, {0, 0});
        if (k > 0 && k <= 24) {
            WeightDistribution wd = code.weight_distribution();
            int w1 = -1, w2 = -1;
            for (int w = 1; w <= n; ++w)
                if (wd.counts[w]) {
                    if (w1 < 0)
                        w1 = w;
                    else if (w2 < 0) {
                        w2 = w;
                        break;
                    }
                }
            BitVec cur;
            uint64_t total = uint64_t{1} << k;
            for (uint64_t s = 1; s < total; ++s) {
                cur ^= code.basis()[std::countr_zero(s)];
                int w = cur.weight();
                if (w == w1) {
                    words.push_back(cur);
                    for (int i = 0; i < n; ++i) sig[i].first += cur.get(i);
                } else if (w == w2) {
                    for (int i = 0; i < n; ++i) sig[i].second += cur.get(i);
                }
            }
        }
        if (k > 0 && n - k > 0 && n - k <= 20) {
            BinaryCode dual = code.dual();
            int dmin = dual.min_weight();
            BitVec cur;
            uint64_t total = uint64_t{1} << dual.dim();
            for (uint64_t s = 1; s < total; ++s) {
                cur ^= dual.basis()[std::countr_zero(s)];
                if (cur.weight() == dmin) {
                    words.push_back(cur);
                    for (int i = 0; i < n; ++i)
                        if (cur.get(i)) sig[i].second += uint64_t{1} << 32;
                }
            }
        }
        std::map<std::pair<uint64_t, uint64_t>, int> classes;
        for (int i = 0; i < n; ++i) classes.emplace(sig[i], 0);
        int idx = 0;
        for (auto& kv : classes) kv.second = idx++;
        col_class.resize(n);
        for (int i = 0; i < n; ++i) col_class[i] = classes[sig[i]];
    }

    // -1 prefix smaller than best, 0 equal, +1 greater
    int compare_prefix() const {
        if (!have_best) return -1;
        for (size_t i = 0; i < cur_contents.size(); ++i) {
            if (cur_contents[i] < best_contents[i]) return -1;
            if (cur_contents[i] > best_contents[i]) return 1;
        }
        return 0;
    }

    void record_leaf() {
        int cmp = compare_prefix();
        if (cmp > 0) return;
        if (cmp < 0 || !have_best) {
            have_best = true;
            best_order = cur_order;
            best_contents = cur_contents;
            return;
        }
        // equal objective: the two orders compose to an automorphism
        std::vector<int> img(n);
        for (int j = 0; j < n; ++j) img[best_order[j]] = cur_order[j];
        Permutation p(img);
        if (p.is_identity()) return;
        if (code.permuted(img) == code) auts.push_back(std::move(p));
        else
            throw std::logic_error("canonical search produced a non-automorphism");
    }

    // Orbit of column c under the stored automorphisms fixing the chosen
    // prefix pointwise.
    std::vector<char> orbit_of(int c) const {
        std::vector<const Permutation*> gens;
        for (const Permutation& g : auts) {
            bool fixes = true;
            for (int col : cur_order)
                if (g(col) != col) {
                    fixes = false;
                    break;
                }
            if (fixes) gens.push_back(&g);
        }
        std::vector<char> in_orbit(n, 0);
        std::vector<int> queue{c};
        in_orbit[c] = 1;
        while (!queue.empty()) {
            int p = queue.back();
            queue.pop_back();
            for (const Permutation* g : gens) {
                int q = (*g)(p);
                if (!in_orbit[q]) {
                    in_orbit[q] = 1;
                    queue.push_back(q);
                }
            }
        }
        return in_orbit;
    }

    // Branch cell: unchosen columns sharing the least (cell size, initial
    // class, word-incidence signature).  A column's signature is the sorted
    // multiset, over minimum-weight words through it, of the set of prefix
    // positions each word meets.
    std::vector<int> branch_cell(const std::vector<char>& chosen) const {
        std::vector<std::vector<uint64_t>> sigs(n);
        int depth = static_cast<int>(cur_order.size());
        for (const BitVec& w : words) {
            uint64_t key = 0;
            for (int j = 0; j < depth && j < 58; ++j)
                if (w.get(cur_order[j])) key |= uint64_t{1} << j;
            for (int c = 0; c < n; ++c)
                if (!chosen[c] && w.get(c)) sigs[c].push_back(key);
        }
        std::map<std::pair<int, std::vector<uint64_t>>, std::vector<int>> cells;
        for (int c = 0; c < n; ++c) {
            if (chosen[c]) continue;
            std::sort(sigs[c].begin(), sigs[c].end());
            cells[{col_class[c], std::move(sigs[c])}].push_back(c);
        }
        const std::vector<int>* best_cell = nullptr;
        const std::pair<int, std::vector<uint64_t>>* best_key = nullptr;
        for (const auto& [key, cols] : cells) {
            if (!best_cell || cols.size() < best_cell->size() ||
                (cols.size() == best_cell->size() && key < *best_key)) {
                best_cell = &cols;
                best_key = &key;
            }
        }
        return *best_cell;
    }

    void search(std::vector<BitVec> rows, std::vector<BitVec> kernel,
                std::vector<char> chosen) {
        if (++nodes > node_cap)
            throw CanonicalBudgetExceeded("canonical form search budget exceeded");
        if (compare_prefix() > 0) return;
        int depth = static_cast<int>(cur_order.size());
        if (depth == n) {
            record_leaf();
            return;
        }
        int t = static_cast<int>(rows.size());
        std::vector<std::pair<uint32_t, int>> cands;
        for (int c : branch_cell(chosen)) {
            bool new_pivot = false;
            for (const BitVec& z : kernel)
                if (z.get(c)) {
                    new_pivot = true;
                    break;
                }
            uint32_t content;
            if (new_pivot) {
                content = uint32_t{1} << (k - 1 - t);
            } else {
                content = 0;
                for (int i = 0; i < t; ++i)
                    if (rows[i].get(c)) content |= uint32_t{1} << (k - 1 - i);
            }
            cands.emplace_back(content, c);
        }
        uint32_t vmin = UINT32_MAX;
        for (auto& [v, c] : cands) vmin = std::min(vmin, v);

        std::vector<char> tried_orbit(n, 0);
        std::sort(cands.begin(), cands.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        for (auto& [v, c] : cands) {
            if (v != vmin) continue;
            if (tried_orbit[c]) continue;

            std::vector<BitVec> nrows = rows;
            std::vector<BitVec> nkernel = kernel;
            bool new_pivot = false;
            for (const BitVec& z : nkernel)
                if (z.get(c)) {
                    new_pivot = true;
                    break;
                }
            if (new_pivot) {
                size_t zi = 0;
                while (!nkernel[zi].get(c)) ++zi;
                BitVec z = nkernel[zi];
                nkernel.erase(nkernel.begin() + zi);
                for (BitVec& w : nkernel)
                    if (w.get(c)) w ^= z;
                for (BitVec& w : nrows)
                    if (w.get(c)) w ^= z;
                nrows.push_back(z);
            }
            cur_order.push_back(c);
            cur_contents.push_back(v);
            chosen[c] = 1;
            search(std::move(nrows), std::move(nkernel), chosen);
            chosen[c] = 0;
            cur_contents.pop_back();
            cur_order.pop_back();

            // union this candidate's orbit into the tried set (the aut set
            // may have just grown, widening the orbits)
            std::vector<char> orb = orbit_of(c);
            for (int i = 0; i < n; ++i)
                if (orb[i]) tried_orbit[i] = 1;
        }
    }

    CanonicalCertificate run() {
        search({}, code.basis(), std::vector<char>(n, 0));
        CanonicalCertificate cert;
        std::vector<int> img(n);
        for (int j = 0; j < n; ++j) img[best_order[j]] = j;
        cert.witness = Permutation(img);
        cert.canonical = code.permuted(img);
        cert.aut_generators = std::move(auts);
        cert.aut_order = group_order(cert.aut_generators, n);
        cert.nodes = nodes;
        return cert;
    }
};

}  // namespace

CanonicalCertificate canonical_form(const BinaryCode& c, uint64_t node_cap) {
    if (c.length() < 1) throw std::invalid_argument("canonical_form: empty code length");
    Searcher s(c, node_cap);
    return s.run();
}

std::optional<Permutation> are_equivalent(const BinaryCode& a, const BinaryCode& b,
                                          uint64_t node_cap) {
    if (a.length() != b.length())
        throw std::invalid_argument("are_equivalent: length mismatch");
    CanonicalCertificate ca = canonical_form(a, node_cap);
    CanonicalCertificate cb = canonical_form(b, node_cap);
    if (!(ca.canonical == cb.canonical)) return std::nullopt;
    Permutation p = ca.witness.then(cb.witness.inverse());
    if (!(a.permuted(p.images()) == b))
        throw std::logic_error("are_equivalent: witness composition failed");
    return p;
}

}  // namespace z4wb
