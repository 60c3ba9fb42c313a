#include "z4wb/perm.hpp"

#include <algorithm>
#include <string>

namespace z4wb {

namespace {

// One level of a stabilizer chain: base point, orbit transversal.
struct ChainLevel {
    int base = -1;
    std::vector<Permutation> gens;
    std::vector<int> orbit;                 // points in the orbit of base
    std::vector<Permutation> transversal;   // indexed like orbit; maps base -> point
    std::vector<int> orbit_pos;             // point -> index in orbit, or -1
};

struct Chain {
    int n;
    std::vector<ChainLevel> levels;

    explicit Chain(int n_) : n(n_) {}

    void rebuild_orbit(size_t li) {
        ChainLevel& L = levels[li];
        L.orbit.assign(1, L.base);
        L.transversal.assign(1, Permutation::identity(n));
        L.orbit_pos.assign(n, -1);
        L.orbit_pos[L.base] = 0;
        for (size_t qi = 0; qi < L.orbit.size(); ++qi) {
            for (const Permutation& g : L.gens) {
                int q = g(L.orbit[qi]);
                if (L.orbit_pos[q] < 0) {
                    L.orbit_pos[q] = static_cast<int>(L.orbit.size());
                    L.orbit.push_back(q);
                    L.transversal.push_back(L.transversal[qi].then(g));
                }
            }
        }
    }

    // Sift g through the chain; returns residue (identity iff member).
    Permutation sift(Permutation g, size_t from = 0) const {
        for (size_t li = from; li < levels.size(); ++li) {
            const ChainLevel& L = levels[li];
            int img = g(L.base);
            if (L.orbit_pos[img] < 0) return g;
            g = g.then(L.transversal[L.orbit_pos[img]].inverse());
        }
        return g;
    }

    void add_generator(const Permutation& g, size_t li) {
        if (li >= levels.size()) {
            // new base point: any point moved by g
            int b = -1;
            for (int i = 0; i < n; ++i)
                if (g(i) != i) {
                    b = i;
                    break;
                }
            if (b < 0) return;  // identity
            levels.push_back({});
            levels.back().base = b;
        }
        levels[li].gens.push_back(g);
        rebuild_orbit(li);
        // close with Schreier generators; recursion may grow `levels`,
        // so index instead of holding references.
        for (size_t qi = 0; qi < levels[li].orbit.size(); ++qi) {
            for (size_t hi = 0; hi < levels[li].gens.size(); ++hi) {
                Permutation uh = levels[li].transversal[qi].then(levels[li].gens[hi]);
                int img = levels[li].gens[hi](levels[li].orbit[qi]);
                Permutation schreier =
                    uh.then(levels[li].transversal[levels[li].orbit_pos[img]].inverse());
                Permutation res = sift(schreier, li + 1);
                if (!res.is_identity()) add_generator(res, li + 1);
            }
        }
    }
};

}  // namespace

unsigned __int128 group_order(const std::vector<Permutation>& gens, int n) {
    Chain chain(n);
    for (int pass = 0; pass < 2; ++pass)
        for (const Permutation& g : gens) {
            Permutation res = chain.sift(g);
            if (!res.is_identity()) chain.add_generator(res, 0);
        }
    unsigned __int128 order = 1;
    for (const auto& L : chain.levels) order *= static_cast<unsigned>(L.orbit.size());
    return order;
}

std::string u128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace z4wb
