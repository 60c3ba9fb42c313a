#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace z4wb {

// Permutation of coordinates {0..n-1}; images[i] is where coordinate i goes.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("Permutation: not a bijection");
            seen[v] = true;
        }
    }
    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const {
        std::vector<int> v(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<int>(i);
        return Permutation(std::move(v));
    }

    // (a.then(b))(i) = b(a(i))
    Permutation then(const Permutation& b) const {
        std::vector<int> v(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) v[i] = b(img_[i]);
        return Permutation(std::move(v));
    }

    bool is_identity() const {
        for (size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i)) return false;
        return true;
    }

    bool operator==(const Permutation& o) const = default;

private:
    std::vector<int> img_;
};

// Order of the permutation group generated by gens, by Schreier-Sims.
// Fits in unsigned __int128 (n <= 34 or so is plenty here).
unsigned __int128 group_order(const std::vector<Permutation>& gens, int n);

std::string u128_to_string(unsigned __int128 v);

}  // namespace z4wb
