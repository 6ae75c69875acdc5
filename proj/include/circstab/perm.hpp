#pragma once

#include <vector>

namespace circstab {

// Permutation of 0..n-1 as an image array.
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img(std::move(images)) {}

    static Permutation identity(int n) {
        Permutation p;
        p.img.resize(n);
        for (int i = 0; i < n; ++i) p.img[i] = i;
        return p;
    }

    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int x) const { return img[x]; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img[i] != i) return false;
        return true;
    }

    // (*this) after o: x -> this(o(x)).
    Permutation after(const Permutation& o) const {
        Permutation r;
        r.img.resize(degree());
        for (int i = 0; i < degree(); ++i) r.img[i] = img[o.img[i]];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.img.resize(degree());
        for (int i = 0; i < degree(); ++i) r.img[img[i]] = i;
        return r;
    }

    bool operator==(const Permutation& o) const { return img == o.img; }
    bool operator!=(const Permutation& o) const { return img != o.img; }
};

}  // namespace circstab
