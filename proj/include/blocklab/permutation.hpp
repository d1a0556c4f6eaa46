#pragma once

// Permutations on {0, ..., n-1} with cycle-notation I/O.
// Products compose left to right: (a * b) means "apply a, then b".

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "common.hpp"

namespace blocklab {

struct Permutation {
    std::vector<int> img;  // img[x] = image of point x

    Permutation() = default;
    explicit Permutation(int degree) : img(degree) {
        for (int i = 0; i < degree; ++i) img[i] = i;
    }
    explicit Permutation(std::vector<int> images) : img(std::move(images)) {}

    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int x) const { return img[x]; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img[i] != i) return false;
        return true;
    }

    // apply *this first, then other
    Permutation operator*(const Permutation& other) const {
        Permutation r(degree());
        for (int i = 0; i < degree(); ++i) r.img[i] = other.img[img[i]];
        return r;
    }

    Permutation inverse() const {
        Permutation r(degree());
        for (int i = 0; i < degree(); ++i) r.img[img[i]] = i;
        return r;
    }

    // h^{-1} * this * h
    Permutation conjugated_by(const Permutation& h) const {
        Permutation r(degree());
        for (int i = 0; i < degree(); ++i) r.img[h.img[i]] = h.img[img[i]];
        return r;
    }

    long long order() const {
        std::vector<char> seen(img.size(), 0);
        long long ord = 1;
        for (int i = 0; i < degree(); ++i) {
            if (seen[i]) continue;
            long long len = 0;
            for (int j = i; !seen[j]; j = img[j]) {
                seen[j] = 1;
                ++len;
            }
            ord = std::lcm(ord, len);
        }
        return ord;
    }

    bool operator==(const Permutation& o) const { return img == o.img; }
    bool operator<(const Permutation& o) const { return img < o.img; }

    // e.g. "(0 1 2)(3 4)"; identity prints as "()"
    std::string to_cycles() const {
        std::vector<char> seen(img.size(), 0);
        std::ostringstream os;
        bool any = false;
        for (int i = 0; i < degree(); ++i) {
            if (seen[i] || img[i] == i) {
                seen[i] = 1;
                continue;
            }
            any = true;
            os << '(';
            bool first = true;
            for (int j = i; !seen[j]; j = img[j]) {
                seen[j] = 1;
                if (!first) os << ' ';
                os << j;
                first = false;
            }
            os << ')';
        }
        if (!any) return "()";
        return os.str();
    }
};

// Parse one permutation in cycle notation, e.g. "(0 1)(2 3)" or "()".
inline Permutation parse_cycles(const std::string& text, int degree) {
    Permutation p(degree);
    std::vector<char> used(degree, 0);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size()) return p;  // empty = identity
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') throw input_error("cycle notation: expected '(' in \"" + text + "\"");
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (i == text.size()) throw input_error("cycle notation: unclosed '(' in \"" + text + "\"");
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw input_error("cycle notation: expected point or ')' in \"" + text + "\"");
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            if (v >= degree) throw input_error("cycle notation: point " + std::to_string(v) + " exceeds degree");
            cyc.push_back(v);
        }
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (used[from]) throw input_error("cycle notation: point repeated in \"" + text + "\"");
            used[from] = 1;
            p.img[from] = to;
        }
    }
    std::vector<char> hit(degree, 0);
    for (int x : p.img) {
        if (hit[x]) throw input_error("cycle notation: not a permutation in \"" + text + "\"");
        hit[x] = 1;
    }
    return p;
}

struct PermHash {
    std::size_t operator()(const Permutation& p) const {
        return static_cast<std::size_t>(fnv1a64(p.img.data(), p.img.size() * sizeof(int)));
    }
};

}  // namespace blocklab
