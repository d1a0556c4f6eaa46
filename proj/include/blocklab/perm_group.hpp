#pragma once

// Finite permutation groups by explicit enumeration.
//
// Elements are stored sorted lexicographically by image array, so element
// index 0 is always the identity and index order is lexicographic order.
// A full multiplication table over element indices is built at construction;
// everything downstream (classes, subgroups, modules) works with indices.

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <vector>

#include "permutation.hpp"

namespace blocklab {

struct ConjugacyClass {
    int representative = 0;        // element index of the lex-minimal member
    std::vector<int> members;      // sorted element indices
    long long size = 0;
    long long element_order = 1;

    bool is_p_regular(long long p) const { return element_order % p != 0; }
};

class PermGroup {
public:
    // Enumerate <gens> by breadth-first closure; throws cap_error past cap.
    static PermGroup from_generators(int degree, std::vector<Permutation> gens, long long cap_elements = 2000) {
        PermGroup G;
        G.degree_ = degree;
        G.generators_ = clean_generators(degree, std::move(gens));
        Permutation id(degree);
        std::unordered_map<Permutation, int, PermHash> seen;
        std::vector<Permutation> elems{id};
        seen.emplace(id, 0);
        std::queue<int> bfs;
        bfs.push(0);
        while (!bfs.empty()) {
            int x = bfs.front();
            bfs.pop();
            for (const auto& g : G.generators_) {
                Permutation y = elems[x] * g;
                if (seen.emplace(y, static_cast<int>(elems.size())).second) {
                    elems.push_back(y);
                    if (static_cast<long long>(elems.size()) > cap_elements)
                        throw cap_error("group exceeds element cap of " + std::to_string(cap_elements));
                    bfs.push(static_cast<int>(elems.size()) - 1);
                }
            }
        }
        G.finish(std::move(elems));
        return G;
    }

    // Build from a known closed element set (subgroup-as-group, quotients).
    // If gens is empty a small generating set is derived greedily.
    static PermGroup from_elements(int degree, std::vector<Permutation> elems, std::vector<Permutation> gens = {}) {
        PermGroup G;
        G.degree_ = degree;
        G.generators_ = clean_generators(degree, std::move(gens));
        G.finish(std::move(elems));
        return G;
    }

    int degree() const { return degree_; }
    long long order() const { return static_cast<long long>(elements_.size()); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const Permutation& element(int i) const { return elements_[i]; }

    int index_of(const Permutation& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) throw internal_error("element not in group");
        return it->second;
    }
    bool contains(const Permutation& p) const { return index_.find(p) != index_.end(); }

    int mult(int i, int j) const { return static_cast<int>(mult_[static_cast<std::size_t>(i) * order() + j]); }
    int inv(int i) const { return inv_[i]; }
    int conj(int x, int g) const { return mult(mult(inv(g), x), g); }  // g^{-1} x g
    long long element_order(int i) const { return order_of_[i]; }

    int power(int x, long long t) const {
        long long o = order_of_[x];
        t %= o;
        if (t < 0) t += o;
        int r = 0;
        for (long long k = 0; k < t; ++k) r = mult(r, x);
        return r;
    }

    // breadth-first word tree: element i == element(parent(i)) * generator(via_gen(i))
    int word_parent(int i) const { return word_parent_[i]; }
    int word_gen(int i) const { return word_gen_[i]; }
    int generator_index(int k) const { return gen_index_[k]; }

    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    int class_of(int elem) const { return class_of_[elem]; }
    int inverse_class(int c) const { return inverse_class_[c]; }
    // class of rep^t for the canonical representative of class c
    int power_class(int c, long long t) const {
        long long o = classes_[c].element_order;
        t %= o;
        if (t < 0) t += o;
        return power_class_[c][static_cast<std::size_t>(t)];
    }

    long long exponent() const { return exponent_; }
    long long centralizer_order(int c) const { return order() / classes_[c].size; }

    // a_{ijk} = #{(x, y) in C_i x C_j : x y = rep(C_k)}
    long long class_mult_coefficient(int i, int j, int k) const {
        long long n = 0;
        int zk = classes_[k].representative;
        for (int x : classes_[i].members)
            if (class_of_[mult(inv(x), zk)] == j) ++n;
        return n;
    }

    // row j, column k of the i-th class structure matrix (all a_{ijk} for fixed i)
    std::vector<std::vector<long long>> class_matrix(int i) const {
        int r = num_classes();
        std::vector<std::vector<long long>> A(r, std::vector<long long>(r, 0));
        for (int k = 0; k < r; ++k) {
            int zk = classes_[k].representative;
            for (int x : classes_[i].members) A[class_of_[mult(inv(x), zk)]][k]++;
        }
        return A;
    }

private:
    int degree_ = 1;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::unordered_map<Permutation, int, PermHash> index_;
    std::vector<std::uint32_t> mult_;
    std::vector<int> inv_;
    std::vector<long long> order_of_;
    std::vector<int> word_parent_, word_gen_, gen_index_;
    std::vector<ConjugacyClass> classes_;
    std::vector<int> class_of_, inverse_class_;
    std::vector<std::vector<int>> power_class_;
    long long exponent_ = 1;

    static std::vector<Permutation> clean_generators(int degree, std::vector<Permutation> gens) {
        std::vector<Permutation> out;
        for (auto& g : gens) {
            if (g.degree() != degree) throw input_error("generator degree mismatch");
            if (g.is_identity()) continue;
            if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
        }
        return out;
    }

    void finish(std::vector<Permutation> elems) {
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        elements_ = std::move(elems);
        if (elements_.empty() || !elements_[0].is_identity())
            throw internal_error("element set lacks identity");
        long long n = order();
        index_.reserve(elements_.size() * 2);
        for (int i = 0; i < n; ++i) index_.emplace(elements_[i], i);

        order_of_.resize(n);
        for (int i = 0; i < n; ++i) order_of_[i] = elements_[i].order();

        gen_index_.clear();
        for (const auto& g : generators_) {
            auto it = index_.find(g);
            if (it == index_.end()) throw internal_error("generator not in element set");
            gen_index_.push_back(it->second);
        }

        if (!generators_.empty() || n == 1)
            build_mult_table_bfs();
        else
            build_mult_table_direct();
        inv_.resize(n);
        for (int i = 0; i < n; ++i) inv_[i] = index_.at(elements_[i].inverse());
        if (generators_.empty() && n > 1) derive_generators();
        build_classes();
    }

    void build_mult_table_direct() {
        const long long n = order();
        mult_.assign(static_cast<std::size_t>(n) * n, 0);
        for (long long i = 0; i < n; ++i)
            for (long long j = 0; j < n; ++j) {
                auto it = index_.find(elements_[i] * elements_[j]);
                if (it == index_.end()) throw internal_error("element set not closed under products");
                mult_[static_cast<std::size_t>(i) * n + j] = it->second;
            }
        word_parent_.assign(n, -1);
        word_gen_.assign(n, -1);
    }

    void build_mult_table_bfs() {
        const long long n = order();
        const int ngen = static_cast<int>(generators_.size());
        mult_.assign(static_cast<std::size_t>(n) * n, 0);

        // word tree over sorted indices
        word_parent_.assign(n, -1);
        word_gen_.assign(n, -1);
        std::vector<int> bfs_order;
        bfs_order.reserve(n);
        std::vector<char> visited(n, 0);
        std::queue<int> q;
        q.push(0);
        visited[0] = 1;

        // generator columns computed directly from permutations
        std::vector<std::vector<int>> gen_col(ngen, std::vector<int>(n));
        for (int k = 0; k < ngen; ++k)
            for (int i = 0; i < n; ++i) gen_col[k][i] = index_.at(elements_[i] * generators_[k]);

        while (!q.empty()) {
            int x = q.front();
            q.pop();
            bfs_order.push_back(x);
            for (int k = 0; k < ngen; ++k) {
                int y = gen_col[k][x];
                if (!visited[y]) {
                    visited[y] = 1;
                    word_parent_[y] = x;
                    word_gen_[y] = k;
                    q.push(y);
                }
            }
        }
        if (static_cast<long long>(bfs_order.size()) != n)
            throw internal_error("element set not generated by listed generators");

        // column for identity, then fill columns in word order: col(y) with
        // y = parent * gen comes from col(parent) composed with the gen column
        for (int i = 0; i < n; ++i) mult_[static_cast<std::size_t>(i) * n + 0] = i;
        for (int y : bfs_order) {
            if (y == 0) continue;
            int par = word_parent_[y], k = word_gen_[y];
            const std::vector<int>& gc = gen_col[k];
            for (long long i = 0; i < n; ++i) {
                int ip = static_cast<int>(mult_[static_cast<std::size_t>(i) * n + par]);
                mult_[static_cast<std::size_t>(i) * n + y] = gc[ip];
            }
        }
    }

    void build_classes() {
        const long long n = order();
        class_of_.assign(n, -1);
        classes_.clear();
        std::vector<int> conj_gens = gen_index_;
        if (conj_gens.empty()) conj_gens.push_back(0);
        for (int i = 0; i < n; ++i) {
            if (class_of_[i] != -1) continue;
            // conjugation orbit of i
            std::vector<int> orbit{i};
            class_of_[i] = -2;
            std::queue<int> q;
            q.push(i);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int g : conj_gens) {
                    int y = conj(x, g);
                    if (class_of_[y] == -1) {
                        class_of_[y] = -2;
                        orbit.push_back(y);
                        q.push(y);
                    }
                }
            }
            std::sort(orbit.begin(), orbit.end());
            ConjugacyClass c;
            c.representative = orbit[0];
            c.size = static_cast<long long>(orbit.size());
            c.element_order = order_of_[orbit[0]];
            c.members = std::move(orbit);
            classes_.push_back(std::move(c));
        }
        // canonical order: element order, then class size, then lex-minimal representative
        std::sort(classes_.begin(), classes_.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
            if (a.element_order != b.element_order) return a.element_order < b.element_order;
            if (a.size != b.size) return a.size < b.size;
            return a.representative < b.representative;
        });
        for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
            for (int m : classes_[c].members) class_of_[m] = c;

        exponent_ = 1;
        for (const auto& c : classes_) exponent_ = std::lcm(exponent_, c.element_order);

        inverse_class_.resize(classes_.size());
        power_class_.resize(classes_.size());
        for (int c = 0; c < static_cast<int>(classes_.size()); ++c) {
            inverse_class_[c] = class_of_[inv_[classes_[c].representative]];
            long long o = classes_[c].element_order;
            power_class_[c].resize(static_cast<std::size_t>(o));
            int acc = 0;
            for (long long t = 0; t < o; ++t) {
                power_class_[c][static_cast<std::size_t>(t)] = class_of_[acc];
                acc = mult(acc, classes_[c].representative);
            }
        }
    }

    void derive_generators() {
        // greedy: repeatedly add the smallest element outside the current closure
        std::vector<char> closed(order(), 0);
        closed[0] = 1;
        long long closed_count = 1;
        std::vector<Permutation> gens;
        std::vector<int> gen_idx;
        while (closed_count < order()) {
            int pick = -1;
            for (int i = 1; i < order(); ++i)
                if (!closed[i]) {
                    pick = i;
                    break;
                }
            gens.push_back(elements_[pick]);
            gen_idx.push_back(pick);
            // re-close
            std::queue<int> q;
            q.push(pick);
            closed[pick] = 1;
            ++closed_count;
            for (int i = 0; i < order(); ++i)
                if (closed[i]) q.push(i);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int g : gen_idx) {
                    int y = mult(x, g);
                    if (!closed[y]) {
                        closed[y] = 1;
                        ++closed_count;
                        q.push(y);
                    }
                }
            }
        }
        generators_ = std::move(gens);
        gen_index_ = std::move(gen_idx);
        // refresh the word tree for the new generating set
        rebuild_word_tree();
    }

    void rebuild_word_tree() {
        const long long n = order();
        word_parent_.assign(n, -1);
        word_gen_.assign(n, -1);
        std::vector<char> visited(n, 0);
        std::queue<int> q;
        q.push(0);
        visited[0] = 1;
        long long cnt = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            ++cnt;
            for (int k = 0; k < static_cast<int>(gen_index_.size()); ++k) {
                int y = mult(x, gen_index_[k]);
                if (!visited[y]) {
                    visited[y] = 1;
                    word_parent_[y] = x;
                    word_gen_[y] = k;
                    q.push(y);
                }
            }
        }
        if (cnt != n) throw internal_error("derived generators do not generate");
    }
};

}  // namespace blocklab
