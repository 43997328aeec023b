#include "srgh/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <unordered_set>

namespace srgh {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long i = 2; i * i <= p; ++i)
        if (p % i == 0) return false;
    return true;
}

RelationMatrix from_difference_set(int n, const std::unordered_set<long>& squares,
                                   long (*sub)(long, long, long), long modctx) {
    RelationMatrix g;
    g.n = n;
    g.rel.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) g.at(i, j) = squares.count(sub(i, j, modctx)) ? 1 : 2;
    return g;
}

long sub_mod_p(long x, long y, long p) { return ((x - y) % p + p) % p; }

long sub_gfp2(long x, long y, long p) {
    long a1 = x / p, b1 = x % p, a2 = y / p, b2 = y % p;
    return (((a1 - a2) % p + p) % p) * p + ((b1 - b2) % p + p) % p;
}

}  // namespace

RelationMatrix paley_graph(long q) {
    if (q < 5 || q > 2000) throw UnsupportedOrder("paley order out of range: " + std::to_string(q));
    if (q % 4 != 1) throw UnsupportedOrder("paley order must be 1 mod 4: " + std::to_string(q));
    if (is_prime(q)) {
        std::unordered_set<long> squares;
        for (long x = 1; x < q; ++x) squares.insert(x * x % q);
        return from_difference_set(static_cast<int>(q), squares, sub_mod_p, q);
    }
    long p = std::lround(std::sqrt(static_cast<double>(q)));
    if (p * p != q || !is_prime(p))
        throw UnsupportedOrder("paley order must be an odd prime or its square: " + std::to_string(q));
    // GF(p^2) = Z_p[x]/(x^2 - t), t the smallest quadratic non-residue mod p
    std::unordered_set<long> sq_p;
    for (long x = 1; x < p; ++x) sq_p.insert(x * x % p);
    long t = 2;
    while (sq_p.count(t)) ++t;
    auto mul = [p, t](long x, long y) {
        long a1 = x / p, b1 = x % p, a2 = y / p, b2 = y % p;
        return ((a1 * a2 + b1 * b2 % p * t) % p) * p + (a1 * b2 + a2 * b1) % p;
    };
    std::unordered_set<long> squares;
    for (long x = 1; x < q; ++x) squares.insert(mul(x, x));
    return from_difference_set(static_cast<int>(q), squares, sub_gfp2, p);
}

RelationMatrix triangular_graph(int m) {
    if (m < 5) throw UnsupportedOrder("triangular graph needs m >= 5");
    std::vector<std::pair<int, int>> verts;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) verts.emplace_back(i, j);
    RelationMatrix g;
    g.n = static_cast<int>(verts.size());
    g.rel.assign(static_cast<size_t>(g.n) * g.n, 0);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            if (a == b) continue;
            auto [i1, j1] = verts[a];
            auto [i2, j2] = verts[b];
            int common = (i1 == i2) + (i1 == j2) + (j1 == i2) + (j1 == j2);
            g.at(a, b) = common == 1 ? 1 : 2;
        }
    return g;
}

RelationMatrix complement(const RelationMatrix& g) {
    RelationMatrix c = g;
    for (auto& e : c.rel)
        if (e) e = e == 1 ? 2 : 1;
    return c;
}

SrgParams verify_srg(const RelationMatrix& g) {
    const int n = g.n;
    if (n < 3) throw NotStronglyRegular("too_small", 0, 0);
    for (int i = 0; i < n; ++i) {
        if (g.at(i, i) != 0) throw NotStronglyRegular("bad_diagonal", i, i);
        for (int j = 0; j < n; ++j) {
            if (i != j && g.at(i, j) != 1 && g.at(i, j) != 2)
                throw NotStronglyRegular("bad_entry", i, j);
            if (g.at(i, j) != g.at(j, i)) throw NotStronglyRegular("not_symmetric", i, j);
        }
    }
    // adjacency bitrows make the common-neighbour counts O(n^3 / 64)
    const int words = (n + 63) / 64;
    std::vector<uint64_t> bits(static_cast<size_t>(n) * words, 0);
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.at(i, j) == 1) {
                bits[static_cast<size_t>(i) * words + j / 64] |= uint64_t(1) << (j % 64);
                ++deg[i];
            }
    for (int i = 1; i < n; ++i)
        if (deg[i] != deg[0]) throw NotStronglyRegular("irregular", i, 0);

    long lambda = -1, mu = -1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long common = 0;
            const uint64_t* ri = &bits[static_cast<size_t>(i) * words];
            const uint64_t* rj = &bits[static_cast<size_t>(j) * words];
            for (int w = 0; w < words; ++w) common += std::popcount(ri[w] & rj[w]);
            long& expect = g.at(i, j) == 1 ? lambda : mu;
            if (expect == -1) expect = common;
            else if (expect != common)
                throw NotStronglyRegular(g.at(i, j) == 1 ? "lambda_mismatch" : "mu_mismatch", i, j);
        }
    if (lambda == -1 || mu == -1) throw NotStronglyRegular("single_class", 0, 0);
    return params_from_nklm(n, deg[0], lambda, mu);
}

std::string to_text(const RelationMatrix& g) {
    std::string out = std::to_string(g.n) + "\n";
    for (int i = 0; i < g.n; ++i) {
        for (int j = 0; j < g.n; ++j) out += static_cast<char>('0' + g.at(i, j));
        out += "\n";
    }
    return out;
}

RelationMatrix relation_from_text(const std::string& text) {
    std::istringstream in(text);
    int n = 0;
    if (!(in >> n) || n < 1 || n > 100000) throw Error("bad relation matrix header");
    RelationMatrix g;
    g.n = n;
    g.rel.assign(static_cast<size_t>(n) * n, 0);
    std::string line;
    std::getline(in, line);
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line)) throw Error("truncated relation matrix");
        if (static_cast<int>(line.size()) < n) throw Error("short row in relation matrix");
        for (int j = 0; j < n; ++j) {
            char c = line[j];
            if (c < '0' || c > '2') throw Error("bad relation matrix entry");
            g.at(i, j) = static_cast<uint8_t>(c - '0');
        }
    }
    return g;
}

}  // namespace srgh
