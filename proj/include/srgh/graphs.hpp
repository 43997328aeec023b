#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srgh/srg.hpp"

namespace srgh {

/**
 * Symmetric two-class relation matrix of a graph on n vertices:
 * 0 on the diagonal, 1 for adjacency, 2 for distinct non-adjacent pairs.
 */
struct RelationMatrix {
    int n = 0;
    std::vector<uint8_t> rel;  // row-major n*n

    uint8_t at(int i, int j) const { return rel[static_cast<size_t>(i) * n + j]; }
    uint8_t& at(int i, int j) { return rel[static_cast<size_t>(i) * n + j]; }
};

/**
 * Paley graph on GF(q), q = p or p^2 for an odd prime p, q = 1 mod 4,
 * q <= 2000: vertices are field elements, edges join pairs whose difference
 * is a nonzero square. GF(p^2) is realized as Z_p[x]/(x^2 - t) with t the
 * smallest quadratic non-residue mod p; element a + b*x has index a*p + b.
 * Throws UnsupportedOrder otherwise.
 */
RelationMatrix paley_graph(long q);

/** Triangular graph T(m), m >= 5: 2-subsets of [m], adjacent when they meet. */
RelationMatrix triangular_graph(int m);

/** Complement graph (relations 1 and 2 exchanged). */
RelationMatrix complement(const RelationMatrix& g);

/**
 * Checks strong regularity entrywise (A1^2 = k1 I + lambda A1 + mu A2) and
 * returns the validated parameters. Throws NotStronglyRegular with a witness
 * pair, or InfeasibleParams if the counted parameters fail validation.
 */
SrgParams verify_srg(const RelationMatrix& g);

/** Text format: first line n, then n lines of n characters from {0,1,2}. */
std::string to_text(const RelationMatrix& g);
RelationMatrix relation_from_text(const std::string& text);

}  // namespace srgh
