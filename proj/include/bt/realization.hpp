#pragma once

#include <string>
#include <vector>

#include "bt/admissibility.hpp"
#include "bt/orbit_kernel.hpp"
#include "json.hpp"

namespace bt {

enum class Kernel { Serial, Parallel };

/*
 * Union of the translates gamma * iota(T) over the words gamma of length
 * at most L, where iota(T) keeps R ray steps past each tail. Every vertex
 * remembers which (word, base vertex) pairs produced it.
 */
struct OrbitTree {
    const EmbeddingSpec* spec = nullptr;  // must outlive the orbit tree
    int L = 0;
    long R = 0;
    Enumeration words;
    std::vector<Pgl2> matrix;              // per word, in stratum order
    std::vector<int> length;
    std::vector<std::string> name;
    SubtreeTruncation base;
    std::vector<std::string> base_label;
    SubtreeTruncation tree;
    std::vector<std::vector<size_t>> image;  // image[w][i]: index in `tree` of word w applied to base i
    std::vector<std::vector<std::pair<size_t, size_t>>> origins;  // per tree vertex

    size_t word_count() const { return matrix.size(); }
};

OrbitTree build_orbit_tree(const EmbeddingSpec& spec, int L, long R, Kernel kernel = Kernel::Parallel);

struct DisjointnessAudit {
    size_t checked = 0;
    std::vector<size_t> violations;  // words of length >= 2 meeting the base
    std::vector<size_t> missing;     // letters whose translate misses the base
    bool ok() const { return violations.empty() && missing.empty(); }
};
DisjointnessAudit disjointness_audit(const OrbitTree& ot);

/// Enumerated elements fixing v, without repetition.
std::vector<Pgl2> stabilizer_of_vertex(const OrbitTree& ot, const BtVertex& v, int max_length = -1);

struct QuotientReport {
    bool classes_consistent = true;  // no two base vertices in one orbit
    std::vector<std::string> conflicts;
    size_t vertices = 0, edges = 0;
    long betti = 0;        // first Betti number of the quotient graph
    long union_betti = 0;  // of the orbit tree itself
    bool connected = true;
    bool decorations_match = true;  // stabilizers of base images equal the vertex groups
    std::vector<std::string> decoration_problems;
};
QuotientReport quotient_graph(const OrbitTree& ot);

struct BranchReport {
    std::vector<std::string> ends;
    std::vector<int> stabilizer_orders;  // computed
    std::vector<int> expected_orders;    // from the tail groups
    std::vector<bool> cyclic;
    long genus = 0;
    bool ok() const;
};
BranchReport branch_report(const OrbitTree& ot);

struct DiscretenessAudit {
    size_t stabilizer_short = 0, stabilizer_full = 0;  // at lengths L-2 and L
    std::vector<std::string> near_identity;            // non-torsion words close to 1
    int V = 4;
    bool stable() const { return stabilizer_short == stabilizer_full; }
    bool discrete() const { return stable() && near_identity.empty(); }
};
DiscretenessAudit discreteness_audit(const OrbitTree& ot, int V = 4);

struct LimitTreeReport {
    size_t hyperbolic = 0;
    size_t limit_vertices = 0;
    size_t contained = 0;
    std::vector<std::string> missing;
    bool ok() const { return missing.empty(); }
};
/// Tree spanned by the axis ends of hyperbolic words of length <= hyper_length,
/// cut at `radius` around its centre, against the orbit tree.
LimitTreeReport limit_tree_approx(const OrbitTree& ot, int hyper_length, long radius);

nlohmann::json to_json(const DisjointnessAudit& a, const OrbitTree& ot);
nlohmann::json to_json(const QuotientReport& q);
nlohmann::json to_json(const BranchReport& b);
nlohmann::json to_json(const DiscretenessAudit& d);
nlohmann::json to_json(const LimitTreeReport& l);

/// Orbit tree in DOT; base vertices are labelled by their T-vertex.
std::string orbit_dot(const OrbitTree& ot);
/// Quotient tree of groups in DOT; rays end in arrow-tipped end nodes.
std::string quotient_dot(const OrbitTree& ot);

}  // namespace bt
