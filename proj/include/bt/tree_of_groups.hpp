#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bt/groups.hpp"
#include "json.hpp"

namespace bt {

struct TogVertex {
    std::string id;
    FiniteGroup group;
    int ray = -1;       // owning ray for materialized ray vertices
    bool tail = false;  // representative of the constant tail of its ray
};

struct TogEdge {
    int a = 0, b = 0;
    FiniteGroup group;
    GroupMap into_a, into_b;
};

struct TogRay {
    std::string id;
    int attach = 0;
    std::vector<int> path;  // materialized vertices after `attach`; back() is the tail
    int tail() const { return path.back(); }
};

/*
 * Finite core tree plus rays. Each ray is stored as a finite path of
 * vertices ending in one tail vertex; the tail group repeats forever beyond
 * it with identity edge maps.
 */
class TreeOfGroups {
public:
    std::vector<TogVertex> vertices;
    std::vector<TogEdge> edges;
    std::vector<TogRay> rays;
    /// Problems met while reading (bad injections, unknown ids, ...).
    std::vector<std::string> issues;

    static TreeOfGroups from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    int index_of(const std::string& id) const;
    int ray_index(const std::string& id) const;
    /// Incident edges per vertex.
    std::vector<std::vector<int>> incidence() const;
    /// Vertex path from u to v (inclusive), empty when disconnected.
    std::vector<int> path(int u, int v) const;
    int other_end(int edge, int v) const { return edges[static_cast<size_t>(edge)].a == v ? edges[static_cast<size_t>(edge)].b : edges[static_cast<size_t>(edge)].a; }
    const GroupMap& map_into(int edge, int v) const;
    int edge_between(int u, int v) const;
    bool is_core(int v) const { return vertices[static_cast<size_t>(v)].ray < 0; }
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> problems;
};

ValidationReport validate(const TreeOfGroups& tog);

struct Letter {
    int vertex;
    int element;
};

/// Normal form relative to the base vertex 0: reps along a closed walk in
/// the tree, followed by an element of the base vertex group.
struct NormalForm {
    struct Step {
        int vertex;  // source vertex of the step
        int edge;
        int rep;  // chosen coset representative in the source vertex group
    };
    std::vector<Step> steps;
    int r = 0;
    std::string key() const;
};

struct AmalgamWord {
    std::vector<int> letters;  // indices into Enumeration::letters
    NormalForm nf;
    int length() const { return static_cast<int>(letters.size()); }
};

class Amalgam {
public:
    explicit Amalgam(const TreeOfGroups& tog);

    const TreeOfGroups& tree() const { return *tog_; }
    NormalForm identity() const { return {}; }
    NormalForm multiply(const NormalForm& x, const Letter& a) const;
    NormalForm of_word(const std::vector<Letter>& word) const;
    /// Vertex group element i of v as a normal form.
    NormalForm of_letter(const Letter& a) const { return multiply(identity(), a); }

private:
    const TreeOfGroups* tog_;
    // per (edge, side): coset representative and edge-group part of each element
    struct Side {
        std::vector<int> rep;
        std::vector<int> edge_elem;
    };
    std::vector<Side> side_a_, side_b_;
    std::vector<int> parent_edge_;  // edge toward vertex 0
    std::vector<int> parent_;

    struct State;
    void feed(State& s, int edge, int next_vertex, int next_elem) const;
};

struct Enumeration {
    std::vector<Letter> letters;
    std::vector<std::vector<AmalgamWord>> strata;  // strata[m] = words of length m
    bool truncated = false;
    std::vector<size_t> counts() const;
    std::string letter_str(const TreeOfGroups& tog, int letter) const;
    std::string word_str(const TreeOfGroups& tog, const AmalgamWord& w) const;
};

/// Elements of the amalgam up to length L, by breadth-first search over the
/// nonidentity vertex-group elements. `cap` bounds the total word count.
Enumeration amalgam_enumerate(const TreeOfGroups& tog, int L, size_t cap = 500000);

struct EndStabilizer {
    std::string end;
    FiniteGroup group;
    int order;
};

/// Throws std::invalid_argument when the tail group is not cyclic or trivial.
EndStabilizer end_stabilizer(const TreeOfGroups& tog, const std::string& ray_id);

struct ContractionVerdict {
    bool contraction = false;
    std::vector<std::string> reasons;
};

/// Throws std::invalid_argument when `embedding` is not a tree map that
/// respects the groups.
ContractionVerdict contraction_check(const TreeOfGroups& inner, const TreeOfGroups& outer,
                                     const std::map<std::string, std::string>& embedding);

}  // namespace bt
