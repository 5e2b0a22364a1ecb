#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bt/pgl2.hpp"
#include "bt/tree.hpp"
#include "bt/tree_of_groups.hpp"
#include "json.hpp"

namespace bt {

class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/*
 * A tree of groups together with a proposed embedding into the
 * Bruhat-Tits tree: images of the core vertices, one end of P^1(K) per ray,
 * and matrices for the generators of the vertex groups.
 *
 * JSON layout (on top of the tree-of-groups keys):
 *   "field":      {"p", "f", "e", "precision"}
 *   "vertex_map": {vertex id: "(n; b)"}        core vertices
 *   "ray_ends":   {ray id: point literal}
 *   "generators": {vertex id: {generator: "a,b;c,d"}}
 *   "bounds":     {"L", "R"}                   optional
 */
struct EmbeddingSpec {
    FieldPtr field;
    TreeOfGroups tog;
    std::vector<BtVertex> iota;            // every materialized vertex
    std::vector<ProjPoint> ray_ends;       // per ray
    std::vector<std::vector<Pgl2>> reps;   // per vertex, per group element
    int L = 6;
    long R = -1;                           // -1: default radius
    std::vector<std::string> notes;
    nlohmann::json source;

    static EmbeddingSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const { return source; }

    /// diameter(iota(T)) + 2 * max fixed radius + 4.
    long default_radius() const;
    long radius() const { return R >= 0 ? R : default_radius(); }

    /// Vertex k >= 1 along ray r (k <= path length gives materialized ones).
    BtVertex ray_vertex(int r, long k) const;
    /// iota(T) restricted to vertices within `R` of the materialized part.
    SubtreeTruncation image(long R) const;
    struct ImageVertex {
        std::string label;  // T-vertex id, or "<ray>+k" past the tail
        int tvertex = 0;    // T-vertex whose group fixes it
        bool open_end = false;
    };
    /// Per vertex of image(R), in its order.
    std::vector<ImageVertex> image_info(const SubtreeTruncation& img, long R) const;
    /// All nonidentity vertex-group elements, without repetition.
    std::vector<Pgl2> nonidentity_elements() const;
};

struct TildeTree {
    SubtreeTruncation tree;
    /// Generated group at each vertex of `tree` (capped; see `capped`).
    std::vector<std::vector<Pgl2>> groups;
    std::vector<bool> capped;
};

/// The tree spanned by the fixed points of all nonidentity vertex-group
/// elements, truncated to the vertices within R of iota(T).
TildeTree build_tilde_tree(const EmbeddingSpec& spec, long R);

/// Subgroup generated by `gens`; stops after `cap` elements.
std::vector<Pgl2> generate_group(const std::vector<Pgl2>& gens, const FieldPtr& F, size_t cap, bool* capped = nullptr);

enum class Verdict { Verified, Refuted, Inconclusive };
const char* verdict_name(Verdict v);

struct ConditionResult {
    Verdict verdict = Verdict::Verified;
    std::string detail;
    nlohmann::json witness;
};

struct CheckReport {
    ConditionResult conditions[5];
    Verdict overall = Verdict::Verified;
    int L = 0;
    long R = 0;
    int precision = 0;
    nlohmann::json to_json() const;
};

CheckReport check_admissible(const EmbeddingSpec& spec, int L, long R);

}  // namespace bt
