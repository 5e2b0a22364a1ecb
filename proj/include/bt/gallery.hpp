#pragma once

#include <map>
#include <string>

#include "bt/admissibility.hpp"
#include "json.hpp"

namespace bt {

/// Z_n * Z_m over the unramified extension holding both roots of unity.
/// Mirrors ]0, pi^r[ and ]pi^-r, inf[ at distance 2r. Requires r >= 1 and
/// p coprime to n and m.
nlohmann::json free_product_json(long p, int n, int m, int r, int precision = 64);
EmbeddingSpec free_product(long p, int n, int m, int r, int precision = 64);

/// D_n *_{Z_2} Z_{2m} over a degree-e ramified extension of the unramified
/// dyadic field holding n-th and m-th roots of unity; n >= 3 and m >= 1 odd.
nlohmann::json triangle_dyadic_json(int n, int m, int e, int precision = 64);
EmbeddingSpec triangle_dyadic(int n, int m, int e, int precision = 64);

struct FundamentalDomain {
    SubtreeTruncation tree;
    std::map<std::string, std::string> labels;  // vertex key -> group label
    long mirror_distance = 0;                   // d(]0, inf[, ]1, -1[)
};

/// The dyadic D_n picture: [v0, inf[ carrying Z_n, the mirror ]1, -1[ of
/// the reflection carrying Z_2 and the segment joining them, cut at radius R.
FundamentalDomain dihedral_fundamental_domain(int n, int e, long R);

}  // namespace bt
