#include "bt/groups.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

namespace bt {

namespace {

std::string power_name(const std::string& base, int k)
{
    if (k == 0) return "1";
    if (k == 1) return base;
    return base + "^" + std::to_string(k);
}

}  // namespace

void FiniteGroup::finish()
{
    const int n = size();
    inv_.assign(static_cast<size_t>(n), -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (mul(x, y) == 0) inv_[static_cast<size_t>(x)] = y;
}

FiniteGroup FiniteGroup::cyclic(int n)
{
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    FiniteGroup G;
    G.kind_ = Kind::Cyclic;
    G.n_ = n;
    for (int k = 0; k < n; ++k) G.names_.push_back(power_name("g", k));
    G.mul_.resize(static_cast<size_t>(n * n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) G.mul_[static_cast<size_t>(a * n + b)] = (a + b) % n;
    if (n > 1) {
        G.gens_ = {1};
        G.gen_names_ = {"g"};
    }
    G.finish();
    return G;
}

FiniteGroup FiniteGroup::dihedral(int n)
{
    if (n < 1) throw std::invalid_argument("dihedral group parameter must be positive");
    FiniteGroup G;
    G.kind_ = Kind::Dihedral;
    G.n_ = n;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < n; ++k) {
            if (j == 0)
                G.names_.push_back(power_name("r", k));
            else
                G.names_.push_back(k == 0 ? "s" : power_name("r", k) + " s");
        }
    const int N = 2 * n;
    G.mul_.resize(static_cast<size_t>(N * N));
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            const int a = x % n, i = x / n, b = y % n, j = y / n;
            const int k = ((a + (i ? -b : b)) % n + n) % n;
            G.mul_[static_cast<size_t>(x * N + y)] = k + n * ((i + j) % 2);
        }
    if (n > 1) {
        G.gens_ = {1, n};
        G.gen_names_ = {"r", "s"};
    } else {
        G.gens_ = {n};
        G.gen_names_ = {"s"};
    }
    G.finish();
    return G;
}

FiniteGroup FiniteGroup::table(const std::vector<std::string>& names, const std::vector<std::vector<int>>& mul,
                               const std::vector<std::string>& generators)
{
    const int n = static_cast<int>(names.size());
    if (n < 1 || n > 256) throw std::invalid_argument("table group must have between 1 and 256 elements");
    if (static_cast<int>(mul.size()) != n) throw std::invalid_argument("multiplication table has the wrong number of rows");
    FiniteGroup G;
    G.kind_ = Kind::Table;
    G.n_ = n;
    G.names_ = names;
    G.mul_.resize(static_cast<size_t>(n * n));
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(mul[static_cast<size_t>(x)].size()) != n)
            throw std::invalid_argument("multiplication table row " + std::to_string(x) + " has the wrong length");
        for (int y = 0; y < n; ++y) {
            const int z = mul[static_cast<size_t>(x)][static_cast<size_t>(y)];
            if (z < 0 || z >= n) throw std::invalid_argument("multiplication table entry out of range");
            G.mul_[static_cast<size_t>(x * n + y)] = z;
        }
    }
    for (int x = 0; x < n; ++x)
        if (G.mul(0, x) != x || G.mul(x, 0) != x) throw std::invalid_argument("element 0 is not the identity");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (G.mul(G.mul(x, y), z) != G.mul(x, G.mul(y, z)))
                    throw std::invalid_argument("multiplication table is not associative");
    G.finish();
    for (int x = 0; x < n; ++x)
        if (G.inv(x) < 0 || G.mul(x, G.inv(x)) != 0) throw std::invalid_argument("element without inverse: " + names[static_cast<size_t>(x)]);
    const auto& gnames = generators.empty() ? names : generators;
    for (const auto& g : gnames) {
        auto idx = G.find(g);
        if (!idx) throw std::invalid_argument("unknown generator " + g);
        if (*idx == 0) continue;
        G.gens_.push_back(*idx);
        G.gen_names_.push_back(g);
    }
    return G;
}

int FiniteGroup::pow(int x, long k) const
{
    if (k < 0) return pow(inv(x), -k);
    int r = 0;
    for (long i = 0; i < k; ++i) r = mul(r, x);
    return r;
}

int FiniteGroup::order(int x) const
{
    int k = 1;
    for (int y = x; y != 0; y = mul(y, x)) ++k;
    return k;
}

bool FiniteGroup::is_cyclic() const
{
    for (int x = 0; x < size(); ++x)
        if (order(x) == size()) return true;
    return false;
}

std::optional<int> FiniteGroup::find(const std::string& name) const
{
    if (name == "1" || name == "e" || name == "id") return 0;
    for (int x = 0; x < size(); ++x)
        if (names_[static_cast<size_t>(x)] == name) return x;
    for (size_t i = 0; i < gen_names_.size(); ++i)
        if (gen_names_[i] == name) return gens_[i];
    return std::nullopt;
}

std::string FiniteGroup::label() const
{
    switch (kind_) {
        case Kind::Cyclic: return "Z_" + std::to_string(n_);
        case Kind::Dihedral: return "D_" + std::to_string(n_);
        case Kind::Table: return "G_" + std::to_string(size());
    }
    return "?";
}

GroupMap extend_generators(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<int>& gen_images)
{
    GroupMap out;
    const auto& gens = src.generators();
    if (gen_images.size() != gens.size()) {
        out.problem = "expected " + std::to_string(gens.size()) + " generator images";
        return out;
    }
    out.image.assign(static_cast<size_t>(src.size()), -1);
    out.image[0] = 0;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (size_t i = 0; i < gens.size(); ++i) {
            const int y = src.mul(x, gens[i]);
            const int fy = dst.mul(out.image[static_cast<size_t>(x)], gen_images[i]);
            if (out.image[static_cast<size_t>(y)] < 0) {
                out.image[static_cast<size_t>(y)] = fy;
                queue.push_back(y);
            } else if (out.image[static_cast<size_t>(y)] != fy) {
                out.problem = "generator images do not define a homomorphism " + src.label() + " -> " + dst.label();
                return out;
            }
        }
    }
    for (int x = 0; x < src.size(); ++x)
        if (out.image[static_cast<size_t>(x)] < 0) {
            out.problem = "generators of " + src.label() + " do not generate it";
            return out;
        }
    for (int x = 0; x < src.size(); ++x)
        for (int y = 0; y < src.size(); ++y)
            if (out.image[static_cast<size_t>(src.mul(x, y))] !=
                dst.mul(out.image[static_cast<size_t>(x)], out.image[static_cast<size_t>(y)])) {
                out.problem = "generator images do not define a homomorphism " + src.label() + " -> " + dst.label();
                return out;
            }
    out.homomorphism = true;
    std::vector<bool> hit(static_cast<size_t>(dst.size()), false);
    out.injective = true;
    for (int x = 0; x < src.size(); ++x) {
        const int fx = out.image[static_cast<size_t>(x)];
        if (hit[static_cast<size_t>(fx)]) out.injective = false;
        hit[static_cast<size_t>(fx)] = true;
    }
    if (!out.injective) out.problem = "map " + src.label() + " -> " + dst.label() + " is not injective";
    return out;
}

}  // namespace bt
