#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bt {

/// Small finite group given by its Cayley table. Element 0 is the identity.
class FiniteGroup {
public:
    enum class Kind { Cyclic, Dihedral, Table };

    static FiniteGroup cyclic(int n);
    /// Order 2n; element k + n*j is r^k s^j.
    static FiniteGroup dihedral(int n);
    /// Throws std::invalid_argument when the table is not a group with
    /// identity at index 0.
    static FiniteGroup table(const std::vector<std::string>& names, const std::vector<std::vector<int>>& mul,
                             const std::vector<std::string>& generators);

    Kind kind() const { return kind_; }
    int param() const { return n_; }
    int size() const { return static_cast<int>(names_.size()); }
    int mul(int x, int y) const { return mul_[static_cast<size_t>(x * size() + y)]; }
    int inv(int x) const { return inv_[static_cast<size_t>(x)]; }
    int pow(int x, long k) const;
    int order(int x) const;
    bool is_cyclic() const;

    const std::string& name(int x) const { return names_[static_cast<size_t>(x)]; }
    std::optional<int> find(const std::string& name) const;
    const std::vector<int>& generators() const { return gens_; }
    const std::vector<std::string>& generator_names() const { return gen_names_; }
    /// "Z_n", "D_n" or "G_k" for a table of order k.
    std::string label() const;

private:
    Kind kind_ = Kind::Cyclic;
    int n_ = 1;
    std::vector<std::string> names_;
    std::vector<int> mul_, inv_;
    std::vector<int> gens_;
    std::vector<std::string> gen_names_;
    void finish();
};

struct GroupMap {
    std::vector<int> image;  // image[x] for every source element
    bool homomorphism = false;
    bool injective = false;
    std::string problem;
};

/// Extends generator images to a map on all elements and checks it
/// exhaustively.
GroupMap extend_generators(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<int>& gen_images);

}  // namespace bt
