#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "abelcover/arith.hpp"
#include "abelcover/linalg.hpp"

namespace abelcover {

/// A finite abelian group presented as Z/n_1 + ... + Z/n_k with n_1 | ... | n_k,
/// all n_j >= 2. The empty list is the trivial group.
struct CharacterGroup {
    std::vector<std::int64_t> moduli;

    std::int64_t order() const;
    friend bool operator==(const CharacterGroup&, const CharacterGroup&) = default;
};

using CharacterGroupPtr = std::shared_ptr<const CharacterGroup>;

/// Coordinates of an element of the group (or of a character, by duality),
/// one residue per invariant factor.
using GroupCoords = std::vector<std::int64_t>;

/// Discriminant group coker(I) of the intersection matrix, with the images
/// of the meridians g_s of the exceptional components.
struct AbelianGroupStructure {
    CharacterGroupPtr group;
    Integer order;
    /// Image of e_s (the meridian g_s) in Z/n_1 + ... + Z/n_k.
    std::vector<GroupCoords> generator_coords;
    /// Order of g_s, from its coordinates.
    std::vector<std::int64_t> orders;
    /// The presentation matrix I.
    IntMatrix relations;
    /// Column j expresses the j-th invariant-factor generator in the basis e_s.
    IntMatrix factor_generators;

    const std::vector<std::int64_t>& invariant_factors() const { return group->moduli; }
};

/// Builds the group from the Smith form of I. `order` is det(-I); throws
/// OrderMismatch when the product of the invariant factors differs.
AbelianGroupStructure group_structure(const SmithDecomposition& snf, const Integer& order);

/// Order of the element with the given coordinates.
std::int64_t coords_order(const CharacterGroup& group, const GroupCoords& coords);

/// Order d_s of g_s, computed as the lcm of the denominators of column s of m
/// and as the order of g_s in the cokernel. Throws OrderDisagreement if the
/// two differ.
std::int64_t element_order(const AbelianGroupStructure& structure, const RatMatrix& m, std::size_t vertex);

/// One-dimensional character of G, stored exactly as rotation numbers:
/// value on g_t is exp(2 pi i * rotation(t)).
class Character {
public:
    Character(CharacterGroupPtr group, std::vector<Rational> rotations, GroupCoords coords);

    static Character trivial(CharacterGroupPtr group, std::size_t num_generators);

    const CharacterGroupPtr& group() const noexcept { return group_; }
    /// Rotation numbers in [0, 1) on g_t, in vertex order.
    const std::vector<Rational>& rotations() const noexcept { return rotations_; }
    /// Residues a_j: the value on the j-th invariant-factor generator is a_j / n_j.
    const GroupCoords& coords() const noexcept { return coords_; }

    bool is_trivial() const;
    std::int64_t order() const;
    Character pow(std::int64_t k) const;

    friend bool operator==(const Character& a, const Character& b);

private:
    CharacterGroupPtr group_;
    std::vector<Rational> rotations_;
    GroupCoords coords_;
};

/// alpha_s(g_t) = exp(-2 pi i m_st). Throws IllDefinedCharacter if the
/// result fails to vanish on Im I.
Character alpha_character(const RatMatrix& m, const AbelianGroupStructure& structure, std::size_t vertex);

/// Throws GroupMismatch.
Character char_mul(const Character& a, const Character& b);

/// Element of the representation ring R(G) = Z[G^], a finite integer
/// combination of characters keyed by canonical coordinates. Zero
/// coefficients are never stored.
class GroupRingElement {
public:
    explicit GroupRingElement(CharacterGroupPtr group) : group_(std::move(group)) {}
    GroupRingElement(const Character& chi, Integer coefficient = 1);
    GroupRingElement(CharacterGroupPtr group, const GroupCoords& coords, Integer coefficient);

    static GroupRingElement one(CharacterGroupPtr group);

    const CharacterGroupPtr& group() const noexcept { return group_; }
    const std::map<GroupCoords, Integer>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(const GroupCoords& coords) const;

    GroupRingElement& operator+=(const GroupRingElement& other);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend GroupRingElement operator*(const Integer& k, GroupRingElement a);
    GroupRingElement operator-() const { return Integer(-1) * *this; }

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);

private:
    void accumulate(const GroupCoords& coords, const Integer& coefficient);

    CharacterGroupPtr group_;
    std::map<GroupCoords, Integer> terms_;
};

inline bool is_zero(const GroupRingElement& x) { return x.is_zero(); }

/// Dimension of a virtual representation: the sum of its coefficients.
Integer reduce_dim(const GroupRingElement& x);

/// "[a_1/n_1,...]" with reduced fractions, "[]" for the trivial group.
std::string coords_string(const CharacterGroup& group, const GroupCoords& coords);

void check_same_group(const CharacterGroupPtr& a, const CharacterGroupPtr& b);

} // namespace abelcover
