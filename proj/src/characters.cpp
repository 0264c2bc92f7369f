#include "abelcover/characters.hpp"

#include <algorithm>
#include <numeric>

namespace abelcover {

std::int64_t CharacterGroup::order() const
{
    std::int64_t n = 1;
    for (auto m : moduli)
        n *= m;
    return n;
}

void check_same_group(const CharacterGroupPtr& a, const CharacterGroupPtr& b)
{
    if (a == b)
        return;
    if (!a || !b || !(*a == *b))
        throw Error(ErrorCode::GroupMismatch, "operands live over different groups");
}

AbelianGroupStructure group_structure(const SmithDecomposition& snf, const Integer& order)
{
    AbelianGroupStructure s;
    s.relations = snf.matrix;
    s.order = order;

    // x -> U x identifies coker(M) with coker(D); keep the rows of U that
    // belong to nontrivial diagonal entries.
    const auto diag = snf.diagonal();
    std::vector<std::size_t> rows;
    auto group = std::make_shared<CharacterGroup>();
    Integer product = 1;
    for (std::size_t j = 0; j < diag.size(); ++j) {
        if (diag[j] == 1)
            continue;
        if (diag[j] == 0)
            throw Error(ErrorCode::OrderMismatch, "cokernel is infinite");
        rows.push_back(j);
        group->moduli.push_back(to_int64(diag[j]));
        product *= diag[j];
    }
    if (product != order)
        throw Error(ErrorCode::OrderMismatch,
                    "product of invariant factors " + product.str() + " != determinant " + order.str());
    s.group = group;

    const std::size_t n = snf.matrix.cols();
    for (std::size_t sigma = 0; sigma < n; ++sigma) {
        GroupCoords c;
        for (std::size_t k = 0; k < rows.size(); ++k)
            c.push_back(to_int64(floor_mod(snf.u(rows[k], sigma), Integer(group->moduli[k]))));
        s.orders.push_back(coords_order(*group, c));
        s.generator_coords.push_back(std::move(c));
    }

    // Invariant-factor generators are the columns of U^{-1}.
    const RatMatrix u_inv = m_matrix(snf.u);
    s.factor_generators = IntMatrix(n, rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (std::size_t sigma = 0; sigma < n; ++sigma) {
            const Rational& x = u_inv(sigma, rows[k]);
            if (!is_integral(x))
                throw Error(ErrorCode::DecompositionCheckFailed, "U is not unimodular");
            s.factor_generators(sigma, k) = numerator(x);
        }
    return s;
}

std::int64_t coords_order(const CharacterGroup& group, const GroupCoords& coords)
{
    std::int64_t order = 1;
    for (std::size_t j = 0; j < coords.size(); ++j) {
        const std::int64_t n = group.moduli[j];
        order = std::lcm(order, n / std::gcd(n, floor_mod(coords[j], n)));
    }
    return order;
}

std::int64_t element_order(const AbelianGroupStructure& structure, const RatMatrix& m, std::size_t vertex)
{
    Integer by_denominators = 1;
    for (std::size_t delta = 0; delta < m.rows(); ++delta)
        by_denominators = lcm(by_denominators, denominator(m(delta, vertex)));
    const std::int64_t by_cokernel = coords_order(*structure.group, structure.generator_coords.at(vertex));
    if (by_denominators != by_cokernel)
        throw Error(ErrorCode::OrderDisagreement, "vertex " + std::to_string(vertex) + ": lcm of denominators " +
                                                      by_denominators.str() + " vs cokernel order " +
                                                      std::to_string(by_cokernel));
    return by_cokernel;
}

Character::Character(CharacterGroupPtr group, std::vector<Rational> rotations, GroupCoords coords)
    : group_(std::move(group)), rotations_(std::move(rotations)), coords_(std::move(coords))
{
}

Character Character::trivial(CharacterGroupPtr group, std::size_t num_generators)
{
    GroupCoords zero(group->moduli.size(), 0);
    return Character(std::move(group), std::vector<Rational>(num_generators, Rational(0)), std::move(zero));
}

bool Character::is_trivial() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](auto a) { return a == 0; });
}

std::int64_t Character::order() const
{
    return coords_order(*group_, coords_);
}

Character Character::pow(std::int64_t k) const
{
    std::vector<Rational> r;
    r.reserve(rotations_.size());
    for (const Rational& x : rotations_)
        r.push_back(frac(x * k));
    GroupCoords c;
    c.reserve(coords_.size());
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        const std::int64_t n = group_->moduli[j];
        c.push_back(to_int64(floor_mod(Integer(coords_[j]) * k, Integer(n))));
    }
    return Character(group_, std::move(r), std::move(c));
}

bool operator==(const Character& a, const Character& b)
{
    check_same_group(a.group_, b.group_);
    return a.coords_ == b.coords_ && a.rotations_ == b.rotations_;
}

Character alpha_character(const RatMatrix& m, const AbelianGroupStructure& structure, std::size_t vertex)
{
    const std::size_t n = m.rows();
    std::vector<Rational> rotations(n);
    for (std::size_t delta = 0; delta < n; ++delta)
        rotations[delta] = frac(-m(vertex, delta));

    // Must vanish on every relation column of I.
    for (std::size_t rho = 0; rho < n; ++rho) {
        Rational total = 0;
        for (std::size_t delta = 0; delta < n; ++delta)
            total += Rational(structure.relations(delta, rho)) * rotations[delta];
        if (!is_integral(total))
            throw Error(ErrorCode::IllDefinedCharacter,
                        "alpha_" + std::to_string(vertex) + " is nonzero on relation " + std::to_string(rho));
    }

    const auto& moduli = structure.invariant_factors();
    GroupCoords coords;
    for (std::size_t j = 0; j < moduli.size(); ++j) {
        Rational value = 0;
        for (std::size_t delta = 0; delta < n; ++delta)
            value += Rational(structure.factor_generators(delta, j)) * rotations[delta];
        const Rational scaled = frac(value) * moduli[j];
        if (!is_integral(scaled))
            throw Error(ErrorCode::IllDefinedCharacter, "value on factor generator is not an n_j-th root of unity");
        coords.push_back(to_int64(numerator(scaled)));
    }

    // The coordinates must reproduce the rotation numbers on every g_t.
    for (std::size_t delta = 0; delta < n; ++delta) {
        Rational value = 0;
        for (std::size_t j = 0; j < moduli.size(); ++j)
            value += Rational(coords[j] * structure.generator_coords[delta][j], moduli[j]);
        if (frac(value) != rotations[delta])
            throw Error(ErrorCode::IllDefinedCharacter, "canonical coordinates disagree with rotation numbers");
    }
    return Character(structure.group, std::move(rotations), std::move(coords));
}

Character char_mul(const Character& a, const Character& b)
{
    check_same_group(a.group(), b.group());
    if (a.rotations().size() != b.rotations().size())
        throw Error(ErrorCode::GroupMismatch, "characters on different generator sets");
    std::vector<Rational> r(a.rotations().size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = frac(a.rotations()[i] + b.rotations()[i]);
    GroupCoords c(a.coords().size());
    for (std::size_t j = 0; j < c.size(); ++j)
        c[j] = floor_mod(a.coords()[j] + b.coords()[j], a.group()->moduli[j]);
    return Character(a.group(), std::move(r), std::move(c));
}

GroupRingElement::GroupRingElement(const Character& chi, Integer coefficient) : group_(chi.group())
{
    accumulate(chi.coords(), coefficient);
}

GroupRingElement::GroupRingElement(CharacterGroupPtr group, const GroupCoords& coords, Integer coefficient)
    : group_(std::move(group))
{
    if (coords.size() != group_->moduli.size())
        throw Error(ErrorCode::GroupMismatch, "coordinate count does not match the group");
    GroupCoords reduced(coords.size());
    for (std::size_t j = 0; j < coords.size(); ++j)
        reduced[j] = floor_mod(coords[j], group_->moduli[j]);
    accumulate(reduced, coefficient);
}

GroupRingElement GroupRingElement::one(CharacterGroupPtr group)
{
    GroupCoords zero(group->moduli.size(), 0);
    return GroupRingElement(std::move(group), zero, 1);
}

Integer GroupRingElement::coefficient(const GroupCoords& coords) const
{
    auto it = terms_.find(coords);
    return it == terms_.end() ? Integer(0) : it->second;
}

void GroupRingElement::accumulate(const GroupCoords& coords, const Integer& coefficient)
{
    if (coefficient == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(coords, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0)
            terms_.erase(it);
    }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other)
{
    check_same_group(group_, other.group_);
    for (const auto& [coords, c] : other.terms_)
        accumulate(coords, c);
    return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b)
{
    check_same_group(a.group_, b.group_);
    GroupRingElement out(a.group_);
    const auto& moduli = a.group_->moduli;
    GroupCoords sum(moduli.size());
    for (const auto& [ca, xa] : a.terms_)
        for (const auto& [cb, xb] : b.terms_) {
            for (std::size_t j = 0; j < moduli.size(); ++j) {
                sum[j] = ca[j] + cb[j];
                if (sum[j] >= moduli[j])
                    sum[j] -= moduli[j];
            }
            out.accumulate(sum, xa * xb);
        }
    return out;
}

GroupRingElement operator*(const Integer& k, GroupRingElement a)
{
    if (k == 0) {
        a.terms_.clear();
        return a;
    }
    for (auto& [coords, c] : a.terms_)
        c *= k;
    return a;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b)
{
    check_same_group(a.group_, b.group_);
    return a.terms_ == b.terms_;
}

Integer reduce_dim(const GroupRingElement& x)
{
    Integer total = 0;
    for (const auto& [coords, c] : x.terms())
        total += c;
    return total;
}

std::string coords_string(const CharacterGroup& group, const GroupCoords& coords)
{
    std::string out = "[";
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (j)
            out += ",";
        out += fraction_string(coords[j], group.moduli[j]);
    }
    return out + "]";
}

} // namespace abelcover
