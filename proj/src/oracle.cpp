#include "abelcover/oracle.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "abelcover/linalg.hpp"
#include "abelcover/poincare.hpp"

namespace abelcover {

std::vector<std::int64_t> hj_expansion(std::int64_t n, std::int64_t q)
{
    if (n < 2 || q < 1 || q >= n || std::gcd(n, q) != 1)
        throw Error(ErrorCode::InvalidParameters,
                    "need 1 <= q < n and gcd(n, q) = 1, got n=" + std::to_string(n) + " q=" + std::to_string(q));
    std::vector<std::int64_t> bs;
    while (q != 0) {
        const std::int64_t b = (n + q - 1) / q;  // ceil(n / q)
        bs.push_back(b);
        const std::int64_t next = b * q - n;
        n = q;
        q = next;
    }
    return bs;
}

Rational hj_value(const std::vector<std::int64_t>& bs)
{
    if (bs.empty())
        throw Error(ErrorCode::InvalidParameters, "empty continued fraction");
    Rational value = bs.back();
    for (auto it = bs.rbegin() + 1; it != bs.rend(); ++it)
        value = Rational(*it) - 1 / value;
    return value;
}

ResolutionGraph build_chain_graph(const std::vector<std::int64_t>& bs)
{
    ResolutionGraph g;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        if (bs[i] < 2)
            throw Error(ErrorCode::InvalidParameters, "chain entries must be >= 2");
        g.add_vertex("E" + std::to_string(i + 1), -bs[i]);
        if (i > 0)
            g.edges.emplace_back(i - 1, i);
    }
    return g;
}

ResolutionGraph cyclic_quotient_graph(std::int64_t n, std::int64_t q)
{
    ResolutionGraph g = build_chain_graph(hj_expansion(n, q));
    const Integer d = determinant(neg_intersection_matrix(g));
    if (d != n)
        throw Error(ErrorCode::DeterminantMismatch, "chain determinant " + d.str() + " != " + std::to_string(n));
    return g;
}

IntSeries monomial_poincare_s1(const CyclicQuotientSpec& spec, EndpointConvention convention)
{
    ResolutionGraph g = cyclic_quotient_graph(spec.n, spec.q);
    if (spec.component_index >= g.size())
        throw Error(ErrorCode::InvalidParameters, "chain vertex out of range");
    const RatMatrix m = m_matrix(neg_intersection_matrix(g));
    const std::size_t first = 0;
    const std::size_t last = g.size() - 1;
    const std::size_t i = spec.component_index;

    const Rational wx = convention == EndpointConvention::XMeetsFirst ? m(i, first) : m(i, last);
    const Rational wy = convention == EndpointConvention::XMeetsFirst ? m(i, last) : m(i, first);

    IntSeries out(1, 1, spec.degree_bound);
    const Rational limit = spec.degree_bound;
    for (std::int64_t a = 0; Rational(a) * wx <= limit; ++a)
        for (std::int64_t b = 0; Rational(a) * wx + Rational(b) * wy <= limit; ++b) {
            if ((a + spec.q * b) % spec.n != 0)
                continue;
            const Rational value = Rational(a) * wx + Rational(b) * wy;
            if (!is_integral(value))
                throw Error(ErrorCode::NonIntegralValuationOnInvariantMonomial,
                            "x^" + std::to_string(a) + " y^" + std::to_string(b) + " has value " +
                                fraction_string(value));
            out.add_term({to_int64(numerator(value))}, Integer(1));
        }
    return out;
}

OracleVerdict compare_with_formula(const CyclicQuotientSpec& spec)
{
    FiltrationSpec f{cyclic_quotient_graph(spec.n, spec.q), FiltrationMode::Divisorial, spec.degree_bound};
    f.graph.marked = {spec.component_index};
    const IntSeries formula = compute_P(f);
    const IntSeries oracle = monomial_poincare_s1(spec);

    OracleVerdict verdict;
    verdict.equal = true;
    for (std::int64_t k = 0; k <= spec.degree_bound; ++k) {
        const Integer* x = oracle.find({k});
        const Integer* y = formula.find({k});
        const Integer a = x ? *x : Integer(0);
        const Integer b = y ? *y : Integer(0);
        if (a != b) {
            verdict.equal = false;
            verdict.first_degree = k;
            verdict.oracle_coefficient = a;
            verdict.formula_coefficient = b;
            break;
        }
    }
    return verdict;
}

ResolutionGraph ade_family(AdeFamily family, int n)
{
    auto chain = [](int k) {
        ResolutionGraph g;
        for (int i = 0; i < k; ++i) {
            g.add_vertex("E" + std::to_string(i + 1), -2);
            if (i > 0)
                g.edges.emplace_back(i - 1, i);
        }
        return g;
    };
    switch (family) {
    case AdeFamily::A:
        if (n >= 1)
            return chain(n);
        break;
    case AdeFamily::D:
        if (n >= 4) {
            // Chain E1..E_{n-1}, with E_n attached to E_{n-2}.
            ResolutionGraph g = chain(n - 1);
            g.add_vertex("E" + std::to_string(n), -2);
            g.edges.emplace_back(n - 3, n - 1);
            return g;
        }
        break;
    case AdeFamily::E:
        if (n >= 6 && n <= 8) {
            // Chain E1..E_{n-1}, with E_n attached to E3.
            ResolutionGraph g = chain(n - 1);
            g.add_vertex("E" + std::to_string(n), -2);
            g.edges.emplace_back(2, n - 1);
            return g;
        }
        break;
    }
    throw Error(ErrorCode::InvalidFamilyIndex, "no such graph with index " + std::to_string(n));
}

ResolutionGraph ade_family(std::string_view name)
{
    if (name.size() < 2)
        throw Error(ErrorCode::InvalidFamilyIndex, "family name '" + std::string(name) + "'");
    int n = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
    if (ec != std::errc() || ptr != name.data() + name.size())
        throw Error(ErrorCode::InvalidFamilyIndex, "family name '" + std::string(name) + "'");
    switch (std::toupper(static_cast<unsigned char>(name[0]))) {
    case 'A': return ade_family(AdeFamily::A, n);
    case 'D': return ade_family(AdeFamily::D, n);
    case 'E': return ade_family(AdeFamily::E, n);
    }
    throw Error(ErrorCode::InvalidFamilyIndex, "family name '" + std::string(name) + "'");
}

} // namespace abelcover
