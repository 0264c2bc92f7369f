#include "abelcover/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace abelcover {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

json parse_json(std::string_view text)
{
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // byte is one past the offending character
        auto [line, column] = line_and_column(text, e.byte ? e.byte - 1 : 0);
        throw ParseError("malformed JSON", line, column);
    }
}

const json& field(const json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError("missing field '" + std::string(key) + "' in " + where);
    return obj.at(key);
}

std::string as_string(const json& j, const std::string& where)
{
    if (!j.is_string())
        throw ParseError(where + " must be a string");
    return j.get<std::string>();
}

std::int64_t as_int(const json& j, const std::string& where)
{
    if (!j.is_number_integer())
        throw ParseError(where + " must be an integer");
    return j.get<std::int64_t>();
}

const json& as_array(const json& j, const std::string& where)
{
    if (!j.is_array())
        throw ParseError(where + " must be an array");
    return j;
}

json integer_to_json(const Integer& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

Integer integer_from_json(const json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        const bool digits = !s.empty() && s.find_first_not_of("-0123456789") == std::string::npos;
        if (digits)
            return Integer(s);
    }
    throw ParseError(where + " must be an integer");
}

std::size_t vertex_index(const ResolutionGraph& g, const json& j, const std::string& where)
{
    const auto id = as_string(j, where);
    if (auto i = g.find(id))
        return *i;
    throw ParseError(where + " refers to unknown vertex '" + id + "'");
}

} // namespace

ResolutionGraph parse_graph_json(std::string_view text)
{
    const json doc = parse_json(text);
    if (!doc.is_object())
        throw ParseError("graph document must be a JSON object");

    ResolutionGraph g;
    const auto& vertices = as_array(field(doc, "vertices", "document"), "vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const std::string where = "vertices[" + std::to_string(i) + "]";
        const auto id = as_string(field(vertices[i], "id", where), where + ".id");
        if (g.find(id))
            throw ParseError("duplicate vertex id '" + id + "'");
        g.add_vertex(id, as_int(field(vertices[i], "self_intersection", where), where + ".self_intersection"));
    }

    if (doc.contains("edges"))
        for (const auto& e : as_array(doc["edges"], "edges")) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("each edge must be a pair of vertex ids");
            g.edges.emplace_back(vertex_index(g, e[0], "edge"), vertex_index(g, e[1], "edge"));
        }

    if (doc.contains("marked"))
        for (const auto& m : as_array(doc["marked"], "marked"))
            g.marked.push_back(vertex_index(g, m, "marked"));

    if (doc.contains("branches")) {
        const auto& branches = as_array(doc["branches"], "branches");
        for (std::size_t i = 0; i < branches.size(); ++i) {
            const std::string where = "branches[" + std::to_string(i) + "]";
            g.branches.push_back({as_string(field(branches[i], "id", where), where + ".id"),
                                  vertex_index(g, field(branches[i], "attached_to", where), where + ".attached_to")});
        }
    }
    return g;
}

ResolutionGraph load_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_json(buffer.str());
}

std::string graph_to_json(const ResolutionGraph& graph)
{
    json doc;
    doc["vertices"] = json::array();
    for (const auto& v : graph.vertices)
        doc["vertices"].push_back({{"id", v.id}, {"self_intersection", v.self_intersection}});
    doc["edges"] = json::array();
    for (auto [a, b] : graph.edges)
        doc["edges"].push_back({graph.vertices[a].id, graph.vertices[b].id});
    doc["marked"] = json::array();
    for (auto m : graph.marked)
        doc["marked"].push_back(graph.vertices[m].id);
    doc["branches"] = json::array();
    for (const auto& b : graph.branches)
        doc["branches"].push_back({{"id", b.id}, {"attached_to", graph.vertices[b.attached_to].id}});
    return doc.dump(2);
}

std::string monomial_string(const Exponent& e, std::int64_t scale)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += ' ';
        out += "t" + std::to_string(i + 1);
        const Rational power(e[i], scale);
        if (power == 1)
            continue;
        if (is_integral(power))
            out += "^" + fraction_string(power);
        else
            out += "^{" + fraction_string(power) + "}";
    }
    return out;
}

std::string series_to_text(const IntSeries& s)
{
    std::string out;
    for (const auto& [e, c] : s.terms()) {
        const std::string mono = monomial_string(e, s.scale());
        const bool negative = c < 0;
        const Integer magnitude = negative ? Integer(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mono.empty())
            out += magnitude.str();
        else if (magnitude == 1)
            out += mono;
        else
            out += magnitude.str() + " " + mono;
    }
    return out.empty() ? "0" : out;
}

std::string group_ring_to_text(const GroupRingElement& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    for (const auto& [coords, c] : x.terms()) {
        const std::string chi = coords_string(*x.group(), coords);
        if (!out.empty())
            out += c < 0 ? " - " : " + ";
        else if (c < 0)
            out += "-";
        const Integer magnitude = c < 0 ? Integer(-c) : c;
        out += magnitude == 1 ? chi : magnitude.str() + "·" + chi;
    }
    return x.terms().size() > 1 ? "(" + out + ")" : out;
}

std::string series_to_text(const EquivSeries& s)
{
    std::string out;
    for (const auto& [e, c] : s.terms()) {
        const std::string mono = monomial_string(e, s.scale());
        std::string coeff = mono.empty() && c == GroupRingElement::one(c.group()) ? "1" : group_ring_to_text(c);
        if (!out.empty()) {
            const bool negative = coeff.front() == '-';
            out += negative ? " - " : " + ";
            if (negative)
                coeff.erase(0, 1);
        }
        out += mono.empty() ? coeff : coeff + " " + mono;
    }
    return out.empty() ? "0" : out;
}

namespace {

template <typename Coeff, typename CoeffToJson>
std::string series_json(const TruncatedSeries<Coeff>& s, const char* kind, const CharacterGroup* group,
                        CoeffToJson coeff_to_json)
{
    json doc;
    doc["coefficients"] = kind;
    doc["degree_bound"] = s.bound();
    doc["scale"] = s.scale();
    doc["invariant_factors"] = group ? json(group->moduli) : json::array();
    doc["variables"] = json::array();
    for (std::size_t i = 0; i < s.num_vars(); ++i)
        doc["variables"].push_back("t" + std::to_string(i + 1));
    doc["terms"] = json::array();
    for (const auto& [e, c] : s.terms())
        doc["terms"].push_back({{"exponents", e}, {"scale", s.scale()}, {"coefficient", coeff_to_json(c)}});
    return doc.dump(2);
}

} // namespace

std::string series_to_json(const IntSeries& s)
{
    return series_json(s, "integer", nullptr, integer_to_json);
}

std::string series_to_json(const EquivSeries& s)
{
    CharacterGroupPtr group;
    for (const auto& [e, c] : s.terms()) {
        group = c.group();
        break;
    }
    return series_json(s, "group_ring", group.get(), [](const GroupRingElement& x) {
        json pairs = json::array();
        for (const auto& [coords, c] : x.terms())
            pairs.push_back(json::array({coords, integer_to_json(c)}));
        return pairs;
    });
}

std::string series_to_json(const AnySeries& s)
{
    return std::visit([](const auto& x) { return series_to_json(x); }, s);
}

AnySeries parse_series_json(std::string_view text)
{
    const json doc = parse_json(text);
    const auto kind = as_string(field(doc, "coefficients", "series"), "coefficients");
    const auto scale = as_int(field(doc, "scale", "series"), "scale");
    const auto bound = as_int(field(doc, "degree_bound", "series"), "degree_bound");
    const auto num_vars = as_array(field(doc, "variables", "series"), "variables").size();
    const auto& terms = as_array(field(doc, "terms", "series"), "terms");
    if (scale < 1 || bound < 0)
        throw ParseError("series needs scale >= 1 and degree_bound >= 0");

    auto read_exponent = [&](const json& term) {
        if (as_int(field(term, "scale", "term"), "term.scale") != scale)
            throw ParseError("term scale differs from series scale");
        Exponent e;
        for (const auto& x : as_array(field(term, "exponents", "term"), "term.exponents"))
            e.push_back(as_int(x, "exponent"));
        if (e.size() != num_vars)
            throw ParseError("exponent length differs from the number of variables");
        return e;
    };

    if (kind == "integer") {
        IntSeries s(num_vars, scale, bound);
        for (const auto& term : terms)
            s.add_term(read_exponent(term), integer_from_json(field(term, "coefficient", "term"), "coefficient"));
        return s;
    }
    if (kind == "group_ring") {
        auto group = std::make_shared<CharacterGroup>();
        for (const auto& n : as_array(field(doc, "invariant_factors", "series"), "invariant_factors"))
            group->moduli.push_back(as_int(n, "invariant factor"));
        EquivSeries s(num_vars, scale, bound);
        for (const auto& term : terms) {
            GroupRingElement c(group);
            for (const auto& pair : as_array(field(term, "coefficient", "term"), "coefficient")) {
                if (!pair.is_array() || pair.size() != 2)
                    throw ParseError("group-ring coefficient entries must be [coords, coefficient]");
                GroupCoords coords;
                for (const auto& a : as_array(pair[0], "coords"))
                    coords.push_back(as_int(a, "coordinate"));
                if (coords.size() != group->moduli.size())
                    throw ParseError("character coordinates do not match invariant_factors");
                c += GroupRingElement(group, coords, integer_from_json(pair[1], "coefficient"));
            }
            s.add_term(read_exponent(term), c);
        }
        return s;
    }
    throw ParseError("unknown coefficient kind '" + kind + "'");
}

std::string group_to_text(const CharacterGroup& group)
{
    if (group.moduli.empty())
        return "0";
    std::string out;
    for (std::size_t j = 0; j < group.moduli.size(); ++j)
        out += (j ? " x Z/" : "Z/") + std::to_string(group.moduli[j]);
    return out;
}

std::string invariants_to_text(const ResolutionGraph& graph, const GraphInvariants& inv)
{
    std::ostringstream out;
    out << "d = " << inv.determinant << "\n";
    out << "m = [";
    for (std::size_t i = 0; i < inv.m.rows(); ++i) {
        out << (i ? "," : "") << "[";
        for (std::size_t j = 0; j < inv.m.cols(); ++j)
            out << (j ? "," : "") << fraction_string(inv.m(i, j));
        out << "]";
    }
    out << "]\n";
    out << "G = " << group_to_text(*inv.group.group) << "\n";
    out << "orders = (";
    for (std::size_t s = 0; s < inv.orders.size(); ++s)
        out << (s ? "," : "") << inv.orders[s];
    out << ")\n";
    for (std::size_t s = 0; s < inv.alphas.size(); ++s) {
        const auto& chi = inv.alphas[s];
        out << "alpha[" << graph.vertices[s].id << "] = (";
        for (std::size_t t = 0; t < chi.rotations().size(); ++t)
            out << (t ? "," : "") << fraction_string(chi.rotations()[t]);
        out << ") " << coords_string(*chi.group(), chi.coords()) << "\n";
    }
    return out.str();
}

} // namespace abelcover
