#include "oneskel/spacefile.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "oneskel/errors.hpp"

namespace oneskel {

namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i)
    {
        if (text[i] == '\n')
        {
            ++line;
            column = 1;
        }
        else
            ++column;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_json(std::string_view text)
{
    try
    {
        return json::parse(text.begin(), text.end());
    }
    catch (const json::parse_error& e)
    {
        std::string what = e.what();
        if (auto pos = what.find("syntax error"); pos != std::string::npos)
            what = what.substr(pos);
        throw ParseError(line_column(text, e.byte), what);
    }
}

// A JSON value together with its key path, for located diagnostics.
class Node
{
    public:
        Node(const json& value, std::string path) : value_(value), path_(std::move(path)) {}

        const json& value() const { return value_; }
        const std::string& path() const { return path_; }

        [[noreturn]] void fail(const std::string& what) const { throw ParseError(path_.empty() ? "$" : path_, what); }

        Node key(const std::string& name) const
        {
            require_object();
            auto it = value_.find(name);
            if (it == value_.end())
                fail("missing key \"" + name + "\"");
            return Node(*it, join(name));
        }

        std::optional<Node> optional_key(const std::string& name) const
        {
            require_object();
            auto it = value_.find(name);
            if (it == value_.end() || it->is_null())
                return std::nullopt;
            return Node(*it, join(name));
        }

        void allow_keys(std::initializer_list<const char*> names) const
        {
            require_object();
            std::set<std::string> allowed(names.begin(), names.end());
            for (const auto& [k, v] : value_.items())
                if (!allowed.count(k))
                    Node(v, join(k)).fail("unknown key");
        }

        std::vector<Node> items() const
        {
            if (!value_.is_array())
                fail("expected an array");
            std::vector<Node> out;
            for (std::size_t i = 0; i < value_.size(); ++i)
                out.emplace_back(value_[i], path_ + "[" + std::to_string(i) + "]");
            return out;
        }

        Int integer() const
        {
            if (!value_.is_number_integer())
                fail("expected an integer");
            if (value_.is_number_unsigned() && value_.get<std::uint64_t>() > std::uint64_t(INT64_MAX))
                fail("integer out of range");
            return value_.get<Int>();
        }

        std::size_t count() const
        {
            Int v = integer();
            if (v < 0)
                fail("expected a non-negative integer");
            return static_cast<std::size_t>(v);
        }

        bool boolean() const
        {
            if (!value_.is_boolean())
                fail("expected true or false");
            return value_.get<bool>();
        }

        std::string string() const
        {
            if (!value_.is_string())
                fail("expected a string");
            return value_.get<std::string>();
        }

        Rational rational() const
        {
            if (value_.is_number_integer())
                return Rational(integer());
            if (!value_.is_string())
                fail("expected an exact rational (integer or \"p/q\" string)");
            try
            {
                return parse_rational(value_.get<std::string>());
            }
            catch (const ParseError& e)
            {
                fail(e.detail());
            }
        }

        RationalVector rational_vector() const
        {
            RationalVector out;
            for (const auto& item : items())
                out.push_back(item.rational());
            return out;
        }

        LatticeVector lattice_vector() const
        {
            std::vector<Int> out;
            for (const auto& item : items())
                out.push_back(item.integer());
            return LatticeVector(std::move(out));
        }

        std::vector<LatticeVector> lattice_vectors() const
        {
            std::vector<LatticeVector> out;
            for (const auto& item : items())
                out.push_back(item.lattice_vector());
            return out;
        }

    private:
        void require_object() const
        {
            if (!value_.is_object())
                fail("expected an object");
        }

        std::string join(const std::string& name) const { return path_.empty() ? name : path_ + "." + name; }

        const json& value_;
        std::string path_;
};

WeightRef weight_ref(const Node& n)
{
    auto parts = n.items();
    if (parts.size() != 2)
        n.fail("expected [point id, weight index]");
    return {parts[0].string(), parts[1].count()};
}

json rational_json(const Rational& q) { return to_string(q); }

json vector_json(const RationalVector& v)
{
    json out = json::array();
    for (const auto& q : v)
        out.push_back(rational_json(q));
    return out;
}

json lattice_json(const LatticeVector& v)
{
    json out = json::array();
    for (Int x : v)
        out.push_back(x);
    return out;
}

json lattice_list_json(const std::vector<LatticeVector>& vs)
{
    json out = json::array();
    for (const auto& v : vs)
        out.push_back(lattice_json(v));
    return out;
}

std::vector<Int> integer_list(std::string_view text, std::string_view whole)
{
    std::vector<Int> out;
    std::size_t start = 0;
    while (start <= text.size())
    {
        std::size_t comma = text.find(',', start);
        std::string piece(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        piece.erase(0, piece.find_first_not_of(" \t"));
        piece.erase(piece.find_last_not_of(" \t") + 1);
        try
        {
            std::size_t used = 0;
            Int v = std::stoll(piece, &used);
            if (used != piece.size())
                throw std::invalid_argument(piece);
            out.push_back(v);
        }
        catch (const std::exception&)
        {
            throw ParseError("", "bad integer \"" + piece + "\" in \"" + std::string(whole) + "\"");
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace

SpaceData parse_space(std::string_view text)
{
    json doc = parse_json(text);
    Node root(doc, "");
    root.allow_keys({"torus_rank", "half_dim", "points", "surfaces", "pairings", "fat_edges", "flags"});

    SpaceData space;
    space.torus_rank = root.key("torus_rank").count();
    space.half_dim = root.key("half_dim").count();

    if (auto points = root.optional_key("points"))
        for (const auto& n : points->items())
        {
            n.allow_keys({"id", "position", "weights"});
            space.points.push_back(
                {n.key("id").string(), n.key("position").rational_vector(), n.key("weights").lattice_vectors()});
        }

    if (auto surfaces = root.optional_key("surfaces"))
        for (const auto& n : surfaces->items())
        {
            n.allow_keys({"id", "genus", "position", "area", "normal_weights", "normal_degrees"});
            FixedSurface s;
            s.id = n.key("id").string();
            s.genus = n.key("genus").integer();
            s.position = n.key("position").rational_vector();
            s.area = n.key("area").rational();
            s.normal_weights = n.key("normal_weights").lattice_vectors();
            if (auto deg = n.optional_key("normal_degrees"))
                s.normal_degrees = deg->lattice_vector().entries();
            space.surfaces.push_back(std::move(s));
        }

    if (auto pairings = root.optional_key("pairings"))
    {
        space.pairings.emplace();
        for (const auto& n : pairings->items())
        {
            auto ends = n.items();
            if (ends.size() != 2)
                n.fail("expected [[point, weight], [point, weight]]");
            space.pairings->push_back({weight_ref(ends[0]), weight_ref(ends[1])});
        }
    }

    if (auto fat = root.optional_key("fat_edges"))
        for (const auto& n : fat->items())
        {
            n.allow_keys({"edge_id", "polytope", "circle_factor", "component_map"});
            FatEdgeExtension ext;
            ext.edge_id = n.key("edge_id").string();
            Node poly = n.key("polytope");
            poly.allow_keys({"vertices"});
            for (const auto& v : poly.key("vertices").items())
                ext.polytope.push_back(v.rational_vector());
            if (auto circle = n.optional_key("circle_factor"))
                ext.circle = circle->lattice_vector();
            for (const auto& m : n.key("component_map").items())
            {
                m.allow_keys({"vertex", "component"});
                ext.component_map.push_back({m.key("vertex").rational_vector(), m.key("component").string()});
            }
            space.fat_edge_extensions.push_back(std::move(ext));
        }

    if (auto flags = root.optional_key("flags"))
    {
        flags->allow_keys({"monotone"});
        if (auto mono = flags->optional_key("monotone"))
            space.flags.monotone = mono->boolean();
    }
    return space;
}

std::string emit_space(const SpaceData& space)
{
    json doc = json::object();
    doc["torus_rank"] = space.torus_rank;
    doc["half_dim"] = space.half_dim;

    json points = json::array();
    for (const auto& p : space.points)
        points.push_back({{"id", p.id}, {"position", vector_json(p.position)}, {"weights", lattice_list_json(p.weights)}});
    doc["points"] = std::move(points);

    json surfaces = json::array();
    for (const auto& s : space.surfaces)
    {
        json n = {{"id", s.id},
                  {"genus", s.genus},
                  {"position", vector_json(s.position)},
                  {"area", rational_json(s.area)},
                  {"normal_weights", lattice_list_json(s.normal_weights)}};
        if (s.normal_degrees)
            n["normal_degrees"] = *s.normal_degrees;
        surfaces.push_back(std::move(n));
    }
    doc["surfaces"] = std::move(surfaces);

    if (space.pairings)
    {
        json pairings = json::array();
        for (const auto& pr : *space.pairings)
            pairings.push_back(json::array({json::array({pr.first.point, pr.first.weight}),
                                            json::array({pr.second.point, pr.second.weight})}));
        doc["pairings"] = std::move(pairings);
    }

    if (!space.fat_edge_extensions.empty())
    {
        json fat = json::array();
        for (const auto& ext : space.fat_edge_extensions)
        {
            json verts = json::array();
            for (const auto& v : ext.polytope)
                verts.push_back(vector_json(v));
            json map = json::array();
            for (const auto& m : ext.component_map)
                map.push_back({{"vertex", vector_json(m.vertex)}, {"component", m.component}});
            fat.push_back({{"edge_id", ext.edge_id},
                           {"polytope", {{"vertices", std::move(verts)}}},
                           {"circle_factor", lattice_json(ext.circle)},
                           {"component_map", std::move(map)}});
        }
        doc["fat_edges"] = std::move(fat);
    }

    if (space.flags.monotone)
        doc["flags"] = {{"monotone", *space.flags.monotone}};

    return doc.dump(2) + "\n";
}

PolytopeFile parse_polytope_file(std::string_view text)
{
    json doc = parse_json(text);
    Node root(doc, "");
    root.allow_keys({"dim", "vertices", "iota"});
    PolytopeFile file;
    file.dim = root.key("dim").count();
    for (const auto& v : root.key("vertices").items())
    {
        file.vertices.push_back(v.rational_vector());
        if (file.vertices.back().size() != file.dim)
            v.fail("vertex has " + std::to_string(file.vertices.back().size()) + " coordinates, dim is "
                   + std::to_string(file.dim));
    }
    if (auto iota = root.optional_key("iota"))
    {
        std::vector<std::vector<Int>> rows;
        for (const auto& r : iota->items())
        {
            rows.push_back(r.lattice_vector().entries());
            if (rows.back().size() != rows.front().size())
                r.fail("ragged matrix");
        }
        if (rows.empty())
            iota->fail("empty matrix");
        file.iota = IntMatrix(rows);
    }
    return file;
}

IntMatrix parse_matrix(std::string_view text)
{
    std::vector<std::vector<Int>> rows;
    std::size_t start = 0;
    while (true)
    {
        std::size_t semi = text.find(';', start);
        rows.push_back(integer_list(text.substr(start, semi == std::string_view::npos ? std::string_view::npos
                                                                                       : semi - start),
                                    text));
        if (rows.back().size() != rows.front().size())
            throw ParseError("", "ragged matrix \"" + std::string(text) + "\"");
        if (semi == std::string_view::npos)
            break;
        start = semi + 1;
    }
    return IntMatrix(rows);
}

LatticeVector parse_lattice_vector(std::string_view text)
{
    return LatticeVector(integer_list(text, text));
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("cannot read " + path.string());
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write " + path.string());
    out << contents;
    if (!out)
        throw IoError("cannot write " + path.string());
}

SpaceData load_space(const std::filesystem::path& path)
{
    std::string text = read_file(path);
    try
    {
        return parse_space(text);
    }
    catch (const ParseError& e)
    {
        throw ParseError(path.string() + (e.location().empty() ? "" : ": " + e.location()), e.detail());
    }
}

} // namespace oneskel
