#include "graphtda/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace graphtda::io {

Json to_json(Value v)
{
    if (v.is_finite())
        return v.finite();
    return v.to_string();
}

Value value_from_json(Json const& j)
{
    if (j.is_number())
        return Value(j.get<double>());
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s == "inf" || s == "-inf")
            return Value::parse(s);
    }
    throw FormatError("expected a number, \"inf\" or \"-inf\", got " + j.dump());
}

namespace {

// Map labels to ground ids, creating a sorted ground set from everything seen.
struct LabelTable
{
    std::vector<std::string> ground;

    explicit LabelTable(std::vector<std::string> labels) : ground(std::move(labels))
    {
        std::sort(ground.begin(), ground.end());
        ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
    }

    Simplex simplex(Json const& labels) const
    {
        if (!labels.is_array() || labels.empty())
            throw FormatError("simplex must be a nonempty array of labels");
        std::vector<VertexId> ids;
        for (auto const& l : labels) {
            auto s = l.get<std::string>();
            auto it = std::lower_bound(ground.begin(), ground.end(), s);
            if (it == ground.end() || *it != s)
                throw FormatError("unknown vertex '" + s + "'");
            ids.push_back(static_cast<VertexId>(it - ground.begin()));
        }
        try {
            return Simplex(std::move(ids));
        } catch (std::invalid_argument const& e) {
            throw FormatError(e.what());
        }
    }
};

Json labels_json(SimplicialComplex const& k, Simplex const& s)
{
    Json arr = Json::array();
    for (auto const& l : k.labels_of(s))
        arr.push_back(l);
    return arr;
}

Json const& field(Json const& j, char const* name)
{
    if (!j.is_object() || !j.contains(name))
        throw FormatError(std::string("missing field '") + name + "'");
    return j.at(name);
}

} // namespace

Json to_json(SimplicialComplex const& k)
{
    Json out;
    out["vertices"] = k.ground();
    Json facets = Json::array();
    for (auto const& f : k.facets())
        facets.push_back(labels_json(k, f));
    out["facets"] = std::move(facets);
    return out;
}

SimplicialComplex complex_from_json(Json const& j)
{
    try {
        std::vector<std::string> labels = field(j, "vertices").get<std::vector<std::string>>();
        LabelTable table(labels);
        if (table.ground.size() != labels.size())
            throw FormatError("duplicate vertex label");
        std::vector<Simplex> facets;
        for (auto const& f : field(j, "facets"))
            facets.push_back(table.simplex(f));
        return SimplicialComplex::from_facets(table.ground, facets);
    } catch (nlohmann::json::exception const& e) {
        throw FormatError(e.what());
    }
}

Json to_json(FilteredComplex const& fc)
{
    auto const& k = fc.complex();
    Json simplices = Json::array();
    auto const all = k.simplices();
    for (std::size_t i = 0; i < all.size(); ++i) {
        Json entry;
        entry["vertices"] = labels_json(k, all[i]);
        entry["value"] = to_json(fc.value(i));
        simplices.push_back(std::move(entry));
    }
    Json out;
    out["simplices"] = std::move(simplices);
    return out;
}

FilteredComplex filtered_from_json(Json const& j)
{
    try {
        auto const& entries = field(j, "simplices");
        std::vector<std::string> labels;
        for (auto const& e : entries)
            for (auto const& l : field(e, "vertices"))
                labels.push_back(l.get<std::string>());
        if (j.contains("vertices"))
            for (auto const& l : j.at("vertices"))
                labels.push_back(l.get<std::string>());
        LabelTable table(std::move(labels));

        std::vector<Simplex> simplices;
        for (auto const& e : entries)
            simplices.push_back(table.simplex(field(e, "vertices")));
        auto k = SimplicialComplex::from_facets(table.ground, simplices);
        if (k.size() != simplices.size())
            throw FormatError("simplex list is not closed under faces or has duplicates");
        std::vector<Value> values(k.size());
        for (std::size_t i = 0; i < simplices.size(); ++i)
            values[*k.index_of(simplices[i])] = value_from_json(field(entries[i], "value"));
        return FilteredComplex(std::move(k), std::move(values));
    } catch (nlohmann::json::exception const& e) {
        throw FormatError(e.what());
    }
}

Json to_json(PersistenceDiagram const& d)
{
    Json out;
    out["dimension"] = d.dimension;
    Json points = Json::array();
    for (auto const& p : d.points) {
        Json e;
        e["birth"] = to_json(p.birth);
        e["death"] = to_json(p.death);
        e["multiplicity"] = p.multiplicity;
        points.push_back(std::move(e));
    }
    out["points"] = std::move(points);
    Json essential = Json::array();
    for (auto const& p : d.essential) {
        Json e;
        e["birth"] = to_json(p.birth);
        e["multiplicity"] = p.multiplicity;
        essential.push_back(std::move(e));
    }
    out["essential"] = std::move(essential);
    return out;
}

PersistenceDiagram diagram_from_json(Json const& j)
{
    try {
        PersistenceDiagram d;
        d.dimension = field(j, "dimension").get<int>();
        if (j.contains("points"))
            for (auto const& p : j.at("points"))
                d.points.push_back({value_from_json(field(p, "birth")), value_from_json(field(p, "death")),
                                    p.value("multiplicity", std::size_t{1})});
        if (j.contains("essential"))
            for (auto const& p : j.at("essential"))
                d.essential.push_back({value_from_json(field(p, "birth")), p.value("multiplicity", std::size_t{1})});
        d.normalize();
        return d;
    } catch (nlohmann::json::exception const& e) {
        throw FormatError(e.what());
    } catch (std::invalid_argument const& e) {
        throw FormatError(e.what());
    }
}

std::string diagrams_to_csv(std::span<PersistenceDiagram const> diagrams)
{
    std::string out = "dimension,birth,death,multiplicity\n";
    for (auto const& d : diagrams) {
        auto r = std::to_string(d.dimension);
        for (auto const& p : d.points)
            out += r + ',' + p.birth.to_string() + ',' + p.death.to_string() + ',' + std::to_string(p.multiplicity)
                 + '\n';
        for (auto const& e : d.essential)
            out += r + ',' + e.birth.to_string() + ",inf," + std::to_string(e.multiplicity) + '\n';
    }
    return out;
}

std::vector<PersistenceDiagram> diagrams_from_csv(std::string_view text)
{
    std::map<int, PersistenceDiagram> by_dim;
    std::istringstream in{std::string(text)};
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#' || line.rfind("dimension", 0) == 0)
            continue;
        std::vector<std::string> cells;
        std::stringstream row(line);
        for (std::string cell; std::getline(row, cell, ',');)
            cells.push_back(cell);
        if (cells.size() != 4)
            throw FormatError("csv line " + std::to_string(line_no) + ": expected 4 fields");
        try {
            int r = std::stoi(cells[0]);
            auto birth = Value::parse(cells[1]);
            auto death = Value::parse(cells[2]);
            auto mult = static_cast<std::size_t>(std::stoul(cells[3]));
            auto& d = by_dim[r];
            d.dimension = r;
            if (death.is_pos_inf())
                d.essential.push_back({birth, mult});
            else
                d.points.push_back({birth, death, mult});
        } catch (std::logic_error const& e) {
            throw FormatError("csv line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    std::vector<PersistenceDiagram> out;
    for (auto& [r, d] : by_dim) {
        try {
            d.normalize();
        } catch (std::invalid_argument const& e) {
            throw FormatError(e.what());
        }
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<PersistenceDiagram> load_diagrams(std::string_view text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw FormatError("empty diagram document");
    if (text[first] != '{' && text[first] != '[')
        return diagrams_from_csv(text);

    Json j;
    try {
        j = Json::parse(text);
    } catch (nlohmann::json::exception const& e) {
        throw FormatError(e.what());
    }
    auto from_array = [](Json const& arr) {
        std::vector<PersistenceDiagram> out;
        for (auto const& d : arr)
            out.push_back(diagram_from_json(d));
        return out;
    };
    if (j.is_array())
        return from_array(j);
    if (j.contains("diagrams"))
        return from_array(j.at("diagrams"));
    if (j.contains("ascending"))
        return from_array(j.at("ascending"));
    return {diagram_from_json(j)};
}

std::string read_file(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(std::string const& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
    if (!out)
        throw std::runtime_error("write failed for '" + path + "'");
}

} // namespace graphtda::io
