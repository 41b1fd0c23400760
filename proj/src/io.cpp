#include "mcf/io.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace mcf {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& context, const std::string& what) {
    throw std::runtime_error("parse error (" + context + "): " + what);
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::vector<std::string_view> split_char(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

long parse_long(std::string_view text, const std::string& context) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        parse_fail(context, "expected integer, got '" + std::string(text) + "'");
    return value;
}

} // namespace

std::string format_double(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

double parse_double(std::string_view text, const std::string& context) {
    if (text == "inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        parse_fail(context, "expected number, got '" + std::string(text) + "'");
    return value;
}

void atomic_write(const std::filesystem::path& path, const std::string& payload) {
    std::filesystem::path dir = path.parent_path();
    if (dir.empty()) dir = ".";
    std::filesystem::path tmp = dir / (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << payload;
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string sequence_to_json(const ScaledPartitionSequence& seq) {
    ordered_json j;
    j["n_points"] = seq.n_points();
    ordered_json scales = ordered_json::array();
    for (double t : seq.scales()) scales.push_back(t);
    j["scales"] = std::move(scales);
    ordered_json parts = ordered_json::array();
    for (const Partition& p : seq.partitions()) parts.push_back(p.labels());
    j["partitions"] = std::move(parts);
    return j.dump(2) + "\n";
}

ScaledPartitionSequence sequence_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        parse_fail("sequence json", e.what());
    }
    for (const char* field : {"n_points", "scales", "partitions"})
        if (!j.contains(field)) parse_fail("sequence json", std::string("missing field '") + field + "'");
    int n = j["n_points"].get<int>();
    std::vector<double> scales = j["scales"].get<std::vector<double>>();
    std::vector<Partition> partitions;
    for (std::size_t m = 0; m < j["partitions"].size(); ++m) {
        std::vector<int> labels = j["partitions"][m].get<std::vector<int>>();
        if (static_cast<int>(labels.size()) != n)
            parse_fail("sequence json",
                       "partition " + std::to_string(m) + " has " +
                           std::to_string(labels.size()) + " labels, expected " +
                           std::to_string(n));
        partitions.emplace_back(labels);
    }
    return ScaledPartitionSequence(std::move(partitions), std::move(scales));
}

std::string sequence_to_csv(const ScaledPartitionSequence& seq) {
    std::string out;
    for (int m = 0; m < seq.size(); ++m) {
        out += format_double(seq.scale(m));
        for (int label : seq.partition(m).labels()) {
            out += ',';
            out += std::to_string(label);
        }
        out += '\n';
    }
    return out;
}

ScaledPartitionSequence sequence_from_csv(const std::string& text) {
    std::vector<Partition> partitions;
    std::vector<double> scales;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::string context = "sequence csv line " + std::to_string(line_no);
        auto fields = split_char(line, ',');
        if (fields.size() < 2) parse_fail(context, "need a scale and at least one label");
        scales.push_back(parse_double(fields[0], context));
        std::vector<int> labels;
        labels.reserve(fields.size() - 1);
        for (std::size_t i = 1; i < fields.size(); ++i)
            labels.push_back(static_cast<int>(parse_long(fields[i], context)));
        partitions.emplace_back(labels);
    }
    if (partitions.empty()) parse_fail("sequence csv", "no rows");
    return ScaledPartitionSequence(std::move(partitions), std::move(scales));
}

ScaledPartitionSequence read_sequence(const std::filesystem::path& path) {
    std::string text = read_file(path);
    if (path.extension() == ".csv") return sequence_from_csv(text);
    return sequence_from_json(text);
}

void write_sequence(const std::filesystem::path& path, const ScaledPartitionSequence& seq) {
    atomic_write(path, path.extension() == ".csv" ? sequence_to_csv(seq)
                                                  : sequence_to_json(seq));
}

std::string filtration_to_text(const FilteredComplex& fc) {
    std::string out;
    for (const Cell& c : fc.cells()) {
        out += format_double(c.value);
        out += ' ';
        out += std::to_string(c.dim());
        for (std::int32_t v : c.simplex.vertices()) {
            out += ' ';
            out += std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

FilteredComplex filtration_from_text(const std::string& text) {
    std::vector<Cell> cells;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int max_dim = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::string context = "filtration line " + std::to_string(line_no);
        auto fields = split_ws(line);
        if (fields.size() < 3) parse_fail(context, "need value, dim and vertices");
        double value = parse_double(fields[0], context);
        long dim = parse_long(fields[1], context);
        if (dim + 3 != static_cast<long>(fields.size()))
            parse_fail(context, "vertex count does not match the declared dimension");
        std::vector<std::int32_t> vertices;
        for (std::size_t i = 2; i < fields.size(); ++i)
            vertices.push_back(static_cast<std::int32_t>(parse_long(fields[i], context)));
        max_dim = std::max(max_dim, static_cast<int>(dim));
        cells.push_back(Cell{value, Simplex(std::move(vertices))});
    }
    return FilteredComplex(std::move(cells), max_dim);
}

FilteredComplex read_filtration(const std::filesystem::path& path) {
    return filtration_from_text(read_file(path));
}

std::string diagrams_to_csv(const std::vector<PersistenceDiagram>& diagrams) {
    std::string out = "dim,birth,death\n";
    for (const PersistenceDiagram& d : diagrams)
        for (const DiagramPoint& p : d.points) {
            out += std::to_string(d.dim);
            out += ',';
            out += format_double(p.birth);
            out += ',';
            out += format_double(p.death);
            out += '\n';
        }
    return out;
}

std::vector<PersistenceDiagram> diagrams_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "dim,birth,death")
        parse_fail("diagram csv", "missing 'dim,birth,death' header");
    std::vector<PersistenceDiagram> out;
    auto diagram_for = [&out](int dim) -> PersistenceDiagram& {
        for (PersistenceDiagram& d : out)
            if (d.dim == dim) return d;
        out.push_back(PersistenceDiagram{dim, {}});
        return out.back();
    };
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::string context = "diagram csv line " + std::to_string(line_no);
        auto fields = split_char(line, ',');
        if (fields.size() != 3) parse_fail(context, "need dim,birth,death");
        int dim = static_cast<int>(parse_long(fields[0], context));
        double birth = parse_double(fields[1], context);
        double death = parse_double(fields[2], context);
        diagram_for(dim).points.push_back(DiagramPoint{birth, death});
    }
    return out;
}

std::vector<PersistenceDiagram> read_diagrams(const std::filesystem::path& path) {
    return diagrams_from_csv(read_file(path));
}

std::string measures_to_csv(const StepFunction& h, const StepFunction& conflict,
                            const std::vector<StepFunction>& betti) {
    std::string out = "scale,h,c_total";
    for (std::size_t k = 0; k < betti.size(); ++k)
        out += ",beta" + std::to_string(k);
    out += '\n';
    for (std::size_t m = 0; m < h.size(); ++m) {
        out += format_double(h.knot(m));
        out += ',';
        out += format_double(h.value(m));
        out += ',';
        out += format_double(conflict.value(m));
        for (const StepFunction& b : betti) {
            out += ',';
            out += format_double(b.value(m));
        }
        out += '\n';
    }
    return out;
}

std::string selected_scales_to_json(const std::vector<SelectedScale>& selected,
                                    const ScaleSelectionParams& params,
                                    double average_hierarchy) {
    ordered_json j;
    j["params"] = {{"plateau_length", params.plateau_length},
                   {"betti_ceiling", params.betti_ceiling}};
    j["average_hierarchy"] = average_hierarchy;
    ordered_json list = ordered_json::array();
    for (const SelectedScale& s : selected)
        list.push_back({{"scale", s.scale}, {"plateau", s.plateau}, {"betti_sum", s.betti_sum}});
    j["selected"] = std::move(list);
    return j.dump(2) + "\n";
}

std::string graph_to_edge_list(const RandomGraph& g) {
    std::string out = "# n " + std::to_string(g.n) + "\n";
    for (auto [u, v] : g.edges)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

RandomGraph read_edge_list(const std::filesystem::path& path) {
    std::string text = read_file(path);
    std::istringstream in(text);
    std::string line;
    RandomGraph g;
    int line_no = 0;
    int max_vertex = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::string context = "edge list line " + std::to_string(line_no);
        auto fields = split_ws(line);
        if (!fields.empty() && fields[0] == "#") {
            if (fields.size() == 3 && fields[1] == "n")
                g.n = static_cast<int>(parse_long(fields[2], context));
            continue;
        }
        if (fields.size() != 2) parse_fail(context, "expected 'u v'");
        int u = static_cast<int>(parse_long(fields[0], context));
        int v = static_cast<int>(parse_long(fields[1], context));
        if (u == v) parse_fail(context, "self loop");
        if (u > v) std::swap(u, v);
        g.edges.emplace_back(u, v);
        max_vertex = std::max(max_vertex, v);
    }
    g.n = std::max(g.n, max_vertex + 1);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

} // namespace mcf
