#include "bandcol/io.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace bandcol {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i > start)
            tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

template <typename Int>
std::optional<Int> to_int(std::string_view token) {
    Int value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        return std::nullopt;
    return value;
}

template <typename Int = int>
Int int_field(std::string_view token, int line, std::string_view what) {
    const auto value = to_int<Int>(token);
    if (!value)
        throw ParseError("expected an integer " + std::string(what) + ", got '" +
                         std::string(token) + "'",
                         line);
    return *value;
}

bool all_integers(const std::vector<std::string_view>& tokens) {
    for (auto t : tokens)
        if (!to_int<long long>(t))
            return false;
    return !tokens.empty();
}

} // namespace

std::string_view to_string(InstanceFileKind kind) noexcept {
    return kind == InstanceFileKind::bcp ? "bcp" : "bmcp";
}

std::optional<InstanceFileKind> parse_kind(std::string_view text) noexcept {
    if (text == "bcp")
        return InstanceFileKind::bcp;
    if (text == "bmcp")
        return InstanceFileKind::bmcp;
    return std::nullopt;
}

ParsedInstance parse_instance(std::istream& in, InstanceFileKind kind, const ParseOptions& opts) {
    const bool bmcp = kind == InstanceFileKind::bmcp;
    bool have_header = false;
    int n = 0;
    std::int64_t header_edges = 0;
    std::int64_t edge_lines = 0;
    std::vector<Edge> edges;
    std::vector<int> demand, self_d;
    std::vector<int> self_line;  // line that set d(i,i), 0 if none
    std::vector<std::string> warnings;
    std::size_t block_filled = 0;
    bool block_open = bmcp && opts.demand_block;

    auto reject_or_warn = [&](const std::string& what, int ln) {
        if (opts.strict)
            throw ParseError(what, ln);
        warnings.push_back("line " + std::to_string(ln) + ": " + what + "; ignored");
    };
    auto vertex_id = [&](std::string_view token, int ln) {
        const int id = int_field(token, ln, "vertex id");
        if (id < 1 || id > n)
            throw ParseError("vertex id " + std::to_string(id) + " outside 1.." + std::to_string(n),
                             ln);
        return id;
    };

    std::string raw;
    for (int ln = 1; std::getline(in, raw); ++ln) {
        const auto tokens = tokenize(raw);
        if (tokens.empty() || tokens[0] == "c" || tokens[0][0] == 'c')
            continue;
        const std::string_view type = tokens[0];

        if (block_open && have_header && all_integers(tokens)) {
            for (auto t : tokens) {
                if (block_filled == static_cast<std::size_t>(n))
                    throw ParseError("demand block holds more than " + std::to_string(n) +
                                     " values",
                                     ln);
                demand[block_filled++] = int_field(t, ln, "demand");
            }
            continue;
        }
        if (type == "p") {
            if (have_header)
                throw ParseError("second header line", ln);
            if (tokens.size() != 4)
                throw ParseError("header must read 'p edge <n> <m>'", ln);
            n = int_field(tokens[2], ln, "vertex count");
            header_edges = int_field<std::int64_t>(tokens[3], ln, "edge count");
            if (n < 1)
                throw ParseError("vertex count must be positive", ln);
            if (header_edges < 0)
                throw ParseError("edge count must be non-negative", ln);
            have_header = true;
            demand.assign(n, 1);
            self_d.assign(n, 0);
            self_line.assign(n, 0);
            continue;
        }
        if (!have_header)
            throw ParseError(type == "e" ? "edge before header" : "data line before header", ln);
        if (block_open && block_filled != static_cast<std::size_t>(n))
            throw ParseError("demand block has " + std::to_string(block_filled) + " of " +
                                 std::to_string(n) + " values",
                             ln);
        block_open = false;

        if (type == "e") {
            if (tokens.size() != 4)
                throw ParseError("edge line must read 'e <u> <v> <d>'", ln);
            const int u = vertex_id(tokens[1], ln);
            const int v = vertex_id(tokens[2], ln);
            const int d = int_field(tokens[3], ln, "separation");
            ++edge_lines;
            if (u != v) {
                if (d < 1)
                    throw ParseError("separation must be at least 1", ln);
                edges.push_back({u, v, d});
            } else if (!bmcp) {
                reject_or_warn("self-loop on vertex " + std::to_string(u) + " in a bcp file", ln);
            } else {
                if (d < 0)
                    throw ParseError("self-separation must be non-negative", ln);
                if (self_line[u - 1] != 0 && self_d[u - 1] != d)
                    throw ParseError("conflicting self-separation for vertex " + std::to_string(u) +
                                         " (first set on line " +
                                         std::to_string(self_line[u - 1]) + ")",
                                     ln);
                self_d[u - 1] = d;
                self_line[u - 1] = ln;
            }
        } else if (type == "n") {
            if (!bmcp) {
                reject_or_warn("demand line in a bcp file", ln);
                continue;
            }
            if (opts.demand_block)
                throw ParseError("demand line in a file read with a demand block", ln);
            if (tokens.size() != 3)
                throw ParseError("demand line must read 'n <i> <w>'", ln);
            const int i = vertex_id(tokens[1], ln);
            const int w = int_field(tokens[2], ln, "demand");
            if (w < 1)
                throw ParseError("demand must be at least 1", ln);
            demand[i - 1] = w;
        } else {
            reject_or_warn("unknown line type '" + std::string(type) + "'", ln);
        }
    }
    if (!have_header)
        throw ParseError("missing 'p edge <n> <m>' header");
    if (block_open && block_filled != static_cast<std::size_t>(n))
        throw ParseError("demand block has " + std::to_string(block_filled) + " of " +
                         std::to_string(n) + " values");
    if (edge_lines != header_edges) {
        const std::string what = "header announces " + std::to_string(header_edges) +
                                 " edges but " + std::to_string(edge_lines) + " edge lines follow";
        if (opts.strict)
            throw ParseError(what);
        warnings.push_back(what);
    }

    ParsedInstance parsed;
    parsed.header_vertices = n;
    parsed.header_edges = header_edges;
    parsed.edge_lines = edge_lines;
    try {
        if (bmcp) {
            BmcpInstance inst = build_bmcp_instance(std::move(demand), std::move(self_d), edges);
            warnings.insert(warnings.end(), inst.warnings().begin(), inst.warnings().end());
            parsed.instance = std::move(inst);
        } else {
            parsed.instance = build_bcp_instance(n, edges);
        }
    } catch (const InstanceError& e) {
        throw ParseError(e.what());
    }
    parsed.warnings = std::move(warnings);
    return parsed;
}

ParsedInstance parse_instance_text(std::string_view text, InstanceFileKind kind,
                                   const ParseOptions& opts) {
    std::istringstream in{std::string(text)};
    return parse_instance(in, kind, opts);
}

ParsedInstance load_instance(const std::string& path, InstanceFileKind kind,
                             const ParseOptions& opts) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    return parse_instance(in, kind, opts);
}

void write_instance(std::ostream& out, const BcpInstance& inst, std::string_view comment) {
    if (!comment.empty())
        out << "c " << comment << '\n';
    out << "p edge " << inst.vertex_count() << ' ' << inst.edge_count() << '\n';
    for (const Edge& e : inst.edges())
        out << "e " << e.u << ' ' << e.v << ' ' << e.d << '\n';
}

std::string write_solution(const Coloring& coloring) {
    std::string out;
    for (std::size_t v = 0; v < coloring.size(); ++v)
        out += "v " + std::to_string(v + 1) + ' ' + std::to_string(coloring[v]) + '\n';
    return out;
}

Coloring parse_solution(std::string_view text, std::optional<int> k, std::optional<int> n) {
    std::vector<int> colors;
    int ln = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const auto tokens = tokenize(text.substr(pos, end - pos));
        pos = end + 1;
        ++ln;
        if (tokens.empty() || tokens[0][0] == 'c')
            continue;
        if (tokens[0] != "v" || tokens.size() != 3)
            throw ParseError("solution line must read 'v <id> <color>'", ln);
        const int id = int_field(tokens[1], ln, "vertex id");
        const int color = int_field(tokens[2], ln, "color");
        if (id < 1 || (n && id > *n))
            throw ParseError("vertex id " + std::to_string(id) + " out of range", ln);
        if (color < 1)
            throw ParseError("color must be at least 1", ln);
        if (k && color > *k)
            throw ParseError("color " + std::to_string(color) + " exceeds k = " + std::to_string(*k),
                             ln);
        if (static_cast<std::size_t>(id) > colors.size())
            colors.resize(id, 0);
        if (colors[id - 1] != 0)
            throw ParseError("duplicate vertex " + std::to_string(id), ln);
        colors[id - 1] = color;
    }
    if (n && static_cast<std::size_t>(*n) > colors.size())
        colors.resize(*n, 0);
    for (std::size_t v = 0; v < colors.size(); ++v)
        if (colors[v] == 0)
            throw ParseError("missing vertex " + std::to_string(v + 1));
    if (colors.empty())
        throw ParseError("solution lists no vertices");
    const int budget = k ? *k : *std::max_element(colors.begin(), colors.end());
    return Coloring(std::move(colors), budget);
}

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records,
                       const RecordFormat& format) {
    out << "instance,k,success,f,time,iterations,seed\n";
    for (const RunRecord& r : records) {
        out << r.instance << ',' << r.k << ',' << (r.success ? 1 : 0) << ',' << r.f << ',';
        if (format.omit_time)
            out << '-';
        else
            out << std::fixed << std::setprecision(3) << r.seconds << std::defaultfloat;
        out << ',' << r.iterations << ',' << r.seed << '\n';
    }
}

void write_records_jsonl(std::ostream& out, const std::vector<RunRecord>& records,
                         const RecordFormat& format) {
    for (const RunRecord& r : records) {
        nlohmann::ordered_json j;
        j["instance"] = r.instance;
        j["k"] = r.k;
        j["success"] = r.success;
        j["f"] = r.f;
        if (format.omit_time)
            j["time"] = nullptr;
        else
            j["time"] = r.seconds;
        j["iterations"] = r.iterations;
        j["seed"] = r.seed;
        out << j.dump() << '\n';
    }
}

} // namespace bandcol
