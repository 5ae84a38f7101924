#pragma once

#include "bandcol/coloring.hpp"
#include "bandcol/instance.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bandcol {

/// Malformed instance, solution or suite text. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

enum class InstanceFileKind { bcp, bmcp };

std::string_view to_string(InstanceFileKind kind) noexcept;
std::optional<InstanceFileKind> parse_kind(std::string_view text) noexcept;

struct ParseOptions {
    /// Reject line types the kind does not use, and edge counts that disagree with the header.
    bool strict = false;
    /// BMCP only: demands come as a block of n integers right after the header
    /// instead of "n <i> <w>" lines.
    bool demand_block = false;
};

/// Instance text grammar (DIMACS-like):
///   c <comment>          ignored, as are blank lines
///   p edge <n> <m>       header, must precede every other data line
///   e <u> <v> <d>        edge with separation d
///   n <i> <w>            BMCP demand of vertex i (default 1)
///   e <i> <i> <d>        BMCP self-separation d(i,i)
/// In bcp mode "n" lines and self-loops are skipped with a warning, or
/// rejected in strict mode.
struct ParsedInstance {
    std::variant<BcpInstance, BmcpInstance> instance;
    int header_vertices = 0;
    std::int64_t header_edges = 0;
    std::int64_t edge_lines = 0;
    std::vector<std::string> warnings;

    const BcpInstance* bcp() const { return std::get_if<BcpInstance>(&instance); }
    const BmcpInstance* bmcp() const { return std::get_if<BmcpInstance>(&instance); }
};

ParsedInstance parse_instance(std::istream& in, InstanceFileKind kind, const ParseOptions& opts = {});
ParsedInstance parse_instance_text(std::string_view text, InstanceFileKind kind,
                                   const ParseOptions& opts = {});
/// Throws ParseError if the file cannot be opened.
ParsedInstance load_instance(const std::string& path, InstanceFileKind kind,
                             const ParseOptions& opts = {});

/// Writes a BCP instance in the grammar above.
void write_instance(std::ostream& out, const BcpInstance& inst, std::string_view comment = {});

/// One "v <id> <color>" line per vertex.
std::string write_solution(const Coloring& coloring);

/// Inverse of write_solution; comments and blank lines are ignored. Every
/// vertex 1..n must appear exactly once, where n is `n` if given and otherwise
/// the largest id present. When `k` is omitted the color budget becomes the
/// largest color present.
Coloring parse_solution(std::string_view text, std::optional<int> k = std::nullopt,
                        std::optional<int> n = std::nullopt);

/// Statistics of one seeded run.
struct RunRecord {
    std::string instance;
    int k = 0;
    bool success = false;
    std::int64_t f = 0;
    double seconds = 0.0;
    std::int64_t iterations = 0;
    std::uint64_t seed = 0;
};

struct RecordFormat {
    /// Write "-" in place of the wall time so tables of repeated runs compare byte for byte.
    bool omit_time = false;
};

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records,
                       const RecordFormat& format = {});
void write_records_jsonl(std::ostream& out, const std::vector<RunRecord>& records,
                         const RecordFormat& format = {});

} // namespace bandcol
