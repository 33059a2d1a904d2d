#include "lpaleb/partition.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

namespace lpaleb {

Partition Partition::whole(std::size_t node_count) {
    const std::vector<NodeId> labels(node_count, 0);
    return from_labels(std::span<const NodeId>(labels));
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool parse_integer(std::string_view token, std::uint64_t& out) {
    token = trim(token);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size() && !token.empty();
}

}  // namespace

Partition read_partition_csv(std::istream& in, std::size_t node_count) {
    std::vector<std::uint64_t> labels(node_count);
    std::vector<bool> assigned(node_count, false);
    std::size_t assigned_count = 0;
    std::string line;
    std::size_t line_no = 0;
    bool first_row = true;
    while (std::getline(in, line)) {
        ++line_no;
        const auto row = trim(line);
        if (row.empty() || row.front() == '#') continue;
        const auto comma = row.find(',');
        if (comma == std::string_view::npos) throw ParseError(line_no, "expected 'node,community'");
        std::uint64_t node = 0;
        std::uint64_t community = 0;
        const bool ok = parse_integer(row.substr(0, comma), node) && parse_integer(row.substr(comma + 1), community);
        if (!ok) {
            if (first_row) {
                first_row = false;
                continue;  // header
            }
            throw ParseError(line_no, "expected two non-negative integers");
        }
        first_row = false;
        if (node >= node_count)
            throw ParseError(line_no, "node " + std::to_string(node) + " outside graph of " +
                                          std::to_string(node_count) + " nodes");
        if (assigned[node]) throw ParseError(line_no, "node " + std::to_string(node) + " listed twice");
        assigned[node] = true;
        ++assigned_count;
        labels[node] = community;
    }
    if (assigned_count != node_count)
        throw ParseError(line_no, "community file covers " + std::to_string(assigned_count) + " of " +
                                      std::to_string(node_count) + " nodes");
    return Partition::from_labels(std::span<const std::uint64_t>(labels));
}

Partition read_partition_csv_file(const std::string& path, std::size_t node_count) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open community file '" + path + "'");
    return read_partition_csv(in, node_count);
}

void write_partition_csv(std::ostream& out, const Partition& p) {
    out << "node,community\n";
    const auto membership = p.membership();
    for (std::size_t u = 0; u < membership.size(); ++u) out << u << ',' << membership[u] << '\n';
}

}  // namespace lpaleb
