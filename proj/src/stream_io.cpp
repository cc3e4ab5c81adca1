#include "evomine/stream_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "evomine/errors.hpp"

namespace evomine {

namespace {

long long parse_integer(const std::string& field, const std::string& name, int line) {
    long long value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError(name + ": expected an integer, got \"" + field + "\"", line);
    return value;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

std::string label_or_sentinel(const std::string& field) {
    return field.empty() ? kNoLabel : field;
}

struct PendingSnapshot {
    long long time = 0;
    std::vector<std::pair<long long, std::string>> nodes; // insertion order, unique ids
    std::map<long long, std::size_t> node_index;
    std::vector<std::tuple<long long, long long, std::string>> edges;
    std::set<std::tuple<long long, long long, std::string>> edge_keys;

    void add_node(long long id, const std::string& label, int line) {
        auto [it, inserted] = node_index.emplace(id, nodes.size());
        if (inserted) {
            nodes.emplace_back(id, label);
        } else if (nodes[it->second].second != label) {
            throw ParseError("node " + std::to_string(id) + " has conflicting labels \"" +
                                 nodes[it->second].second + "\" and \"" + label +
                                 "\" within one snapshot",
                             line);
        }
    }
};

Snapshot finish(PendingSnapshot&& pending) {
    return Snapshot(pending.time, std::move(pending.nodes), std::move(pending.edges));
}

} // namespace

std::vector<Snapshot> load_stream(std::istream& in, const std::string& name) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(name + ": empty file", 0);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kStreamHeader)
        throw ParseError(name + ": missing or unsupported header (expected \"" + kStreamHeader +
                             "\")",
                         1);

    std::vector<Snapshot> snapshots;
    PendingSnapshot pending;
    bool open = false;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty())
            throw ParseError(name + ": blank line", line_no);
        std::vector<std::string> fields = split_tabs(line);
        if (fields.size() != 6)
            throw ParseError(name + ": expected 6 tab-separated fields, got " +
                                 std::to_string(fields.size()),
                             line_no);

        long long time = parse_integer(fields[0], name + ": time", line_no);
        if (time < 0) throw ParseError(name + ": negative time index", line_no);
        if (open && time < pending.time)
            throw ParseError(name + ": record out of order (time " + std::to_string(time) +
                                 " after " + std::to_string(pending.time) + ")",
                             line_no);
        if (open && time > pending.time) {
            snapshots.push_back(finish(std::move(pending)));
            pending = PendingSnapshot{};
            open = false;
        }
        if (!open) {
            pending.time = time;
            open = true;
        }

        long long node_a = parse_integer(fields[1], name + ": node-a", line_no);
        pending.add_node(node_a, label_or_sentinel(fields[2]), line_no);

        const bool isolated = fields[3] == "-";
        if (isolated) {
            if (fields[4] != "-" || fields[5] != "-")
                throw ParseError(name +
                                     ": isolated-node record must use \"-\" for all three "
                                     "node-b fields",
                                 line_no);
            continue;
        }
        long long node_b = parse_integer(fields[3], name + ": node-b", line_no);
        if (node_b == node_a) throw ParseError(name + ": self-loop edge", line_no);
        pending.add_node(node_b, label_or_sentinel(fields[4]), line_no);
        std::string edge_label = label_or_sentinel(fields[5]);
        auto key = std::make_tuple(std::min(node_a, node_b), std::max(node_a, node_b),
                                   edge_label);
        if (!pending.edge_keys.insert(key).second)
            throw ParseError(name + ": duplicate edge", line_no);
        pending.edges.emplace_back(node_a, node_b, std::move(edge_label));
    }
    if (!open) throw ParseError(name + ": no records", line_no);
    snapshots.push_back(finish(std::move(pending)));
    return snapshots;
}

std::vector<Snapshot> load_stream(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file", 0);
    return load_stream(in, path);
}

void write_stream(const std::vector<Snapshot>& snapshots, std::ostream& out) {
    out << kStreamHeader << '\n';
    for (const Snapshot& s : snapshots) {
        // Label fields: the no-label sentinel round-trips as an empty field.
        auto field = [](const std::string& label) {
            if (label.find_first_of("\t\r\n") != std::string::npos)
                throw std::invalid_argument(
                    "label contains a tab or newline and cannot be written as TSV");
            return label == kNoLabel ? std::string() : label;
        };
        for (int i = 0; i < s.node_count(); ++i) {
            if (s.degree(i) != 0) continue; // implied by an edge record
            out << s.time_index() << '\t' << s.node_id(i) << '\t' << field(s.node_label(i))
                << "\t-\t-\t-\n";
        }
        // Snapshot edges are already sorted by (u, v, label) on dense indices,
        // and dense index order is ascending external id.
        for (const Snapshot::Edge& e : s.edges()) {
            out << s.time_index() << '\t' << s.node_id(e.u) << '\t' << field(s.node_label(e.u))
                << '\t' << s.node_id(e.v) << '\t' << field(s.node_label(e.v)) << '\t'
                << field(s.label_text(e.label)) << '\n';
        }
    }
}

void write_stream(const std::vector<Snapshot>& snapshots, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path + ": cannot open file for writing", 0);
    write_stream(snapshots, out);
    out.flush();
    if (!out) throw ParseError(path + ": write failed", 0);
}

} // namespace evomine

