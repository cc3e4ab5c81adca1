#ifndef EVOMINE_STREAM_IO_HPP
#define EVOMINE_STREAM_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "evomine/graph.hpp"

namespace evomine {

// Stream file format (tab-separated, one record per line):
//
//   # evomine-stream v1
//   <time>\t<node-a>\t<label-a>\t<node-b>\t<label-b>\t<edge-label>
//
// The header line is mandatory and exact. Records must be sorted by time;
// all records sharing a time form one snapshot. An isolated node is written
// with the three node-b fields set to "-". An empty label field stands for
// the no-label sentinel.
inline const std::string kStreamHeader = "# evomine-stream v1";

// Throws ParseError (with 1-based line number) on: unreadable file, missing
// or wrong header, malformed record, unsorted time, node-label conflict
// inside a snapshot, duplicate (endpoints, label) edge inside a snapshot,
// or a file with no records.
std::vector<Snapshot> load_stream(const std::string& path);
std::vector<Snapshot> load_stream(std::istream& in, const std::string& name);

// Writes the normalized form: header, then per snapshot the isolated-node
// records in ascending node id followed by edge records sorted by
// (smaller id, larger id, edge label). load_stream(write_stream(s)) == s and
// write_stream is a fixed point on its own output.
void write_stream(const std::vector<Snapshot>& snapshots, const std::string& path);
void write_stream(const std::vector<Snapshot>& snapshots, std::ostream& out);

} // namespace evomine

#endif
