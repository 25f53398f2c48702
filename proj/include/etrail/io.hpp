#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "etrail/timed_graph.hpp"

namespace etrail {

// Line-oriented instance file format (UTF-8, LF, '#' starts a comment):
//
//   et v1 <directed|undirected> <interval|cost>
//   n <token>                                   (optional; declares a node)
//   e <tail> <head> <lo>:<hi>                   (interval form)
//   e <tail> <head> -                           (edge that is never available)
//   e <tail> <head> <lo>:<hi> <c_lo>,...,<c_hi> (cost form)
//   budget <int>                                (cost form only, at most once)
//
// Edge ids are assigned by line order, starting at 1.  Node ids are assigned
// in order of first mention (n-lines first, then edge endpoints), so
// parse_instance(serialize_instance(g)) reproduces g exactly.
TimedGraph parse_instance(std::istream& in);
TimedGraph parse_instance_file(const std::string& path);
std::string serialize_instance(const TimedGraph& g);
void write_instance_file(const TimedGraph& g, const std::string& path);

// Strings file: one string per line; blank lines and '#'-comment lines are
// skipped; a trailing CR is stripped.
std::vector<std::string> parse_strings(std::istream& in);
std::vector<std::string> parse_strings_file(const std::string& path);

// Knowledge file: one "<kmer> <lo>:<hi>" per line ('-' for an empty
// interval); blank lines and '#'-comments skipped; duplicate k-mers rejected.
std::map<std::string, TimeInterval> parse_knowledge(std::istream& in);
std::map<std::string, TimeInterval> parse_knowledge_file(const std::string& path);

// Trail file:
//
//   trail v1
//   cost <int>
//   <edge id>        (one per line, in traversal order)
std::string serialize_trail(const TrailResult& trail);
void write_trail_file(const TrailResult& trail, const std::string& path);
std::pair<std::vector<EdgeId>, std::int64_t> parse_trail(std::istream& in);
std::pair<std::vector<EdgeId>, std::int64_t> parse_trail_file(const std::string& path);

}  // namespace etrail
