#ifndef TIGHTLAT_IO_HPP_
#define TIGHTLAT_IO_HPP_

#include <string>

#include "tightlat/embedding.hpp"
#include "tightlat/lattice.hpp"
#include "tightlat/matroid.hpp"
#include "tightlat/partition.hpp"
#include "tightlat/pls.hpp"

namespace tightlat {

// Text formats. Every print_* output parses back to an equal object; '#'
// starts a comment, blank lines are skipped. Malformed input raises
// ParseError.
//
//   lattice <n>        pls                 graph <vertices>   matroid <dim>
//   <lower> <upper>    points 1 2 3 ...    <u> <v> <label>    <element> <bits>
//   ...                line a b c          ...                ...
//
// Matroid columns are bit strings of length dim, position i holding the
// coefficient of coordinate i+1. Partitions use the block shorthand "13|25|4";
// elements are comma-separated once the ground set reaches 10.

std::string print_lattice(const Lattice& l);
Lattice parse_lattice(const std::string& text);

std::string print_pls(const Pls& p);
Pls parse_pls(const std::string& text);

std::string print_graph(const LabeledGraph& g);
LabeledGraph parse_graph(const std::string& text);

std::string print_matroid(const BinaryMatroid& m);
BinaryMatroid parse_matroid(const std::string& text);

std::string print_partition(const Partition& p);
Partition parse_partition(const std::string& text);

// Display rendering of an embedding, one "element: partition" line per
// lattice element. Not a parsed format; files use the JSON form.
std::string print_embedding(const PartitionEmbedding& e);

// JSON mirrors. Output is canonical: fixed key order, two-space indent,
// trailing newline, so identical objects always serialize byte-identically.
std::string lattice_json(const Lattice& l);
Lattice lattice_from_json(const std::string& text);
std::string pls_json(const Pls& p);
Pls pls_from_json(const std::string& text);
std::string graph_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const std::string& text);
std::string matroid_json(const BinaryMatroid& m);
BinaryMatroid matroid_from_json(const std::string& text);

// The embedding file format. Parsing rebuilds the lattice and re-certifies,
// so a tampered map or certificate cannot survive a round trip.
std::string embedding_json(const PartitionEmbedding& e);
PartitionEmbedding embedding_from_json(const std::string& text);

std::string read_text_file(const std::string& path);   // ParseError if unreadable
void write_text_file(const std::string& path, const std::string& content);

}  // namespace tightlat

#endif  // TIGHTLAT_IO_HPP_
