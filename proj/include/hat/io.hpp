#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hat/action.hpp"
#include "hat/graph.hpp"
#include "hat/perm.hpp"

namespace hat {

// "HATGRAPH v1": header line, then "n m", then m lines "u v" with u < v,
// written in lexicographic order. parse(serialize(g)) is byte-identical for
// canonical files.
std::string write_hatgraph(const Graph& g);
Graph read_hatgraph(std::istream& in);
Graph read_hatgraph_string(const std::string& text);
Graph read_hatgraph_file(const std::string& path);
void write_hatgraph_file(const Graph& g, const std::string& path);

// "HATPERMS v1": header line, the degree, then one permutation per line as
// space-separated image sequences.
std::string write_hatperms(const std::vector<Permutation>& perms);
std::vector<Permutation> read_hatperms(std::istream& in);
std::vector<Permutation> read_hatperms_string(const std::string& text);
std::vector<Permutation> read_hatperms_file(const std::string& path);
void write_hatperms_file(const std::vector<Permutation>& perms, const std::string& path);

// DOT export; the overload with an orientation emits a digraph.
std::string write_dot(const Graph& g);
std::string write_dot(const Graph& g, const Orientation& o);

} // namespace hat
