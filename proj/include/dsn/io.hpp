#ifndef DSN_IO_HPP
#define DSN_IO_HPP

#include <iosfwd>
#include <string>

#include "dsn/graph.hpp"

namespace dsn {

// Line-oriented instance format ('#' starts a comment anywhere):
//   <variant> <n> <m> <k> [bidirected] [class=<any|planar|tw:W|polytree|cycle>]
//   m x: e <tail> <head> <weight>       weight is <int> or <int>/<int>
//   k x: d <s> <t>                      (scss also accepts one r <v1> <v2> ... line)
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);

std::string serialize_instance(const Instance& inst);

// Solution format: "cost <weight>" then one "e <edge-id>" line per edge.
Solution parse_solution(std::istream& in, const Graph& g, const Pattern& p);
Solution load_solution(const std::string& path, const Graph& g, const Pattern& p);
std::string serialize_solution(const Solution& sol);

void write_file(const std::string& path, const std::string& content);

}  // namespace dsn

#endif
