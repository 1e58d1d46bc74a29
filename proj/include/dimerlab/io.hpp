#pragma once

#include <stdexcept>
#include <string>

#include "dimerlab/quiver.hpp"

namespace dimerlab {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// Line format, '#' comments, header "dimer 1":
//   vertex <id> [<x> <y>]
//   arrow <name> <tail> <head> (<dx>,<dy>)
//   face <+|-> <name> <name> ...
DimerQuiver parse_dimer(const std::string& text);
DimerQuiver parse_dimer_file(const std::string& path);

std::string serialize(const DimerQuiver& q);
void write_dimer_file(const DimerQuiver& q, const std::string& path);

}  // namespace dimerlab
