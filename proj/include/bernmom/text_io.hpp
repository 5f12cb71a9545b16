#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include <bernmom/chern.hpp>
#include <bernmom/spectrum.hpp>

namespace bernmom
{

// Spectrum file: "n <int>", then one "alpha <p/q> mult <p/q>" per line.
// Blank lines and text after '#' are ignored. Parse errors throw
// std::invalid_argument naming the line.
std::string format_spectrum(const Spectrum &s);
Spectrum parse_spectrum(std::istream &in);

// Chern file: "n <int>", then "partition j1,j2,... value <p/q>" lines.
std::string format_chern(const ChernData &x);
ChernData parse_chern(std::istream &in);

// "2:3,2:7" -> {(2,3), (2,7)}
std::vector<std::pair<long, long>> parse_puiseux(const std::string &text);

// "2,20,2"; every entry must be an integer.
std::vector<Integer> parse_integer_list(const std::string &text);

} // namespace bernmom
