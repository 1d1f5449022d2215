#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "spex/graph.hpp"

namespace spex {

struct graph6_error : std::runtime_error {
  graph6_error(const std::string& msg, size_t offset);
  size_t offset;
};

std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& text);

}  // namespace spex
