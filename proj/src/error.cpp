#include "gbcore/error.hpp"

namespace gbcore {

std::string to_string(Dimensions d) {
    return std::to_string(d.nrows) + " x " + std::to_string(d.ncols);
}

DimensionMismatch::DimensionMismatch(const std::string& what, Dimensions expected, Dimensions actual)
    : Error(what + ": expected " + to_string(expected) + ", got " + to_string(actual)),
      expected_(expected),
      actual_(actual) {}

IndexOutOfBounds::IndexOutOfBounds(const std::string& what, Index index, Index bound)
    : Error(what + ": index " + std::to_string(index) + " out of bounds [0, " +
            std::to_string(bound) + ")"),
      index_(index),
      bound_(bound) {}

DuplicateEntry::DuplicateEntry(Index row, Index col)
    : Error("duplicate entry at (" + std::to_string(row) + ", " + std::to_string(col) + ")") {}

ParseError::ParseError(const std::string& path, std::size_t line, const std::string& message)
    : Error(path + ":" + std::to_string(line) + ": " + message), path_(path), line_(line) {}

}  // namespace gbcore
