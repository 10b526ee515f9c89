#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "gallai/colouring.hpp"

namespace gallai {

/// Malformed colouring or hypergraph file. line() is 1-based; 0 when the
/// problem is not tied to a single line (e.g. a missing edge).
class FormatError : public std::runtime_error {
public:
    FormatError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

inline constexpr const char* kColouringMagic = "gallai-colouring v1";
inline constexpr const char* kHypergraphMagic = "gallai-hypergraph v1";

/// Writes the text colouring format; data lines are emitted in colex order
/// straight from the dense array, so memory use is independent of n.
void encode(const EdgeColouring& c, std::ostream& out);
std::string encode(const EdgeColouring& c);

/// Parses and validates the text colouring format (data lines in any order).
EdgeColouring decode(std::istream& in);
EdgeColouring decode(const std::string& text);

void write_colouring_file(const EdgeColouring& c, const std::filesystem::path& path);
EdgeColouring read_colouring_file(const std::filesystem::path& path);

/// Hypergraph edge lists:
///   gallai-hypergraph v1
///   n=<int> r=<int> m=<int>
///   m lines of r increasing vertices
void encode_hypergraph(const Hypergraph& h, std::ostream& out);
Hypergraph decode_hypergraph(std::istream& in);

}  // namespace gallai
