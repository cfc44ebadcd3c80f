#pragma once

// Plain-text generator files:
//
//   # comment
//   n=4
//   1,2,3,0
//   1,0,2,3
//
// One permutation per line as comma-separated images. Blank lines and text after
// '#' are ignored. An optional first line `n=<degree>` fixes the degree; otherwise
// it is taken from the first permutation.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rootcluster/permgroup.hpp"

namespace rootcluster {

struct GeneratorFile {
  std::size_t degree = 0;
  std::vector<Perm> generators;
};

/// Throws DomainError with the offending line number on malformed input.
GeneratorFile parse_generators(std::istream& in);
GeneratorFile read_generator_file(const std::filesystem::path& path);

/// Inverse of parse_generators; always writes the `n=` header.
std::string format_generators(const GeneratorFile& file);

}  // namespace rootcluster
