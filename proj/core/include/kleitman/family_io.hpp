#pragma once

#include <string>

#include "kleitman/family.hpp"

namespace kleitman {

// Family file format: {"n": 3, "sets": [[], [1,2]]} with 1-based elements.
// write_family emits the canonical compact form (members in canonical order,
// elements ascending); read_family accepts any member order but rejects
// malformed JSON, out-of-range elements, repeated elements and duplicate sets.
std::string write_family(const Family& f);
Family read_family(const std::string& text);

Family read_family_file(const std::string& path);
void write_family_file(const Family& f, const std::string& path);

}  // namespace kleitman
