#pragma once

#include <vector>

#include "kostka/ints.hpp"

namespace kostka {

// Rank over Q of an integer matrix (rows of equal length), computed by
// fraction-free Gaussian elimination. Exact for any input; a fixed-width
// fast path is used when a Hadamard bound certifies it cannot overflow.
int integer_matrix_rank(std::vector<std::vector<Int>> rows);

}  // namespace kostka
