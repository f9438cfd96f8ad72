#pragma once

// Table-ring input and the scan-based routines that work on raw operation
// tables. The scans never look at the coordinate decomposition, which makes
// them usable as independent checks of the canonical code path.

#include <cstddef>
#include <string>
#include <vector>

#include "zdg/ring.hpp"

namespace zdg::table {

/// Parses `{"size": n, "one": i, "add": [[..],..], "mul": [[..],..]}`. Flat
/// row-major arrays of length n*n are accepted too. Throws MalformedTable.
TableRing parse_json(const std::string& text);
TableRing load_file(const std::string& path);
std::string to_json(const TableRing& t);

/// Operation tables of Z_n (element i is the residue i).
TableRing modulus_table(std::uint32_t n);
/// Operation tables of F_{q_1} x ... x F_{q_k} in lexicographic tuple order.
TableRing product_table(const std::vector<std::uint32_t>& qs);

using ElementSet = std::vector<char>;  // indicator over table indices

std::size_t zero_of(const TableRing& t);
ElementSet annihilator(const TableRing& t, std::size_t a);
ElementSet annihilator(const TableRing& t, const ElementSet& I);
ElementSet principal_ideal(const TableRing& t, std::size_t a);
ElementSet ideal_sum(const TableRing& t, const ElementSet& I, const ElementSet& J);
bool is_prime_ideal(const TableRing& t, const ElementSet& I);

/// Every ideal, found by closing the principal ideals under sums. Sorted.
std::vector<ElementSet> all_ideals(const TableRing& t);
/// The prime ideals that contain no smaller prime ideal.
std::vector<ElementSet> minimal_primes(const TableRing& t);

}  // namespace zdg::table
