#pragma once

#include <string>
#include <vector>

#include "hadamard/family.hpp"

// Embedded difference families behind every explicit construction this
// toolkit reproduces, in the exact form they are published: explicit
// element lists for the order-276 family, orbit representatives plus
// subgroup for the order-292 and order-372 families. Orbit-compressed
// entries are expanded on access, so transcriptions stay auditable and
// every entry is re-verified by the test suite rather than trusted.

namespace hadamard {

enum class EntryKind { two_block_piece, gs_family, propus_family };
enum class MatrixClass { none, skew, symmetric };

const char* kind_name(EntryKind k);
const char* class_name(MatrixClass c);

struct CatalogEntry {
    std::string id;
    EntryKind kind;
    std::string provenance;
    int expected_order;          // 4v for buildable families, 0 for pieces
    MatrixClass expected_class;  // none for pieces
};

// All embedded entries, in a fixed order.
std::vector<CatalogEntry> list_entries();

bool has_entry(const std::string& id);

// Fully expanded blocks and tags. Throws std::out_of_range on unknown ids.
DifferenceFamily get_family(const std::string& id);

CatalogEntry get_entry(const std::string& id);

}  // namespace hadamard
