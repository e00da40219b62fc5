#include "hadamard/catalog.hpp"

#include <stdexcept>

namespace hadamard {

namespace {

struct RawBlock {
    BlockTag tag = BlockTag::none;
    std::vector<int> data;  // elements, or orbit representatives
    bool orbit = false;     // expand data through the entry subgroup
    int same_as = -1;       // copy of an earlier block in this entry
};

struct RawEntry {
    const char* id;
    EntryKind kind;
    int v;
    int lambda;
    MatrixClass cls;
    const char* provenance;
    std::vector<int> subgroup;  // nonempty iff some block is orbit-compressed
    std::vector<RawBlock> blocks;
};

const std::vector<RawEntry>& raw_entries() {
    static const std::vector<RawEntry> entries = {
        {"szekeres-69",
         EntryKind::two_block_piece,
         69,
         33,
         MatrixClass::none,
         "Szekeres difference sets, first block skew",
         {},
         {{BlockTag::skew,
           {1,  2,  6,  7,  9,  13, 14, 16, 17, 18, 21, 27, 31, 34, 36, 37, 39,
            40, 41, 43, 44, 45, 46, 47, 49, 50, 54, 57, 58, 59, 61, 64, 65, 66},
           false,
           -1},
          {BlockTag::symmetric,
           {1,  4,  5,  7,  9,  10, 11, 12, 15, 17, 18, 19, 24, 26, 27, 28, 30,
            39, 41, 42, 43, 45, 50, 51, 52, 54, 57, 58, 59, 60, 62, 64, 65, 68},
           false,
           -1}}},
        {"doptimal-69-1",
         EntryKind::two_block_piece,
         69,
         24,
         MatrixClass::none,
         "two-circulant D-optimal design pair of order 138",
         {},
         {{BlockTag::none,
           {0,  1,  3,  4,  6,  9,  10, 11, 13, 14, 17, 18, 20, 22, 26, 28,
            29, 32, 33, 34, 39, 41, 43, 45, 46, 48, 51, 59, 60, 62, 63},
           false,
           -1},
          {BlockTag::none,
           {0,  2,  3,  4,  8,  9,  10, 11, 12, 15, 16, 17, 21, 25,
            26, 32, 33, 35, 36, 37, 39, 41, 46, 51, 54, 57, 59},
           false,
           -1}}},
        {"skew-276-1",
         EntryKind::gs_family,
         69,
         57,
         MatrixClass::skew,
         "Szekeres pair joined with a D-optimal pair",
         {},
         {{BlockTag::skew,
           {1,  2,  6,  7,  9,  13, 14, 16, 17, 18, 21, 27, 31, 34, 36, 37, 39,
            40, 41, 43, 44, 45, 46, 47, 49, 50, 54, 57, 58, 59, 61, 64, 65, 66},
           false,
           -1},
          {BlockTag::symmetric,
           {1,  4,  5,  7,  9,  10, 11, 12, 15, 17, 18, 19, 24, 26, 27, 28, 30,
            39, 41, 42, 43, 45, 50, 51, 52, 54, 57, 58, 59, 60, 62, 64, 65, 68},
           false,
           -1},
          {BlockTag::none,
           {0,  1,  3,  4,  6,  9,  10, 11, 13, 14, 17, 18, 20, 22, 26, 28,
            29, 32, 33, 34, 39, 41, 43, 45, 46, 48, 51, 59, 60, 62, 63},
           false,
           -1},
          {BlockTag::none,
           {0,  2,  3,  4,  8,  9,  10, 11, 12, 15, 16, 17, 21, 25,
            26, 32, 33, 35, 36, 37, 39, 41, 46, 51, 54, 57, 59},
           false,
           -1}}},
        {"skew-292-1",
         EntryKind::gs_family,
         73,
         63,
         MatrixClass::skew,
         "orbit unions under the order-9 subgroup of Z_73*",
         {1, 2, 4, 8, 16, 32, 37, 55, 64},
         {{BlockTag::skew, {5, 9, 11, 25}, true, -1},
          {BlockTag::none, {11, 13, 17, 25}, true, -1},
          {BlockTag::none, {5, 9, 13, 17}, true, -1},
          {BlockTag::none, {0, 1, 3, 13}, true, -1}}},
        {"sym-372-1",
         EntryKind::propus_family,
         93,
         75,
         MatrixClass::symmetric,
         "orbit unions under the subgroup {1,25,67} of Z_93*",
         {1, 25, 67},
         {{BlockTag::symmetric, {0, 1, 3, 4, 9, 11, 16, 17, 18, 20, 26, 31, 40, 44, 48, 55, 62}, true, -1},
          {BlockTag::none, {2, 3, 9, 13, 16, 20, 22, 29, 31, 36, 43, 44, 48, 51, 62}, true, -1},
          {BlockTag::none, {}, false, 1},
          {BlockTag::none, {1, 2, 3, 8, 10, 13, 17, 26, 31, 36, 37, 40, 43, 51, 62}, true, -1}}},
        {"sym-372-2",
         EntryKind::propus_family,
         93,
         75,
         MatrixClass::symmetric,
         "orbit unions under the subgroup {1,25,67} of Z_93*",
         {1, 25, 67},
         {{BlockTag::symmetric, {0, 6, 8, 12, 13, 16, 17, 22, 24, 31, 33, 36, 40, 44, 47, 51, 62}, true, -1},
          {BlockTag::none, {1, 4, 5, 6, 9, 11, 13, 20, 31, 33, 44, 48, 51, 55, 62}, true, -1},
          {BlockTag::none, {}, false, 1},
          {BlockTag::none, {1, 3, 5, 6, 8, 11, 17, 18, 22, 26, 31, 37, 40, 55, 62}, true, -1}}},
        {"sym-372-3",
         EntryKind::propus_family,
         93,
         75,
         MatrixClass::symmetric,
         "orbit unions under the subgroup {1,25,67} of Z_93*",
         {1, 25, 67},
         {{BlockTag::symmetric, {0, 2, 6, 8, 12, 17, 20, 22, 24, 31, 33, 36, 40, 43, 51, 55, 62}, true, -1},
          {BlockTag::none, {1, 2, 3, 5, 8, 9, 10, 13, 16, 24, 29, 31, 51, 55, 62}, true, -1},
          {BlockTag::none, {}, false, 1},
          {BlockTag::none, {1, 4, 5, 6, 9, 12, 13, 20, 22, 31, 36, 43, 47, 51, 62}, true, -1}}},
        {"sym-372-4",
         EntryKind::propus_family,
         93,
         75,
         MatrixClass::symmetric,
         "orbit unions under the subgroup {1,25,67} of Z_93*",
         {1, 25, 67},
         {{BlockTag::symmetric, {0, 1, 2, 6, 9, 10, 12, 16, 26, 29, 31, 33, 36, 43, 44, 48, 62}, true, -1},
          {BlockTag::none, {2, 4, 5, 6, 13, 16, 29, 31, 33, 36, 40, 43, 44, 51, 62}, true, -1},
          {BlockTag::none, {}, false, 1},
          {BlockTag::none, {1, 3, 6, 8, 9, 12, 13, 17, 20, 22, 31, 43, 51, 55, 62}, true, -1}}},
        {"gs-12",
         EntryKind::gs_family,
         3,
         0,
         MatrixClass::skew,
         "derived demo",
         {},
         {{BlockTag::skew, {1}, false, -1},
          {BlockTag::none, {1}, false, -1},
          {BlockTag::none, {1}, false, -1},
          {BlockTag::none, {}, false, -1}}},
        {"propus-12",
         EntryKind::propus_family,
         3,
         0,
         MatrixClass::symmetric,
         "derived demo",
         {},
         {{BlockTag::symmetric, {0}, false, -1},
          {BlockTag::none, {1}, false, -1},
          {BlockTag::none, {1}, false, -1},
          {BlockTag::none, {}, false, -1}}},
    };
    return entries;
}

const RawEntry& find_raw(const std::string& id) {
    for (const RawEntry& e : raw_entries()) {
        if (id == e.id) return e;
    }
    throw std::out_of_range("unknown catalog id: " + id);
}

CatalogEntry describe(const RawEntry& e) {
    return {e.id, e.kind, e.provenance,
            e.kind == EntryKind::two_block_piece ? 0 : 4 * e.v, e.cls};
}

}  // namespace

const char* kind_name(EntryKind k) {
    switch (k) {
        case EntryKind::two_block_piece: return "two-block-piece";
        case EntryKind::gs_family: return "gs-family";
        case EntryKind::propus_family: return "propus-family";
    }
    return "?";
}

const char* class_name(MatrixClass c) {
    switch (c) {
        case MatrixClass::none: return "-";
        case MatrixClass::skew: return "skew";
        case MatrixClass::symmetric: return "symmetric";
    }
    return "?";
}

std::vector<CatalogEntry> list_entries() {
    std::vector<CatalogEntry> out;
    out.reserve(raw_entries().size());
    for (const RawEntry& e : raw_entries()) out.push_back(describe(e));
    return out;
}

bool has_entry(const std::string& id) {
    for (const RawEntry& e : raw_entries()) {
        if (id == e.id) return true;
    }
    return false;
}

CatalogEntry get_entry(const std::string& id) { return describe(find_raw(id)); }

DifferenceFamily get_family(const std::string& id) {
    const RawEntry& e = find_raw(id);
    const Modulus v(e.v);
    std::vector<Block> blocks;
    std::vector<BlockTag> tags;
    for (const RawBlock& rb : e.blocks) {
        if (rb.same_as >= 0) {
            blocks.push_back(blocks[static_cast<std::size_t>(rb.same_as)]);
        } else if (rb.orbit) {
            blocks.push_back(expand_orbits({v, e.subgroup, rb.data}));
        } else {
            blocks.push_back(Block::from_elements(v, rb.data));
        }
        tags.push_back(rb.tag);
    }
    return DifferenceFamily::from_blocks(std::move(blocks), e.lambda, std::move(tags));
}

}  // namespace hadamard
