#pragma once

#include <span>
#include <vector>

namespace minircc {

/// Sizes and alignments of the basic data types on the target, plus its
/// endianness. The pseudo-assembly target never inspects byte order, but
/// the flag travels with the metrics as real back ends expect.
struct Metrics {
    struct Entry {
        int size = 0;
        int align = 0;
    };

    Entry char_m, short_m, int_m, long_m, float_m, double_m, pointer_m;
    bool little_endian = true;

    static Metrics bits32();
    static Metrics bits64();
};

struct RecordLayout {
    int size = 0;
    int align = 0;
    std::vector<int> offsets;  // one per field, declaration order
};

/// Lays out a record from its fields' already-computed sizes and
/// alignments: each offset is rounded up to the field's alignment, the
/// record alignment is the maximum field alignment, and the record size is
/// rounded up to that alignment.
RecordLayout layout_record(std::span<const Metrics::Entry> fields);

}  // namespace minircc
