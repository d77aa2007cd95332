#include <minircc/metrics.hpp>

#include <algorithm>

namespace minircc {

Metrics Metrics::bits32() {
    Metrics m;
    m.char_m = {1, 1};
    m.short_m = {2, 2};
    m.int_m = {4, 4};
    m.long_m = {4, 4};
    m.float_m = {4, 4};
    m.double_m = {8, 4};
    m.pointer_m = {4, 4};
    m.little_endian = true;
    return m;
}

Metrics Metrics::bits64() {
    Metrics m;
    m.char_m = {1, 1};
    m.short_m = {2, 2};
    m.int_m = {4, 4};
    m.long_m = {8, 8};
    m.float_m = {4, 4};
    m.double_m = {8, 8};
    m.pointer_m = {8, 8};
    m.little_endian = true;
    return m;
}

namespace {

int align_up(int value, int alignment) {
    if (alignment <= 1) return value;
    return (value + alignment - 1) / alignment * alignment;
}

}  // namespace

RecordLayout layout_record(std::span<const Metrics::Entry> fields) {
    RecordLayout out;
    int at = 0;
    for (const Metrics::Entry& f : fields) {
        at = align_up(at, f.align);
        out.offsets.push_back(at);
        at += f.size;
        out.align = std::max(out.align, f.align);
    }
    if (out.align == 0) out.align = 1;
    out.size = align_up(at, out.align);
    return out;
}

}  // namespace minircc
