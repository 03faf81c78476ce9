#pragma once

#include <vector>

namespace superschur {

/// Dense integer matrix, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> entries;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, 0) {}

    long long at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
    long long& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }

    std::vector<long long> row(int r) const {
        return {entries.begin() + static_cast<std::size_t>(r) * cols,
                entries.begin() + static_cast<std::size_t>(r + 1) * cols};
    }

    bool operator==(const IntMatrix&) const = default;
};

} // namespace superschur
