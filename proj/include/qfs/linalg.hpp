#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qfs/modulus.hpp"

namespace qfs {

// Sparse row over F_p: (column, coefficient) pairs sorted by column,
// no zero coefficients.
using SparseRow = std::vector<std::pair<uint32_t, uint64_t>>;

// r -= c * s (mod p), both sorted
SparseRow row_axpy(const SparseRow& r, uint64_t c, const SparseRow& s, const Modulus& mod);

// Incremental row-echelon form over F_p with optional history tracking: each
// inserted row is reduced against the current pivots; a row that reduces to
// zero is reported together with its expression over the previously inserted
// rows (the kernel combination).
class Eliminator {
public:
    explicit Eliminator(Modulus mod, bool track_history = false)
        : mod_(mod), track_(track_history) {}

    struct Result {
        bool reduced_to_zero;
        SparseRow history;  // combination over input indices; valid when tracking
    };

    // inserts the row as input index = number of rows added so far
    Result add_row(SparseRow row);

    // reduce a row against the pivots without inserting it
    SparseRow reduce(SparseRow row) const;

    size_t rank() const { return pivots_.size(); }
    size_t rows_added() const { return added_; }

private:
    struct PivotRow {
        SparseRow row;      // leading coefficient normalized to 1
        SparseRow history;
    };

    Modulus mod_;
    bool track_;
    size_t added_ = 0;
    std::unordered_map<uint32_t, uint32_t> lead_;  // leading column -> index in pivots_
    std::vector<PivotRow> pivots_;
};

}  // namespace qfs
