#ifndef GRASSHODGE_PARTITION_HPP
#define GRASSHODGE_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "grasshodge/errors.hpp"

namespace grasshodge {

/// A cell of a partition diagram, 1-based: row a, column b.
struct Box {
    std::int64_t row = 1;
    std::int64_t col = 1;
};

/// Bounding rectangle with `width` columns and `height` rows.
/// In Grassmannian contexts width = k and height = n-k, so a partition
/// bounded by it has first part <= width and at most `height` parts.
class Rectangle {
public:
    static constexpr std::int64_t kDefaultMaxSide = 64;

    Rectangle(std::int64_t width, std::int64_t height,
              std::int64_t max_side = kDefaultMaxSide);

    [[nodiscard]] std::int64_t width() const { return width_; }
    [[nodiscard]] std::int64_t height() const { return height_; }
    [[nodiscard]] std::int64_t area() const { return width_ * height_; }

private:
    std::int64_t width_;
    std::int64_t height_;
};

/// Integer partition in canonical form: a non-increasing sequence of
/// positive parts, trailing zeros stripped.  The empty partition is the
/// unique size-0 value, so equality is structural.
///
/// Immutable after construction; all operations are pure.
class Partition {
public:
    Partition() = default;

    /// Validating constructor: strips trailing zeros, rejects negative
    /// entries (NegativePart) and out-of-order entries (NotMonotone).
    explicit Partition(std::vector<std::int64_t> parts);
    Partition(std::initializer_list<std::int64_t> parts)
        : Partition(std::vector<std::int64_t>(parts)) {}

    /// Wraps an already canonical parts vector without validation.
    /// For enumeration kernels that build rows in order.
    static Partition fromSortedUnchecked(std::vector<std::int64_t> parts);

    [[nodiscard]] const std::vector<std::int64_t>& parts() const { return parts_; }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] std::int64_t rows() const {
        return static_cast<std::int64_t>(parts_.size());
    }

    /// |lambda|, the number of cells.
    [[nodiscard]] std::int64_t size() const;

    /// Part at 1-based row r; 0 beyond the last row.
    [[nodiscard]] std::int64_t part(std::int64_t r) const;

    /// First part (0 for the empty partition).
    [[nodiscard]] std::int64_t firstPart() const {
        return parts_.empty() ? 0 : parts_.front();
    }

    /// Column length at 1-based column b: number of parts >= b.
    [[nodiscard]] std::int64_t columnLength(std::int64_t b) const;

    [[nodiscard]] bool contains(Box box) const;

    /// Transposed diagram.
    [[nodiscard]] Partition conjugate() const;

    /// Hook length lambda_a + lambda^T_b - a - b + 1 of a box inside the
    /// diagram; throws OutOfDiagram otherwise.
    [[nodiscard]] std::int64_t hookLength(Box box) const;

    /// lambda_1 + lambda^T_1; 0 for the empty partition.  For a nonempty
    /// partition this is hookLength({1,1}) + 1.
    [[nodiscard]] std::int64_t semiperimeter() const;

    [[nodiscard]] bool isBounded(const Rectangle& rect) const;

    /// 180-degree rotated set complement inside `rect`.  An involution for
    /// fixed rect; sizes add up to the rectangle area.
    [[nodiscard]] Partition complement(const Rectangle& rect) const;

    /// Pointwise containment: every row of `inner` fits inside this diagram.
    [[nodiscard]] bool containsPartition(const Partition& inner) const;

    /// "(5,5,2,1)" or "()".
    [[nodiscard]] std::string toString() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<std::int64_t> parts_;
};

/// Canonicalizing factory, same contract as the validating constructor.
Partition make_partition(std::vector<std::int64_t> parts);

} // namespace grasshodge

#endif
