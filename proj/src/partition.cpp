#include "grasshodge/partition.hpp"

#include <algorithm>
#include <numeric>

namespace grasshodge {

Rectangle::Rectangle(std::int64_t width, std::int64_t height, std::int64_t max_side)
    : width_(width), height_(height) {
    if (width < 1 || height < 1) {
        throw DomainError("rectangle sides must be positive");
    }
    if (width > max_side || height > max_side) {
        throw DomainError("rectangle side exceeds limit " + std::to_string(max_side));
    }
}

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    for (std::size_t r = 0; r < parts_.size(); ++r) {
        if (parts_[r] < 0) {
            throw NegativePart("partition entry " + std::to_string(parts_[r]) +
                               " is negative");
        }
        if (r + 1 < parts_.size() && parts_[r] < parts_[r + 1]) {
            throw NotMonotone("parts must be non-increasing: " +
                              std::to_string(parts_[r]) + " < " +
                              std::to_string(parts_[r + 1]));
        }
    }
    // A zero before a positive entry is caught by the monotonicity check,
    // so all surviving entries are positive.
}

Partition Partition::fromSortedUnchecked(std::vector<std::int64_t> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    return p;
}

std::int64_t Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::int64_t Partition::part(std::int64_t r) const {
    if (r < 1 || r > rows()) return 0;
    return parts_[static_cast<std::size_t>(r - 1)];
}

std::int64_t Partition::columnLength(std::int64_t b) const {
    if (b < 1) return rows();
    // parts_ is non-increasing, so the rows with part >= b form a prefix.
    auto it = std::lower_bound(parts_.begin(), parts_.end(), b,
                               [](std::int64_t part, std::int64_t value) {
                                   return part >= value;
                               });
    return static_cast<std::int64_t>(it - parts_.begin());
}

bool Partition::contains(Box box) const {
    return box.row >= 1 && box.col >= 1 && box.row <= rows() &&
           box.col <= part(box.row);
}

Partition Partition::conjugate() const {
    std::vector<std::int64_t> conj(static_cast<std::size_t>(firstPart()), 0);
    for (std::int64_t part : parts_) {
        for (std::int64_t b = 0; b < part; ++b) {
            ++conj[static_cast<std::size_t>(b)];
        }
    }
    return fromSortedUnchecked(std::move(conj));
}

std::int64_t Partition::hookLength(Box box) const {
    if (!contains(box)) {
        throw OutOfDiagram("box (" + std::to_string(box.row) + "," +
                           std::to_string(box.col) + ") is outside the diagram");
    }
    return part(box.row) + columnLength(box.col) - box.row - box.col + 1;
}

std::int64_t Partition::semiperimeter() const {
    if (parts_.empty()) return 0;
    return firstPart() + rows();
}

bool Partition::isBounded(const Rectangle& rect) const {
    return firstPart() <= rect.width() && rows() <= rect.height();
}

Partition Partition::complement(const Rectangle& rect) const {
    if (!isBounded(rect)) {
        throw NotBounded("partition " + toString() + " does not fit in " +
                         std::to_string(rect.width()) + "x" +
                         std::to_string(rect.height()));
    }
    std::vector<std::int64_t> comp;
    comp.reserve(static_cast<std::size_t>(rect.height()));
    for (std::int64_t r = rect.height(); r >= 1; --r) {
        comp.push_back(rect.width() - part(r));
    }
    return Partition(std::move(comp));
}

bool Partition::containsPartition(const Partition& inner) const {
    if (inner.rows() > rows()) return false;
    for (std::int64_t r = 1; r <= inner.rows(); ++r) {
        if (inner.part(r) > part(r)) return false;
    }
    return true;
}

std::string Partition::toString() const {
    std::string out = "(";
    for (std::size_t r = 0; r < parts_.size(); ++r) {
        if (r > 0) out += ",";
        out += std::to_string(parts_[r]);
    }
    return out + ")";
}

Partition make_partition(std::vector<std::int64_t> parts) {
    return Partition(std::move(parts));
}

} // namespace grasshodge
