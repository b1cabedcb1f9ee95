#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dwc {

// Weakly decreasing list of positive parts; a(i) reads 0 past the end.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    int a(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
    bool empty() const { return parts_.empty(); }

    std::string to_string() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// all partitions of n, reverse-lexicographic: (n), (n-1,1), ..., (1,...,1)
std::vector<Partition> partitions(int n);

}  // namespace dwc
