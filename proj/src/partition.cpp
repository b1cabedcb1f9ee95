#include "dwc/partition.hpp"

#include <stdexcept>

namespace dwc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void fill(int n, int maxp, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(n, maxp); k >= 1; --k) {
        cur.push_back(k);
        fill(n - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions of a negative number");
    std::vector<Partition> out;
    std::vector<int> cur;
    fill(n, n, cur, out);
    return out;
}

}  // namespace dwc
