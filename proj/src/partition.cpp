#include "superschur/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace superschur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition parts must be nonnegative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::from_string(const std::string& text) {
    std::vector<int> parts;
    if (!text.empty()) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(item, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("invalid partition entry: '" + item + "'");
            }
            if (pos != item.size())
                throw std::invalid_argument("invalid partition entry: '" + item + "'");
            parts.push_back(v);
        }
    }
    return Partition(std::move(parts));
}

long long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::part(int i) const {
    if (i < 0) throw std::invalid_argument("negative part index");
    return i < length() ? parts_[i] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) conj[j]++;
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

bool is_hook(const Partition& lambda, int k, int l) {
    return lambda.part(k) <= l;
}

std::vector<long long> row_prefix_sums(const Partition& lambda, int k) {
    std::vector<long long> sums(k, 0);
    long long acc = 0;
    for (int r = 0; r < k; ++r) {
        acc += lambda.part(r);
        sums[r] = acc;
    }
    return sums;
}

std::vector<long long> col_prefix_sums(const Partition& lambda, int l) {
    return row_prefix_sums(lambda.conjugate(), l);
}

bool contains(const Partition& mu, const Partition& lambda) {
    for (int i = 0; i < mu.length(); ++i)
        if (mu.part(i) > lambda.part(i)) return false;
    return true;
}

bool dominates(const Partition& lambda, const Partition& mu) {
    long long sl = 0, sm = 0;
    int n = std::max(lambda.length(), mu.length());
    for (int i = 0; i < n; ++i) {
        sl += lambda.part(i);
        sm += mu.part(i);
        if (sm > sl) return false;
    }
    return true;
}

long long hook_region_cells(const Partition& lambda, int r, int s) {
    if (r < 0 || s < 0) throw std::invalid_argument("negative hook region");
    long long cells = 0;
    for (int i = 0; i < lambda.length(); ++i)
        cells += (i < r) ? lambda.part(i) : std::min(lambda.part(i), s);
    return cells;
}

namespace {

void gen_partitions(int rem, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (rem == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(rem, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(rem - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int m = 0; m <= n; ++m) {
        auto pm = partitions_of(m);
        out.insert(out.end(), pm.begin(), pm.end());
    }
    return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == lambda.length()) {
            out.emplace_back(cur);
            return;
        }
        int hi = lambda.part(i);
        if (i > 0) hi = std::min(hi, cur[i - 1]);
        for (int v = hi; v >= 0; --v) {
            cur.push_back(v);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace superschur
