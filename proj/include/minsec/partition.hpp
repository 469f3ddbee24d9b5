#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "minsec/rational.hpp"

namespace minsec {

// Young diagrams are used in two conventions in this domain: a list of row
// lengths or a list of column lengths. Mixing them silently is the classic
// source of wrong multiplicity tables, so the tag is mandatory and public
// operations reject mismatches.
enum class Convention { Rows, Columns };

inline std::string to_string(Convention c) { return c == Convention::Rows ? "rows" : "columns"; }

class Partition {
public:
    Partition() : conv_(Convention::Rows) {}

    Partition(std::vector<int> parts, Convention conv) : parts_(std::move(parts)), conv_(conv) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("negative part in partition");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    static Partition rows(std::vector<int> parts) { return Partition(std::move(parts), Convention::Rows); }
    static Partition columns(std::vector<int> parts) { return Partition(std::move(parts), Convention::Columns); }

    const std::vector<int>& parts() const { return parts_; }
    Convention convention() const { return conv_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }

    int part(int i) const {  // 1-based, 0 beyond the end
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    // Conjugate diagram, same convention tag.
    Partition transpose() const {
        std::vector<int> t;
        if (!parts_.empty()) {
            t.assign(static_cast<std::size_t>(parts_[0]), 0);
            for (int p : parts_)
                for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
        }
        return Partition(std::move(t), conv_);
    }

    // Reread the same numbers in the other convention: this names the
    // transposed diagram without touching the parts.
    Partition reinterpreted() const {
        Partition p = *this;
        p.conv_ = conv_ == Convention::Rows ? Convention::Columns : Convention::Rows;
        return p;
    }

    // Same geometric diagram expressed in the requested convention.
    Partition converted_to(Convention c) const { return conv_ == c ? *this : transpose().reinterpreted(); }

    void require(Convention c, const char* where) const {
        if (conv_ != c)
            throw std::invalid_argument(std::string(where) + ": expected " + minsec::to_string(c) +
                                        " convention, got " + minsec::to_string(conv_));
    }

    friend auto operator<=>(const Partition& a, const Partition& b) {
        if (auto c = a.conv_ <=> b.conv_; c != 0) return c;
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Partition& a, const Partition& b) = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        s += ")";
        return s;
    }

private:
    std::vector<int> parts_;
    Convention conv_;
};

// Each row multiplied by a constant.
inline Partition multiply_rows(const Partition& p, int l) {
    p.require(Convention::Rows, "multiply_rows");
    if (l < 0) throw std::invalid_argument("multiply_rows: negative multiplier");
    std::vector<int> parts = p.parts();
    for (int& x : parts) x *= l;
    return Partition::rows(std::move(parts));
}

// Dimension of the irreducible representation of GL(d) with highest weight p
// (Weyl product formula); zero when the diagram has more than d rows.
inline Integer gl_dimension(const Partition& p, int d) {
    p.require(Convention::Rows, "gl_dimension");
    if (d < 1) throw std::invalid_argument("gl_dimension: rank must be positive");
    if (p.length() > d) return 0;
    Integer num = 1, den = 1;
    for (int i = 1; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) {
            num *= p.part(i) - p.part(j) + j - i;
            den *= j - i;
        }
    }
    Integer q = num / den;
    if (q * den != num) throw std::logic_error("gl_dimension: non-integral Weyl quotient");
    return q;
}

// All partitions of n with at most max_parts parts, each at most max_part.
inline std::vector<std::vector<int>> partitions_of(int n, int max_parts, int max_part = -1) {
    if (max_part < 0) max_part = n;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int bound, int slots) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        if (slots == 0) return;
        for (int p = std::min(rest, bound); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, n, std::min(max_part, n), max_parts);
    return out;
}

// Map from diagram to multiplicity; the result type of every decomposition
// computation. Zero multiplicities are never stored.
class IsotypicTable {
public:
    IsotypicTable() : conv_(Convention::Rows) {}
    explicit IsotypicTable(Convention conv, std::string ambient = "") : conv_(conv), ambient_(std::move(ambient)) {}

    Convention convention() const { return conv_; }
    const std::string& ambient() const { return ambient_; }
    void set_ambient(std::string a) { ambient_ = std::move(a); }

    void add(const Partition& p, long long mult) {
        p.require(conv_, "IsotypicTable::add");
        if (mult == 0) return;
        auto it = entries_.find(p);
        long long m = (it == entries_.end() ? 0 : it->second) + mult;
        if (m == 0)
            entries_.erase(p);
        else
            entries_[p] = m;
    }

    long long multiplicity(const Partition& p) const {
        Partition q = p.converted_to(conv_);
        auto it = entries_.find(q);
        return it == entries_.end() ? 0 : it->second;
    }

    const std::map<Partition, long long>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // Every diagram transposed, tag preserved.
    IsotypicTable transposed_diagrams() const {
        IsotypicTable t(conv_, ambient_);
        for (const auto& [p, m] : entries_) t.add(p.transpose(), m);
        return t;
    }

    Integer total_dimension(int rank) const {
        Integer s = 0;
        for (const auto& [p, m] : entries_) s += Integer(m) * gl_dimension(p.converted_to(Convention::Rows), rank);
        return s;
    }

    friend bool operator==(const IsotypicTable& a, const IsotypicTable& b) {
        return a.conv_ == b.conv_ && a.entries_ == b.entries_;
    }

private:
    Convention conv_;
    std::string ambient_;
    std::map<Partition, long long> entries_;
};

}  // namespace minsec
