#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace minsec {

// Variables are interned value types carrying a structured name: a kind tag
// plus a short index list (matrix position, weight index, Pluecker subset...).
// The total order on variables -- kind first, then indices -- is the declared
// variable order used for monomial comparison and canonical printing.
enum class VarKind : std::uint8_t {
    SymX,     // symmetric-function variable x_i           idx = [i]
    T,        // line parameter t                          idx = []
    Eps,      // deformation parameter                     idx = []
    CScale,   // undetermined scaling constant             idx = []
    Lambda,   // polarization slot variable                idx = [slot]
    NilA,     // entry of a generic nilpotent element      idx = [i, j]
    NilB,
    NilN,
    ChartX,   // affine chart coordinate, first system     idx = [tag, deg, payload...]
    ChartY,   // second system                             tag 0: payload = rows..., cols...
    ChartZ,   // third system                              tag 1: payload = sorted even index set
    Plucker,  // coordinate on a wedge power               idx = [s1 < ... < sk]
    Gen,      // anonymous variable for generic tests      idx = [i]
};

class Variable {
public:
    static constexpr int kMaxIdx = 12;

    Variable() : kind_(VarKind::Gen), len_(0) { idx_.fill(0); }

    Variable(VarKind kind, std::initializer_list<int> idx) : kind_(kind), len_(0) {
        idx_.fill(0);
        for (int v : idx) push_index(v);
    }

    template <typename Iter>
    Variable(VarKind kind, Iter first, Iter last) : kind_(kind), len_(0) {
        idx_.fill(0);
        for (; first != last; ++first) push_index(static_cast<int>(*first));
    }

    VarKind kind() const { return kind_; }
    int size() const { return len_; }
    int index(int i) const { return idx_[static_cast<std::size_t>(i)]; }

    friend auto operator<=>(const Variable& a, const Variable& b) {
        if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
        int n = a.len_ < b.len_ ? a.len_ : b.len_;
        for (int i = 0; i < n; ++i)
            if (auto c = a.idx_[static_cast<std::size_t>(i)] <=> b.idx_[static_cast<std::size_t>(i)]; c != 0) return c;
        return a.len_ <=> b.len_;
    }
    friend bool operator==(const Variable& a, const Variable& b) = default;

    std::string name() const;

private:
    void push_index(int v) {
        if (len_ >= kMaxIdx) throw std::invalid_argument("variable index list too long");
        if (v < -128 || v > 127) throw std::invalid_argument("variable index out of range");
        idx_[static_cast<std::size_t>(len_++)] = static_cast<std::int8_t>(v);
    }

    VarKind kind_;
    std::int8_t len_;
    std::array<std::int8_t, kMaxIdx> idx_;
};

namespace detail {
inline std::string join_indices(const Variable& v, int from, int to) {
    bool compact = true;
    for (int i = from; i < to; ++i)
        if (v.index(i) < 0 || v.index(i) > 9) compact = false;
    std::string s;
    for (int i = from; i < to; ++i) {
        if (!compact && i > from) s += ',';
        s += std::to_string(v.index(i));
    }
    return s;
}
}  // namespace detail

inline std::string Variable::name() const {
    using detail::join_indices;
    switch (kind_) {
        case VarKind::SymX: return "x" + join_indices(*this, 0, len_);
        case VarKind::T: return "t";
        case VarKind::Eps: return "eps";
        case VarKind::CScale: return "c";
        case VarKind::Lambda: return "L" + join_indices(*this, 0, len_);
        case VarKind::NilA: return "a" + join_indices(*this, 0, len_);
        case VarKind::NilB: return "b" + join_indices(*this, 0, len_);
        case VarKind::NilN: return "n" + join_indices(*this, 0, len_);
        case VarKind::ChartX:
        case VarKind::ChartY:
        case VarKind::ChartZ: {
            char c = kind_ == VarKind::ChartX ? 'x' : (kind_ == VarKind::ChartY ? 'y' : 'z');
            int tag = index(0), deg = index(1);
            std::string s(1, c);
            s += '{';
            if (tag == 0) {
                s += join_indices(*this, 2, 2 + deg);
                s += '|';
                s += join_indices(*this, 2 + deg, len_);
            } else {
                s += join_indices(*this, 2, len_);
            }
            s += '}';
            return s;
        }
        case VarKind::Plucker: return "p" + join_indices(*this, 0, len_);
        case VarKind::Gen: return "v" + join_indices(*this, 0, len_);
    }
    return "?";
}

inline Variable sym_x(int i) { return Variable(VarKind::SymX, {i}); }
inline Variable var_t() { return Variable(VarKind::T, {}); }
inline Variable var_eps() { return Variable(VarKind::Eps, {}); }
inline Variable var_c() { return Variable(VarKind::CScale, {}); }
inline Variable lambda_slot(int s) { return Variable(VarKind::Lambda, {s}); }
inline Variable gen_var(int i) { return Variable(VarKind::Gen, {i}); }

}  // namespace minsec
