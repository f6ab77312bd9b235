#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyprod {

// Hard cap on the ambient vertex count: subsets of [m] live in one 64-bit word.
inline constexpr int kMaxVertices = 63;

/* A subset of {1, ..., m}, stored as a bitset. Vertex v occupies bit v-1.
 * The ambient m is not stored here; containers that need it carry it
 * alongside. */
class VertexSet {
public:
    constexpr VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t raw) : bits_(raw) {}

    static VertexSet of(std::initializer_list<int> vs) {
        return of(std::vector<int>(vs));
    }

    static VertexSet of(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s = s.with(v);
        return s;
    }

    // {1, ..., m}
    static VertexSet full(int m) {
        if (m < 0 || m > kMaxVertices)
            throw std::invalid_argument("vertex count out of range");
        if (m == 0) return VertexSet();
        return VertexSet((~std::uint64_t{0}) >> (64 - m));
    }

    std::uint64_t raw() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    // dim of the simplex spanned by this set; -1 for the empty simplex
    int dim() const { return size() - 1; }

    bool contains(int v) const {
        return v >= 1 && v <= kMaxVertices && ((bits_ >> (v - 1)) & 1u);
    }

    VertexSet with(int v) const {
        if (v < 1 || v > kMaxVertices)
            throw std::invalid_argument("vertex out of range 1..63");
        return VertexSet(bits_ | (std::uint64_t{1} << (v - 1)));
    }

    VertexSet without(int v) const {
        if (v < 1 || v > kMaxVertices) return *this;
        return VertexSet(bits_ & ~(std::uint64_t{1} << (v - 1)));
    }

    bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    int min_vertex() const {  // 0 when empty
        return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
    }

    int max_vertex() const {  // 0 when empty
        return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_);
    }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }
    // raw-value order; see lex_less for the order used in canonical facet lists
    friend bool operator<(VertexSet a, VertexSet b) { return a.bits_ < b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

/* Lexicographic order on the sorted vertex sequences, e.g.
 * {1,2,4} < {1,3} and {1} < {1,2}. This is the order canonical facet
 * lists are kept in. Distinct from raw bitmask order. */
inline bool lex_less(VertexSet a, VertexSet b) {
    std::uint64_t x = a.raw(), y = b.raw();
    while (x && y) {
        int va = std::countr_zero(x), vb = std::countr_zero(y);
        if (va != vb) return va < vb;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

inline std::string to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s.vertices()) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

}  // namespace polyprod
