#pragma once

// Partitions in the weakly increasing convention, skew shapes,
// horizontal / vertical strips, ribbons, shifted contents and the
// strip weights psi^h, psi^v and the ribbon weight theta.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "escalier/errors.hpp"
#include "escalier/laurent.hpp"

namespace escalier {

// weakly increasing list of nonnegative parts, explicit length
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) { validate(); }
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

    int size() const { return static_cast<int>(parts.size()); }
    int operator[](int i) const { return parts[i]; } // 0-based

    // pad with leading zeros to n parts
    Partition padded(int n) const {
        std::vector<int> p(std::max(0, n - size()), 0);
        p.insert(p.end(), parts.begin(), parts.end());
        return Partition(std::move(p));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts < b.parts;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + "]";
    }

private:
    void validate() const {
        int prev = 0;
        for (int p : parts) {
            if (p < prev) throw Error("partition parts must be weakly increasing");
            prev = p;
        }
        if (!parts.empty() && parts.front() < 0)
            throw Error("partition parts must be nonnegative");
    }
};

struct Box {
    int row, col; // 1-based, row 1 on top of the displayed diagram
    friend auto operator<=>(const Box&, const Box&) = default;
};

// outer/inner pair; inner is padded with leading zeros to the outer length
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner)
        : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (inner_.size() > outer_.size())
            throw Error("inner shape has more parts than outer");
        inner_ = inner_.padded(outer_.size());
        for (int i = 0; i < outer_.size(); ++i)
            if (inner_[i] > outer_[i])
                throw Error("inner shape is not contained in outer");
    }

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    bool contains(int row, int col) const {
        return row >= 1 && row <= outer_.size() && col > inner_[row - 1] &&
               col <= outer_[row - 1];
    }

    std::vector<Box> boxes() const {
        std::vector<Box> bs;
        for (int i = 1; i <= outer_.size(); ++i)
            for (int j = inner_[i - 1] + 1; j <= outer_[i - 1]; ++j)
                bs.push_back({i, j});
        return bs;
    }

    bool empty() const { return boxes().empty(); }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_, inner_;
};

enum class SkewClass { HorizontalStrip, VerticalStrip, Ribbon, Other };

inline std::set<SkewClass> classify_skew(const SkewShape& s) {
    // two boxes in a column kill the horizontal strip, two boxes in a row
    // kill the vertical strip, a full 2x2 block kills the ribbon
    bool horizontal = true, vertical = true, ribbon = true;
    for (const Box& b : s.boxes()) {
        if (s.contains(b.row + 1, b.col)) horizontal = false;
        if (s.contains(b.row, b.col + 1)) vertical = false;
        if (s.contains(b.row, b.col + 1) && s.contains(b.row + 1, b.col) &&
            s.contains(b.row + 1, b.col + 1))
            ribbon = false;
    }
    std::set<SkewClass> result;
    if (horizontal) result.insert(SkewClass::HorizontalStrip);
    if (vertical) result.insert(SkewClass::VerticalStrip);
    if (ribbon) result.insert(SkewClass::Ribbon);
    if (result.empty()) result.insert(SkewClass::Other);
    return result;
}

inline bool is_ribbon(const SkewShape& s) {
    return classify_skew(s).count(SkewClass::Ribbon) > 0;
}

// anti-diagonal numbering starting from 1 at the top-left box
inline int shifted_content(const SkewShape& s, Box b) {
    if (b.row < 1 || b.row > s.outer().size() || b.col < 1 ||
        b.col > s.outer()[b.row - 1])
        throw BoxOutOfShape("box is outside the outer diagram");
    return b.row + b.col - 1;
}

struct TerminalBox {
    Box box;
    bool above_another; // the box directly below is also in the ribbon
    friend auto operator<=>(const TerminalBox&, const TerminalBox&) = default;
};

// rightmost box of each nonempty row of a ribbon
inline std::vector<TerminalBox> terminal_boxes(const SkewShape& s) {
    if (!is_ribbon(s)) throw NotARibbon("skew shape is not a ribbon");
    std::vector<TerminalBox> ts;
    for (int i = 1; i <= s.outer().size(); ++i) {
        int last = s.outer()[i - 1];
        if (last > s.inner()[i - 1])
            ts.push_back({{i, last}, s.contains(i + 1, last)});
    }
    return ts;
}

// theta(zeta/mu): non-terminal box -> (x - y_c), terminal above another -> y_c,
// terminal not above another -> x, with c the shifted content
inline LaurentPoly theta_weight(const SkewShape& s, Variable xv) {
    if (!is_ribbon(s)) throw NotARibbon("skew shape is not a ribbon");
    LaurentPoly w(1);
    for (const Box& b : s.boxes()) {
        int c = shifted_content(s, b);
        bool terminal = !s.contains(b.row, b.col + 1);
        if (!terminal)
            w *= LaurentPoly(xv) - LaurentPoly(y(c));
        else if (s.contains(b.row + 1, b.col))
            w *= LaurentPoly(y(c));
        else
            w *= LaurentPoly(xv);
    }
    return w;
}

// psi^h(lambda/mu; r) = prod over the strip of (x - y_{i+j-1}) on the
// r-row padded display
inline LaurentPoly psi_h(const Partition& lambda, const Partition& mu, int r,
                         Variable xv) {
    if (lambda.size() > r) throw Error("lambda has more than r parts");
    SkewShape s(lambda.padded(r), mu.padded(r));
    if (classify_skew(s).count(SkewClass::HorizontalStrip) == 0)
        throw NotHorizontalStrip("lambda/mu is not a horizontal strip");
    LaurentPoly w(1);
    for (const Box& b : s.boxes())
        w *= LaurentPoly(xv) - LaurentPoly(y(shifted_content(s, b)));
    return w;
}

// psi^v(zeta/mu; r) = prod over the strip of y_{i+j-1} on the r-row display
inline LaurentPoly psi_v(const Partition& zeta, const Partition& mu, int r) {
    if (zeta.size() > r) throw Error("zeta has more than r parts");
    SkewShape s(zeta.padded(r), mu.padded(r));
    if (classify_skew(s).count(SkewClass::VerticalStrip) == 0)
        throw NotVerticalStrip("zeta/mu is not a vertical strip");
    LaurentPoly w(1);
    for (const Box& b : s.boxes()) w *= LaurentPoly(y(shifted_content(s, b)));
    return w;
}

} // namespace escalier
