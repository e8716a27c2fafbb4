#pragma once

// Nonempty intersections of subfamilies of union pieces, the index set of
// every inclusion–exclusion sum in the library.

#include "polycurv/polyhedron.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polycurv {

inline constexpr std::size_t default_piece_cap = 20;

inline void check_piece_cap(std::size_t count, std::size_t cap, const char* what)
{
    if (count > cap)
        throw Error(std::string("inclusion-exclusion over ") + std::to_string(count) + " " + what +
                    " exceeds the cap of " + std::to_string(cap) +
                    "; refine the representation into fewer overlapping pieces");
}

/// Intersection of the pieces with the given (increasing) indices.
struct PieceIntersection {
    std::vector<std::size_t> indices;
    ConvexPolytope polytope;

    int sign() const { return indices.size() % 2 == 1 ? 1 : -1; }

    std::string label() const
    {
        std::string s = "{";
        for (std::size_t i = 0; i < indices.size(); ++i) s += (i ? "," : "") + std::to_string(indices[i]);
        return s + "}";
    }
};

/// All nonempty intersections, in depth-first order of index sets. A
/// subfamily is skipped as soon as a prefix of it is empty.
inline std::vector<PieceIntersection> nonempty_intersections(const Polyhedron& p, std::size_t cap = default_piece_cap)
{
    check_piece_cap(p.pieces().size(), cap, "pieces");
    std::vector<PieceIntersection> out;
    const auto& pieces = p.pieces();

    struct Frame {
        std::size_t out_index;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        out.push_back({{i}, pieces[i]});
        stack.push_back({out.size() - 1, i + 1});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next >= pieces.size()) {
                stack.pop_back();
                continue;
            }
            const std::size_t j = f.next++;
            auto meet = intersect(out[f.out_index].polytope, pieces[j]);
            if (!meet) continue;
            auto idx = out[f.out_index].indices;
            idx.push_back(j);
            out.push_back({std::move(idx), std::move(*meet)});
            stack.push_back({out.size() - 1, j + 1});
        }
    }
    return out;
}

}  // namespace polycurv
