#pragma once

#include "orbitlift/hermitian.hpp"

namespace orbitlift {

/// gamma = {X, H, Y} with [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H, all three in
/// the isometry Lie algebra of the module.
struct Sl2Triple {
    ModulePtr module;
    DMatrix X, H, Y;
};

/// Validating factory; throws invalid_triple_error on a broken triple and
/// membership_error when a member is not in g.
inline Sl2Triple make_sl2_triple(const ModulePtr& v, DMatrix x, DMatrix h, DMatrix y) {
    for (const DMatrix* m : {&x, &h, &y})
        if (!is_lie_algebra_element(*m, v))
            throw membership_error("sl2 triple member is not in the isometry Lie algebra");
    if (bracket(h, x) != Rational(2) * x || bracket(h, y) != Rational(-2) * y ||
        bracket(x, y) != h)
        throw invalid_triple_error("sl2 bracket relations fail");
    return Sl2Triple{v, std::move(x), std::move(h), std::move(y)};
}

} // namespace orbitlift
