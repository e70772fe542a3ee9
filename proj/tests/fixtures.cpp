#include "fixtures.hpp"

namespace fixtures {

using namespace orthoseq;

const ExactTable& exact60() {
    static const ExactTable t = exact_coefficients(60);
    return t;
}

const ExactTable& exact540() {
    static const ExactTable t = exact_coefficients(540);
    return t;
}

const BallTable& ball200() {
    static const BallTable t = ball_coefficients(200);
    return t;
}

const BallTable& ball2000() {
    static const BallTable t = ball_coefficients(2000);
    return t;
}

} // namespace fixtures
