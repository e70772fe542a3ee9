#include "orthoseq/signs.hpp"

#include <stdexcept>

namespace orthoseq {

namespace {

SignChangeReport from_signs(long n_max, const std::vector<int>& sign,
                            std::vector<long> ambiguous) {
    SignChangeReport r;
    r.n_max = n_max;
    r.ambiguous = std::move(ambiguous);
    for (long n = 0; n < n_max; ++n)
        if (sign[n] != 0 && sign[n + 1] != 0 && sign[n] != sign[n + 1])
            r.indices.push_back(n);
    r.includes_index_zero = !r.indices.empty() && r.indices.front() == 0;
    return r;
}

} // namespace

SignChangeReport detect_sign_changes(const BallTable& t) {
    const long n_max = t.n_max();
    std::vector<int> sign(static_cast<size_t>(n_max) + 1, 0);
    std::vector<long> ambiguous;
    for (long n = 0; n <= n_max; ++n) {
        sign[n] = t.coeffs[n].certified_sign();
        if (sign[n] == 0) ambiguous.push_back(n);
    }
    return from_signs(n_max, sign, std::move(ambiguous));
}

SignChangeReport detect_sign_changes(const ExactTable& t) {
    const long n_max = t.n_max();
    std::vector<int> sign(static_cast<size_t>(n_max) + 1, 0);
    std::vector<long> ambiguous;
    for (long n = 0; n <= n_max; ++n) {
        sign[n] = sgn(t.coeffs[n]);
        if (sign[n] == 0) ambiguous.push_back(n); // c_n != 0, but stay honest
    }
    return from_signs(n_max, sign, std::move(ambiguous));
}

RatioReport sign_change_ratios(const SignChangeReport& report) {
    std::vector<long> nonzero;
    for (long n : report.indices)
        if (n != 0) nonzero.push_back(n);
    if (nonzero.size() < 2)
        throw std::invalid_argument("sign_change_ratios: need at least two nonzero indices");
    RatioReport r;
    for (size_t i = 0; i + 1 < nonzero.size(); ++i) {
        r.pairs.emplace_back(nonzero[i], nonzero[i + 1]);
        r.ratios.push_back(static_cast<double>(nonzero[i + 1]) /
                           static_cast<double>(nonzero[i]));
    }
    return r;
}

} // namespace orthoseq
