#include "monogen/thue.hpp"

#include <algorithm>

#include "monogen/errors.hpp"

namespace monogen {

namespace {

template <typename T>
T eval_box(const std::vector<T>& coeffs, T x, T y) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    T acc = 0;
    T xp = 1;
    std::vector<T> ypow(static_cast<std::size_t>(n) + 1);
    ypow[0] = 1;
    for (int i = 1; i <= n; ++i) ypow[static_cast<std::size_t>(i)] = ypow[static_cast<std::size_t>(i - 1)] * y;
    for (int i = n; i >= 0; --i) {
        acc += coeffs[static_cast<std::size_t>(i)] * xp * ypow[static_cast<std::size_t>(i)];
        xp *= x;
    }
    return acc;
}

template <typename T>
std::vector<std::pair<Int, Int>> scan(const std::vector<T>& coeffs, const T& target,
                                      bool absolute, long height, bool sign_identified) {
    std::vector<std::pair<Int, Int>> out;
    for (long x = -height; x <= height; ++x)
        for (long y = -height; y <= height; ++y) {
            T val = eval_box(coeffs, T(x), T(y));
            bool ok = absolute ? (val == target || val == -target) : (val == target);
            if (!ok) continue;
            if (sign_identified) {
                long first = (x != 0) ? x : y;
                if (first < 0) continue;
            }
            out.emplace_back(Int(x), Int(y));
        }
    return out;   // loop order is already ascending lexicographic
}

}

thue_solutions solve_box(const binary_form& f, const thue_target& target, long height,
                         bool sign_identified) {
    if (height < 0)
        throw precondition_failed("height must be nonnegative");
    const int n = f.degree();

    Int maxc = 0;
    for (const Int& v : f.c) maxc = std::max(maxc, Int(abs(v)));
    Int value_bound = maxc * (n + 1) * pow_int(Int(height), static_cast<unsigned>(n)) + abs(target.value);
    bool fits = value_bound < (Int(1) << 61);

    thue_solutions res;
    res.form = f;
    res.target = target;
    res.height = height;
    res.sign_identified = sign_identified;

    if (fits) {
        std::vector<long long> coeffs;
        coeffs.reserve(f.c.size());
        for (const Int& v : f.c) coeffs.push_back(static_cast<long long>(v));
        res.sols = scan(coeffs, static_cast<long long>(target.value), target.absolute, height, sign_identified);
    } else {
        res.sols = scan(f.c, target.value, target.absolute, height, sign_identified);
    }

    // hard ceilings from the underlying theory; exceeding one means the
    // computation (not the input) is wrong
    if (n == 3 && !target.absolute && target.value == 1 && res.sols.size() > 10 && discriminant(f) != 0)
        throw sanity_violation("cubic unit count exceeded the proven ceiling of 10");
    if (n == 4 && target.absolute && abs(target.value) == 1 && sign_identified && res.sols.size() > 276
        && discriminant(f) != 0)
        throw sanity_violation("quartic unit count exceeded the proven ceiling of 276");

    return res;
}

}
