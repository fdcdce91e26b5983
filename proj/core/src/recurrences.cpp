#include "jointgf/recurrences.hpp"

#include <algorithm>

#include "jointgf/errors.hpp"

namespace jointgf {

std::vector<Integer> quadratic_recurrence_counts(const std::vector<Integer>& a,
                                                 const std::vector<Integer>& b,
                                                 const std::vector<Integer>& c,
                                                 int s_max) {
    if (s_max < 0)
        throw PreconditionError("s_max >= 0 violated");
    const std::size_t need = static_cast<std::size_t>(s_max) + 1;
    if (a.size() < need || b.size() < need || c.size() < need)
        throw PreconditionError("coefficient sequences shorter than s_max + 1");
    if (a[0] != 0)
        throw PreconditionError("a(0) = 0 violated");
    if (b[0] != -1)
        throw PreconditionError("b(0) = -1 violated");

    std::vector<Integer> f(need), fsq(need);
    f[0] = c[0];
    fsq[0] = f[0] * f[0];
    for (int s = 1; s <= s_max; ++s) {
        Integer value = c[static_cast<std::size_t>(s)];
        for (int i = 1; i <= s; ++i) {
            const Integer& bi = b[static_cast<std::size_t>(i)];
            if (bi != 0)
                value += bi * f[static_cast<std::size_t>(s - i)];
            const Integer& ai = a[static_cast<std::size_t>(i)];
            if (ai != 0)
                value += ai * fsq[static_cast<std::size_t>(s - i)];
        }
        f[static_cast<std::size_t>(s)] = value;
        Integer sq(0);
        for (int j = 0; j <= s; ++j)
            sq += f[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(s - j)];
        fsq[static_cast<std::size_t>(s)] = sq;
    }
    return f;
}

std::vector<Integer> convolve(const std::vector<Integer>& a,
                              const std::vector<Integer>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<Integer> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            if (b[j] != 0)
                r[i + j] += a[i] * b[j];
    }
    return r;
}

} // namespace jointgf
