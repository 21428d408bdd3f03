#include "lrgen/star.hpp"

#include <algorithm>

namespace lrgen {

LRTableau star_lr1(const LRTableau& x, const LRTableau& y, StarTrace* trace) {
    const Partition& bx = x.beta();
    const Partition& gx = x.gamma();
    const Partition& by = y.beta();
    const Partition& gy = y.gamma();

    Partition gz = sum(gx, gy);

    const int len_x = bx.length(); // = dual(beta^X)_1
    const int len_y = by.length();
    const int common = std::min(len_x, len_y);

    std::vector<int> bz;
    std::vector<int> counters{0}; // counters[i] = n_i
    int n = 0;

    for (int i = 1; i <= common; ++i) {
        bz.push_back(bx.part(i) + gy.part(i));
        if (by.part(i) != gy.part(i))
            ++n;
        counters.push_back(n);
    }

    if (len_x > common) {
        for (int i = common + 1; i <= len_x; ++i) {
            bz.push_back(bx.part(i));
            counters.push_back(n);
        }
    } else {
        for (int i = common + 1; i <= len_y; ++i) {
            if (gy.part(i) == by.part(i) && n > 0) {
                bz.push_back(by.part(i) + 1);
                --n;
            } else {
                bz.push_back(by.part(i));
            }
            counters.push_back(n);
        }
    }

    Partition beta_z = union_parts(Partition(std::move(bz)),
                                   Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    if (trace) {
        trace->counters = std::move(counters);
        trace->appended_ones = n;
    }
    return make(std::move(gz), std::move(beta_z));
}

FillResult fill(const LRTableau& x, int n) {
    if (n < 0)
        throw Error("fill: budget must be non-negative");
    const Partition& bx = x.beta();
    const Partition& gx = x.gamma();

    std::vector<int> gz(static_cast<std::size_t>(bx.length()));
    for (int i = bx.length(); i >= 1; --i) {
        if (bx.part(i) == gx.part(i) && n > 0) {
            gz[static_cast<std::size_t>(i - 1)] = gx.part(i) - 1;
            --n;
        } else {
            gz[static_cast<std::size_t>(i - 1)] = gx.part(i);
        }
    }
    return {make(Partition(std::move(gz)), bx), n};
}

ExtTableau star_ext(const ExtTableau& xm, const ExtTableau& yn) {
    FillResult t = fill(xm.tab, yn.free);
    LRTableau z = star_lr1(t.tab, yn.tab);
    return ExtTableau(std::move(z), t.leftover + xm.free);
}

} // namespace lrgen
