#include "lrgen/generic_ext.hpp"

namespace lrgen {

H1Object generic_extension(const H1Object& n, const H1Object& m) {
    return from_ext_tableau(star_ext(gamma_hat(m), gamma_hat(n)));
}

H1Object generic_extension_s1(const H1Object& n, const H1Object& m) {
    if (!n.in_s1())
        throw NotInS1("first argument has a P1^0 summand");
    if (!m.in_s1())
        throw NotInS1("second argument has a P1^0 summand");
    LRTableau z = star_lr1(gamma_hat(m).tab, gamma_hat(n).tab);
    return from_ext_tableau(ExtTableau(std::move(z), 0));
}

H1Object generic_extension_by_free(const H1Object& m, int n) {
    if (!m.in_s1())
        throw NotInS1("argument has a P1^0 summand");
    FillResult r = fill(gamma_hat(m).tab, n);
    return from_ext_tableau(ExtTableau(std::move(r.tab), r.leftover));
}

} // namespace lrgen
