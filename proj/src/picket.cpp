#include "lrgen/picket.hpp"

#include <algorithm>
#include <cctype>

namespace lrgen {

Picket::Picket(int eps_, int m_) : eps(eps_), m(m_) {
    if (eps != 0 && eps != 1)
        throw Error("Picket: eps must be 0 or 1");
    if (m < 0)
        throw Error("Picket: m must be non-negative");
    if (eps == 0 && m == 0)
        throw Error("Picket: P0^0 is the zero object");
}

bool picket_canonical_less(const Picket& a, const Picket& b) {
    if (a.m != b.m)
        return a.m > b.m;
    return a.eps > b.eps;
}

H1Object::H1Object(std::vector<Picket> pickets) : pickets_(std::move(pickets)) {
    std::sort(pickets_.begin(), pickets_.end(), picket_canonical_less);
}

int H1Object::a() const {
    int count = 0;
    for (const Picket& p : pickets_)
        count += p.eps;
    return count;
}

std::int64_t H1Object::b() const {
    std::int64_t total = 0;
    for (const Picket& p : pickets_)
        total += p.m;
    return total;
}

int H1Object::free_count() const {
    int count = 0;
    for (const Picket& p : pickets_)
        if (p.eps == 1 && p.m == 0)
            ++count;
    return count;
}

H1Object H1Object::plus(const H1Object& other) const {
    std::vector<Picket> all = pickets_;
    all.insert(all.end(), other.pickets_.begin(), other.pickets_.end());
    return H1Object(std::move(all));
}

bool operator<(const H1Object& a, const H1Object& b) {
    return std::lexicographical_compare(
        a.pickets_.begin(), a.pickets_.end(), b.pickets_.begin(), b.pickets_.end(),
        [](const Picket& p, const Picket& q) {
            return p.m != q.m ? p.m < q.m : p.eps < q.eps;
        });
}

H1Object object_of(std::initializer_list<Picket> pickets) {
    return H1Object(std::vector<Picket>(pickets));
}

H1Object free_pickets(int n) {
    return H1Object(std::vector<Picket>(static_cast<std::size_t>(n), Picket(1, 0)));
}

ExtTableau gamma_hat(const H1Object& m) {
    Partition beta, gamma;
    int free = 0;
    for (const Picket& p : m.pickets()) {
        if (p.m == 0) {
            ++free;
            continue;
        }
        beta = union_parts(beta, Partition({p.m}));
        int gamma_part = (p.eps == 0) ? p.m : p.m - 1;
        if (gamma_part > 0)
            gamma = union_parts(gamma, Partition({gamma_part}));
    }
    return ExtTableau(make(std::move(gamma), std::move(beta)), free);
}

H1Object from_ext_tableau(const ExtTableau& t) {
    std::vector<Picket> pickets;
    const LRTableau& tab = t.tab;
    for (int i = 1; i <= tab.beta().length(); ++i) {
        int eps = (tab.beta().part(i) == tab.gamma().part(i)) ? 0 : 1;
        pickets.emplace_back(eps, tab.beta().part(i));
    }
    for (int k = 0; k < t.free; ++k)
        pickets.emplace_back(1, 0);
    return H1Object(std::move(pickets));
}

std::int64_t hom_dim_picket(const Picket& p, const Picket& q) {
    const int l = p.m, m = q.m;
    if (p.eps == 0) {
        // P0^l rows of the table
        if (q.eps == 0)
            return std::min(l, m);
        return (m == 0) ? 0 : std::min(l, m);
    }
    if (l == 0) {
        // P1^0 row
        return (q.eps == 1 && m == 0) ? 1 : 0;
    }
    // P1^l row, l >= 1
    if (q.eps == 0)
        return std::min(l - 1, m);
    return (m == 0) ? 1 : std::min(l, m);
}

std::int64_t hom_dim(const H1Object& m, const H1Object& n) {
    std::int64_t total = 0;
    for (const Picket& p : m.pickets())
        for (const Picket& q : n.pickets())
            total += hom_dim_picket(p, q);
    return total;
}

std::int64_t end_dim(const H1Object& m) {
    return hom_dim(m, m);
}

bool hom_leq(const H1Object& m, const H1Object& n) {
    if (m.a() != n.a() || m.b() != n.b())
        throw IncomparableInvariants("hom_leq compares objects within one H_a^b; got (a,b)=(" +
                                     std::to_string(m.a()) + "," + std::to_string(m.b()) +
                                     ") vs (" + std::to_string(n.a()) + "," +
                                     std::to_string(n.b()) + ")");
    int max_block = 0;
    for (const Picket& p : m.pickets())
        max_block = std::max(max_block, p.m);
    for (const Picket& p : n.pickets())
        max_block = std::max(max_block, p.m);

    std::vector<Picket> tests;
    for (int l = 1; l <= max_block + 1; ++l) {
        tests.emplace_back(0, l);
        tests.emplace_back(1, l);
    }
    tests.emplace_back(1, 0);

    for (const Picket& t : tests) {
        H1Object u = object_of({t});
        if (hom_dim(u, m) > hom_dim(u, n))
            return false;
        if (hom_dim(m, u) > hom_dim(n, u))
            return false;
    }
    return true;
}

std::string to_string(const Picket& p) {
    return "P" + std::to_string(p.eps) + "^" + std::to_string(p.m);
}

std::string to_string(const H1Object& m) {
    if (m.empty())
        return "0";
    // display order: m descending, P0 before P1 at equal m
    std::vector<Picket> display = m.pickets();
    std::stable_sort(display.begin(), display.end(), [](const Picket& p, const Picket& q) {
        return p.m != q.m ? p.m > q.m : p.eps < q.eps;
    });
    std::string out;
    for (std::size_t i = 0; i < display.size(); ++i) {
        if (i > 0)
            out += '+';
        out += to_string(display[i]);
    }
    return out;
}

H1Object parse_object(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip_ws();
    if (pos == text.size())
        return H1Object{};
    if (text[pos] == '0' && [&] {
            std::size_t rest = pos + 1;
            while (rest < text.size() && std::isspace(static_cast<unsigned char>(text[rest])))
                ++rest;
            return rest == text.size();
        }())
        return H1Object{};

    std::vector<Picket> pickets;
    for (;;) {
        skip_ws();
        if (pos == text.size() || text[pos] != 'P')
            throw ParseError("expected 'P'", pos);
        ++pos;
        if (pos == text.size() || (text[pos] != '0' && text[pos] != '1'))
            throw ParseError("expected picket type 0 or 1", pos);
        int eps = text[pos] - '0';
        ++pos;
        if (pos == text.size() || text[pos] != '^')
            throw ParseError("expected '^'", pos);
        ++pos;
        if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected block length", pos);
        long long m = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            m = m * 10 + (text[pos] - '0');
            if (m > kDefaultMaxPart)
                throw ParseError("block length exceeds the limit", pos);
            ++pos;
        }
        pickets.emplace_back(eps, static_cast<int>(m));
        skip_ws();
        if (pos == text.size())
            break;
        if (text[pos] != '+')
            throw ParseError("expected '+' between pickets", pos);
        ++pos;
    }
    return H1Object(std::move(pickets));
}

std::vector<Partition> all_partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<LRTableau> all_tableaux_with_weight(int b) {
    std::vector<LRTableau> out;
    for (const Partition& beta : all_partitions_of(b)) {
        std::vector<int> gamma;
        auto rec = [&](auto&& self, int row) -> void {
            if (row > beta.length()) {
                out.push_back(make(Partition(gamma), beta));
                return;
            }
            int prev = (row == 1) ? beta.part(1) : gamma[static_cast<std::size_t>(row - 2)];
            for (int g : {beta.part(row), beta.part(row) - 1}) {
                if (g <= prev) {
                    gamma.push_back(g);
                    self(self, row + 1);
                    gamma.pop_back();
                }
            }
        };
        rec(rec, 1);
    }
    return out;
}

std::vector<H1Object> all_objects_with(int a, int b) {
    std::vector<H1Object> out;
    for (const LRTableau& t : all_tableaux_with_weight(b)) {
        int entries = static_cast<int>(t.entry_count());
        if (entries <= a)
            out.push_back(from_ext_tableau(ExtTableau(t, a - entries)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace lrgen
