#include "lrgen/verify.hpp"

#include <algorithm>

#include "lrgen/generic_ext.hpp"
#include "lrgen/star.hpp"

namespace lrgen {

std::vector<H1Object> all_objects_up_to(int max_b, int max_free) {
    std::vector<H1Object> out;
    for (int b = 0; b <= max_b; ++b)
        for (const LRTableau& t : all_tableaux_with_weight(b))
            for (int free = 0; free <= max_free; ++free)
                out.push_back(from_ext_tableau(ExtTableau(t, free)));
    std::sort(out.begin(), out.end());
    return out;
}

VerifyReport verify_table(int max_m, const std::vector<int>& primes) {
    VerifyReport report{.suite = "table"};
    std::vector<Picket> pickets{Picket(1, 0)};
    for (int m = 1; m <= max_m; ++m) {
        pickets.emplace_back(0, m);
        pickets.emplace_back(1, m);
    }
    for (int p : primes) {
        FieldParam fp(p);
        for (const Picket& x : pickets)
            for (const Picket& y : pickets) {
                ++report.checked;
                std::int64_t expected = hom_dim_picket(x, y);
                MatObject mx = realize(object_of({x}), fp);
                MatObject my = realize(object_of({y}), fp);
                std::int64_t got = hom_space(mx, my).dim();
                if (got != expected)
                    report.failures.push_back("[" + to_string(x) + "," + to_string(y) + "] over F_" +
                                              std::to_string(p) + ": matrix " +
                                              std::to_string(got) + " != table " +
                                              std::to_string(expected));
            }
    }
    return report;
}

VerifyReport verify_roundtrip(int max_b_tableau, int max_free, int max_b_matrix, int prime) {
    VerifyReport report{.suite = "roundtrip"};
    FieldParam fp(prime);
    for (int b = 0; b <= max_b_tableau; ++b)
        for (const LRTableau& t : all_tableaux_with_weight(b))
            for (int free = 0; free <= max_free; ++free) {
                ++report.checked;
                ExtTableau ext(t, free);
                H1Object m = from_ext_tableau(ext);
                if (gamma_hat(m) != ext) {
                    report.failures.push_back("gamma_hat(from_ext_tableau(" + to_string(ext) +
                                              ")) != id");
                    continue;
                }
                if (from_ext_tableau(gamma_hat(m)) != m)
                    report.failures.push_back("from_ext_tableau(gamma_hat(" + to_string(m) +
                                              ")) != id");
            }
    for (const H1Object& m : all_objects_up_to(max_b_matrix, 2)) {
        ++report.checked;
        if (identify(realize(m, fp)) != m)
            report.failures.push_back("identify(realize(" + to_string(m) + ")) != id over F_" +
                                      std::to_string(prime));
    }
    return report;
}

VerifyReport verify_main(int max_b, int max_free, const OracleOptions& opts) {
    VerifyReport report{.suite = "main"};
    std::vector<H1Object> objects = all_objects_up_to(max_b, max_free);

    std::vector<std::pair<const H1Object*, const H1Object*>> pairs;
    for (const H1Object& n : objects)
        for (const H1Object& m : objects)
            if (n.b() + m.b() <= max_b)
                pairs.emplace_back(&n, &m);

    std::vector<std::string> failures(pairs.size());
    OracleOptions pair_opts = opts;
    pair_opts.parallel = false; // parallelism lives at the pair level here

#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const H1Object& n = *pairs[i].first;
        const H1Object& m = *pairs[i].second;
        try {
            H1Object brute = brute_generic_ext(n, m, pair_opts);
            H1Object combinatorial = generic_extension(n, m);
            if (brute != combinatorial)
                failures[i] = "N=" + to_string(n) + " M=" + to_string(m) + ": oracle " +
                              to_string(brute) + " != algorithm " + to_string(combinatorial);
        } catch (const std::exception& e) {
            failures[i] = "N=" + to_string(n) + " M=" + to_string(m) + ": " + e.what();
        }
    }

    report.checked = static_cast<std::int64_t>(pairs.size());
    for (std::string& f : failures)
        if (!f.empty())
            report.failures.push_back(std::move(f));
    return report;
}

std::uint64_t TableauGen::next_raw() {
    // xorshift64*
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
}

LRTableau TableauGen::next(int max_weight) {
    // random outer shape within the weight budget, then a random valid
    // inner shape chosen row by row
    std::int64_t budget = static_cast<std::int64_t>(next_raw() % (static_cast<std::uint64_t>(max_weight) + 1));
    std::vector<int> beta;
    int prev = static_cast<int>(budget);
    while (budget > 0 && prev > 0) {
        int cap = static_cast<int>(std::min<std::int64_t>(prev, budget));
        int part = 1 + static_cast<int>(next_raw() % static_cast<std::uint64_t>(cap));
        beta.push_back(part);
        budget -= part;
        prev = part;
    }
    Partition b(std::move(beta));

    std::vector<int> gamma;
    for (int i = 1; i <= b.length(); ++i) {
        int prev_g = (i == 1) ? b.part(1) : gamma[static_cast<std::size_t>(i - 2)];
        int hi = std::min(b.part(i), prev_g);
        int lo = b.part(i) - 1; // always <= prev_g for valid shapes
        int g = (hi > lo && (next_raw() & 1)) ? hi : lo;
        gamma.push_back(g);
    }
    return make(Partition(std::move(gamma)), std::move(b));
}

VerifyReport verify_assoc(int trials, int max_weight, std::uint64_t seed) {
    VerifyReport report{.suite = "assoc"};
    TableauGen gen(seed);
    auto mul = [](const LRTableau& left, const LRTableau& right) {
        return star_lr1(right, left); // left * right
    };
    for (int t = 0; t < trials; ++t) {
        ++report.checked;
        LRTableau a = gen.next(max_weight);
        LRTableau b = gen.next(max_weight);
        LRTableau c = gen.next(max_weight);
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            report.failures.push_back("(A*B)*C != A*(B*C) for A=" + to_string(a) + " B=" +
                                      to_string(b) + " C=" + to_string(c));
            if (report.failures.size() >= 5)
                break;
        }
    }
    return report;
}

VerifyReport verify_lemmas(int max_b, int max_m, const OracleOptions& opts) {
    VerifyReport report{.suite = "lemmas"};
    H1Object p10 = free_pickets(1);
    FieldParam fp = opts.field;
    MatObject p10_mat = realize(p10, fp);

    for (const H1Object& m : all_objects_up_to(max_b, 0)) {
        // [P1^0, M] = 0 for M in S1, by the table and by matrices
        ++report.checked;
        if (hom_dim(p10, m) != 0)
            report.failures.push_back("[P1^0," + to_string(m) + "] != 0 in the table");
        if (hom_space(p10_mat, realize(m, fp)).dim() != 0)
            report.failures.push_back("[P1^0," + to_string(m) + "] != 0 over F_" +
                                      std::to_string(fp.p));
        // every extension of M by P1^0 splits
        ++report.checked;
        if (!check_ext_vanishing(m, opts))
            report.failures.push_back("a non-split extension of " + to_string(m) +
                                      " by P1^0 exists");
    }

    for (int m = 1; m <= max_m; ++m) {
        for (int k = 1; k < m; ++k) {
            ++report.checked;
            H1Object lhs = object_of({Picket(0, m), Picket(1, k)});
            H1Object rhs = object_of({Picket(1, m), Picket(0, k)});
            if (!hom_leq(lhs, rhs))
                report.failures.push_back("P0^" + std::to_string(m) + "+P1^" + std::to_string(k) +
                                          " is not hom-below P1^" + std::to_string(m) + "+P0^" +
                                          std::to_string(k));
        }
        ++report.checked;
        if (!hom_leq(object_of({Picket(1, m)}),
                     object_of({Picket(0, m), Picket(1, 0)})))
            report.failures.push_back("P1^" + std::to_string(m) + " is not hom-below P0^" +
                                      std::to_string(m) + "+P1^0");
    }
    return report;
}

} // namespace lrgen
