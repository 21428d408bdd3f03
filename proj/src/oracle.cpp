#include "lrgen/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrgen {

FieldParam::FieldParam(int prime) : p(prime) {
    if (p != 2 && p != 3 && p != 5 && p != 7)
        throw Error("FieldParam: p must be a prime <= 7");
}

MatObject realize(const H1Object& m, FieldParam fp) {
    std::vector<Picket> order = m.pickets();
    // blocks with m descending, P0 before P1 at equal m; P1^0 sorts last
    std::stable_sort(order.begin(), order.end(), [](const Picket& p, const Picket& q) {
        return p.m != q.m ? p.m > q.m : p.eps < q.eps;
    });

    int n = static_cast<int>(m.b());
    int a = m.a();
    MatObject out;
    out.a = a;
    out.j = FpMat(n, n, fp.p);
    out.f = FpMat(n, a, fp.p);

    std::vector<int> beta_parts;
    int offset = 0;
    int col = 0;
    for (const Picket& p : order) {
        if (p.m >= 1) {
            beta_parts.push_back(p.m);
            for (int r = 0; r + 1 < p.m; ++r)
                out.j.set(offset + r + 1, offset + r, 1);
        }
        if (p.eps == 1) {
            if (p.m >= 1)
                out.f.set(offset + p.m - 1, col, 1); // socle of this block
            ++col; // P1^0 leaves a zero column
        }
        offset += p.m;
    }
    out.beta = Partition(std::move(beta_parts));
    return out;
}

Partition jordan_type(const FpMat& a) {
    return Partition(nilpotent_block_sizes(a));
}

HomBasis hom_space(const MatObject& m, const MatObject& n) {
    if (m.j.prime() != n.j.prime())
        throw Error("hom_space: mixed fields");
    const int p = m.j.prime();
    const int am = m.a, an = n.a;
    const int nm = m.j.rows(), nn = n.j.rows();

    // unknowns: phi1 (an x am) row-major, then phi2 (nn x nm) row-major
    const int n_phi1 = an * am;
    const int n_phi2 = nn * nm;
    const int unknowns = n_phi1 + n_phi2;
    const int equations = nn * nm + nn * am;

    FpMat system(equations, unknowns, p);
    int eq = 0;
    // phi2 J_M - J_N phi2 = 0
    for (int r = 0; r < nn; ++r)
        for (int c = 0; c < nm; ++c, ++eq) {
            for (int k = 0; k < nm; ++k)
                system.add_at(eq, n_phi1 + r * nm + k, m.j.at(k, c));
            for (int k = 0; k < nn; ++k)
                system.add_at(eq, n_phi1 + k * nm + c, -n.j.at(r, k));
        }
    // phi2 f_M - f_N phi1 = 0
    for (int r = 0; r < nn; ++r)
        for (int c = 0; c < am; ++c, ++eq) {
            for (int k = 0; k < nm; ++k)
                system.add_at(eq, n_phi1 + r * nm + k, m.f.at(k, c));
            for (int k = 0; k < an; ++k)
                system.add_at(eq, k * am + c, -n.f.at(r, k));
        }

    HomBasis out;
    out.p = p;
    out.phi1_rows = an;
    out.phi1_cols = am;
    out.phi2_rows = nn;
    out.phi2_cols = nm;
    for (const auto& v : system.kernel_basis()) {
        FpMat phi1(an, am, p), phi2(nn, nm, p);
        for (int r = 0; r < an; ++r)
            for (int c = 0; c < am; ++c)
                phi1.set(r, c, v[static_cast<std::size_t>(r * am + c)]);
        for (int r = 0; r < nn; ++r)
            for (int c = 0; c < nm; ++c)
                phi2.set(r, c, v[static_cast<std::size_t>(n_phi1 + r * nm + c)]);
        out.basis.emplace_back(std::move(phi1), std::move(phi2));
    }
    return out;
}

MorphismEnumerator::MorphismEnumerator(const HomBasis& basis)
    : basis_(basis),
      digits_(static_cast<std::size_t>(basis.dim()), 0),
      phi1_(basis.phi1_rows, basis.phi1_cols, basis.p),
      phi2_(basis.phi2_rows, basis.phi2_cols, basis.p) {}

bool MorphismEnumerator::next() {
    // Incrementing digit k by one adds basis element k once; the wrap from
    // p-1 to 0 is the same addition mod p, so carries reuse it.
    for (std::size_t k = 0; k < digits_.size(); ++k) {
        phi1_ = phi1_.add(basis_.basis[k].first);
        phi2_ = phi2_.add(basis_.basis[k].second);
        if (++digits_[k] < basis_.p)
            return true;
        digits_[k] = 0;
    }
    return false;
}

namespace {

// Extends the given independent columns to a full basis of F^n with
// standard basis vectors; returns the change-of-basis matrix [cols | fill].
FpMat complete_basis(const FpMat& cols, int n, int p) {
    FpMat basis(n, n, p);
    int have = cols.cols();
    for (int c = 0; c < have; ++c)
        for (int r = 0; r < n; ++r)
            basis.set(r, c, cols.at(r, c));
    int next = have;
    for (int i = 0; i < n && next < n; ++i) {
        basis.set(i, next, 1);
        FpMat probe(n, next + 1, p);
        for (int c = 0; c <= next; ++c)
            for (int r = 0; r < n; ++r)
                probe.set(r, c, basis.at(r, c));
        if (probe.rank() == next + 1)
            ++next;
        else
            basis.set(i, next, 0);
    }
    if (next != n)
        throw Error("complete_basis: column set was not independent");
    return basis;
}

// The operator/matrix a quotient map induces: rows `keep` of inv(basis) * m.
FpMat quotient_part(const FpMat& basis_inv, const FpMat& m, int drop) {
    FpMat coords = basis_inv.mul(m);
    FpMat out(coords.rows() - drop, coords.cols(), coords.prime());
    for (int r = drop; r < coords.rows(); ++r)
        for (int c = 0; c < coords.cols(); ++c)
            out.set(r - drop, c, coords.at(r, c));
    return out;
}

// Columns of `m` restricted to the given column indices.
FpMat select_columns(const FpMat& m, const std::vector<int>& cols) {
    FpMat out(m.rows(), static_cast<int>(cols.size()), m.prime());
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (int r = 0; r < m.rows(); ++r)
            out.set(r, static_cast<int>(i), m.at(r, cols[i]));
    return out;
}

// Columns have+1 .. n of a completed basis, as an n x (n-have) matrix.
FpMat complement_columns(const FpMat& basis, int have) {
    FpMat out(basis.rows(), basis.cols() - have, basis.prime());
    for (int c = have; c < basis.cols(); ++c)
        for (int r = 0; r < basis.rows(); ++r)
            out.set(r, c - have, basis.at(r, c));
    return out;
}

} // namespace

H1Object identify(const MatObject& m) {
    Partition beta = jordan_type(m.j);
    const int n = m.j.rows();
    const int p = m.j.prime();

    FpMat image = select_columns(m.f, m.f.pivot_columns());
    const int c = image.cols();
    int free = m.a - c;

    FpMat basis = complete_basis(image, n, p);
    FpMat basis_inv = basis.inverse();
    FpMat complement = complement_columns(basis, c);
    FpMat induced = quotient_part(basis_inv, m.j.mul(complement), c);
    Partition gamma = jordan_type(induced);

    return from_ext_tableau(ExtTableau(make(std::move(gamma), std::move(beta)), free));
}

namespace {

// Quotient of U by an injected copy of M: both components of the morphism
// become complements, J and f descend to the quotient coordinates.
MatObject cokernel(const MatObject& u, const FpMat& phi1, const FpMat& phi2) {
    const int p = u.j.prime();
    const int am = phi1.cols();
    const int nm = phi2.cols();

    FpMat target_basis = complete_basis(phi2, u.j.rows(), p);
    FpMat target_inv = target_basis.inverse();
    FpMat target_comp = complement_columns(target_basis, nm);

    FpMat source_basis = complete_basis(phi1, u.a, p);
    FpMat source_comp = complement_columns(source_basis, am);

    MatObject out;
    out.a = u.a - am;
    out.j = quotient_part(target_inv, u.j.mul(target_comp), nm);
    out.f = quotient_part(target_inv, u.f.mul(source_comp), nm);
    out.beta = jordan_type(out.j);
    return out;
}

struct Candidate {
    H1Object object;
    MatObject realization;
    HomBasis homs; // from the fixed sub-object M
};

// Scans all morphisms M -> U for an injection whose cokernel is N.
bool scan_candidate(const MatObject& m_mat, const Candidate& cand, const H1Object& n_target) {
    MorphismEnumerator walk(cand.homs);
    const int am = m_mat.a;
    const int nm = m_mat.j.rows();
    do {
        if (walk.phi1().rank() != am || walk.phi2().rank() != nm)
            continue;
        MatObject coker = cokernel(cand.realization, walk.phi1(), walk.phi2());
        if (identify(coker) == n_target)
            return true;
    } while (walk.next());
    return false;
}

std::vector<Candidate> prepare_candidates(const H1Object& n, const H1Object& m,
                                          const MatObject& m_mat, const OracleOptions& opts) {
    if (m.b() + n.b() > opts.max_total_b)
        throw SearchSpaceTooLarge("b_M + b_N = " + std::to_string(m.b() + n.b()) +
                                  " exceeds the configured bound " +
                                  std::to_string(opts.max_total_b));
    std::vector<Candidate> candidates;
    for (H1Object& u : all_objects_with(m.a() + n.a(), static_cast<int>(m.b() + n.b()))) {
        Candidate c;
        c.realization = realize(u, opts.field);
        c.homs = hom_space(m_mat, c.realization);
        if (c.homs.dim() > opts.max_hom_dim)
            throw SearchSpaceTooLarge("hom space of dimension " + std::to_string(c.homs.dim()) +
                                      " exceeds the enumeration limit " +
                                      std::to_string(opts.max_hom_dim));
        c.object = std::move(u);
        candidates.push_back(std::move(c));
    }
    return candidates;
}

} // namespace

std::set<H1Object> all_extensions_serial(const H1Object& n, const H1Object& m,
                                         const OracleOptions& opts) {
    MatObject m_mat = realize(m, opts.field);
    std::set<H1Object> found;
    for (const Candidate& cand : prepare_candidates(n, m, m_mat, opts))
        if (scan_candidate(m_mat, cand, n))
            found.insert(cand.object);
    return found;
}

std::set<H1Object> all_extensions_parallel(const H1Object& n, const H1Object& m,
                                           const OracleOptions& opts) {
    MatObject m_mat = realize(m, opts.field);
    std::vector<Candidate> candidates = prepare_candidates(n, m, m_mat, opts);
    std::vector<char> hit(candidates.size(), 0);
    bool failed = false;

#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        try {
            hit[i] = scan_candidate(m_mat, candidates[i], n) ? 1 : 0;
        } catch (...) {
#pragma omp atomic write
            failed = true;
        }
    }
    if (failed)
        throw Error("all_extensions_parallel: a candidate scan failed");

    std::set<H1Object> found;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (hit[i])
            found.insert(candidates[i].object);
    return found;
}

std::set<H1Object> all_extensions(const H1Object& n, const H1Object& m,
                                  const OracleOptions& opts) {
    return opts.parallel ? all_extensions_parallel(n, m, opts) : all_extensions_serial(n, m, opts);
}

H1Object brute_generic_ext(const H1Object& n, const H1Object& m, const OracleOptions& opts) {
    std::set<H1Object> exts = all_extensions(n, m, opts);
    if (exts.empty())
        throw Error("brute_generic_ext: no extension found (split must exist)");

    const H1Object* best = nullptr;
    std::int64_t best_dim = 0;
    bool tie = false;
    for (const H1Object& u : exts) {
        std::int64_t d = end_dim(u);
        if (!best || d < best_dim) {
            best = &u;
            best_dim = d;
            tie = false;
        } else if (d == best_dim) {
            tie = true;
        }
    }
    if (tie)
        throw NonUniqueMinimum("two extensions share the minimal end_dim " +
                               std::to_string(best_dim));
    return *best;
}

bool check_ext_vanishing(const H1Object& m, const OracleOptions& opts) {
    if (!m.in_s1())
        throw NotInS1("check_ext_vanishing expects an object without P1^0 summands");
    std::set<H1Object> exts = all_extensions(m, free_pickets(1), opts);
    return exts == std::set<H1Object>{m.plus(free_pickets(1))};
}

} // namespace lrgen
