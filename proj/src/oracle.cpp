#include "dsg/oracle.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dsg::oracle {

mpz_class binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    // Pascal recurrence, one row at a time
    std::vector<mpz_class> row(n + 1);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 1; --j) row[j] += row[j - 1];
    return row[k];
}

mpz_class int_pow(const mpz_class& base, int exponent) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

OrderSize predict_order_size(const SpaceParams& p) {
    mpz_class q = p.q;
    mpz_class order = (int_pow(q, p.dim_u) - 1) * (int_pow(q, p.dim_w) - 1);
    mpz_class u_part = int_pow(q, 2 * p.dim_u) - int_pow(2 * q - 1, p.dim_u);
    mpz_class w_part = int_pow(q, 2 * p.dim_w) - int_pow(2 * q - 1, p.dim_w);
    mpz_class twice = u_part * w_part - order;
    if (twice % 2 != 0)
        throw std::logic_error("edge-count numerator is odd; the closed form is falsified");
    return {order, twice / 2};
}

mpz_class predict_degree(const SpaceParams& p, int u_support, int w_support) {
    if (u_support < 1 || u_support > p.dim_u || w_support < 1 || w_support > p.dim_w)
        throw std::invalid_argument("support sizes must lie in [1, dim] on each side");
    mpz_class q = p.q;
    return (int_pow(q, u_support) - 1) * (int_pow(q, w_support) - 1) *
               int_pow(q, p.dim_total() - u_support - w_support) -
           1;
}

MinDegreeEdgeConn predict_min_degree_edge_connectivity(const SpaceParams& p) {
    mpz_class q = p.q;
    mpz_class v = (q - 1) * (q - 1) * int_pow(q, p.dim_total() - 2) - 1;
    return {v, v};
}

DiameterCompleteness predict_diameter_complete(const SpaceParams& p) {
    if (p.dim_total() == 2)
        return {1, true, p.q == 2}; // q=2 leaves a single vertex
    return {2, false, false};
}

GirthTriangulated predict_girth_triangulated(const SpaceParams& p) {
    int n = p.dim_total();
    if (n == 2) {
        if (p.q == 2) return {-1, false, "dim2-single-vertex"};
        return {3, true, "dim2-complete"};
    }
    if (n == 3) {
        if (p.q == 2) return {-1, false, "dim3-q2-acyclic"};
        return {3, true, "dim3-triangulated"};
    }
    if (std::min(p.dim_u, p.dim_w) == 1) return {3, true, "hyperspace-split"};
    return {3, true, "balanced-split"};
}

DominationIndependence predict_domination_independence(const SpaceParams& p) {
    mpz_class product = mpz_class(p.dim_u) * p.dim_w;
    mpz_class independence = p.dim_total() >= 3 ? product : mpz_class(1);
    return {1, product, independence};
}

namespace {

// number of coefficient choices on one side with support size exactly `sz`
// out of `dim` positions, one position pinned: C(dim-1, sz-1)(q-1)^sz
mpz_class star_layer(int dim, int sz, const mpz_class& q1) {
    return binomial(dim - 1, sz - 1) * int_pow(q1, sz);
}

// unpinned layer: C(dim, sz)(q-1)^sz
mpz_class majority_layer(int dim, int sz, const mpz_class& q1) {
    return binomial(dim, sz) * int_pow(q1, sz);
}

mpz_class star_tail(int dim, int from, const mpz_class& q1) {
    mpz_class sum = 0;
    for (int sz = from; sz <= dim; ++sz) sum += star_layer(dim, sz, q1);
    return sum;
}

mpz_class majority_tail(int dim, int from, const mpz_class& q1) {
    mpz_class sum = 0;
    for (int sz = from; sz <= dim; ++sz) sum += majority_layer(dim, sz, q1);
    return sum;
}

} // namespace

CliqueFamily predict_clique_family_size(const SpaceParams& p, int k1, int k2) {
    if (k1 < 1 || k1 > p.dim_u || k2 < 1 || k2 > p.dim_w)
        throw std::invalid_argument("family parameters must lie in [1, dim] on each side");
    mpz_class q1 = mpz_class(p.q) - 1;
    bool u_star = 2 * k1 <= p.dim_u;
    bool w_star = 2 * k2 <= p.dim_w;
    int maj_k1 = p.dim_u / 2 + 1;
    int maj_k2 = p.dim_w / 2 + 1;

    CliqueFamily fam;
    if (u_star && w_star) {
        fam.regime = CliqueRegime::star_star;
        fam.regime_label = "star/star";
        fam.eff_k1 = k1;
        fam.eff_k2 = k2;
        fam.size = star_tail(p.dim_u, k1, q1) * star_tail(p.dim_w, k2, q1);
    } else if (u_star && !w_star) {
        // the majority side is largest at support floor(dim/2)+1
        fam.regime = CliqueRegime::star_majority;
        fam.regime_label = "star/majority";
        fam.eff_k1 = k1;
        fam.eff_k2 = maj_k2;
        fam.size = star_tail(p.dim_u, k1, q1) * majority_tail(p.dim_w, maj_k2, q1);
    } else if (!u_star && w_star) {
        fam.regime = CliqueRegime::majority_star;
        fam.regime_label = "majority/star";
        fam.eff_k1 = maj_k1;
        fam.eff_k2 = k2;
        fam.size = majority_tail(p.dim_u, maj_k1, q1) * star_tail(p.dim_w, k2, q1);
    } else {
        fam.regime = CliqueRegime::majority_majority;
        fam.regime_label = "majority/majority";
        fam.eff_k1 = maj_k1;
        fam.eff_k2 = maj_k2;
        fam.size = majority_tail(p.dim_u, maj_k1, q1) * majority_tail(p.dim_w, maj_k2, q1);
    }
    return fam;
}

mpz_class predict_clique_number(const SpaceParams& p) {
    mpz_class q1 = mpz_class(p.q) - 1;
    mpz_class full_u = q1 * int_pow(p.q, p.dim_u - 1);        // star tail from 1
    mpz_class full_w = q1 * int_pow(p.q, p.dim_w - 1);
    mpz_class maj_u = majority_tail(p.dim_u, p.dim_u / 2 + 1, q1);
    mpz_class maj_w = majority_tail(p.dim_w, p.dim_w / 2 + 1, q1);

    mpz_class best = full_u * full_w;
    best = std::max(best, full_u * maj_w);
    best = std::max(best, maj_u * full_w);
    best = std::max(best, maj_u * maj_w);

    if (p.q == 2 && p.dim_total() >= 4) {
        mpz_class expected = int_pow(2, p.dim_total() - 2);
        if (best != expected)
            throw std::logic_error("clique-number maximum disagrees with the q=2 closed form");
    }
    return best;
}

ChromaticBounds predict_chromatic_bounds(const SpaceParams& p) {
    int n = p.dim_total();
    if (p.q != 2 || n < 4) return {};
    ChromaticBounds b;
    b.applicable = true;
    b.lower = int_pow(2, n - 2);
    mpz_class numerator = int_pow(2, n) - (int_pow(2, p.dim_u) + int_pow(2, p.dim_w) +
                                           mpz_class(p.dim_u) * p.dim_w);
    b.upper_twice = numerator + int_pow(2, n - 2) + 2;
    b.upper_integral = numerator % 2 == 0;
    return b;
}

EulerianPrediction predict_eulerian(const SpaceParams& p) {
    return {false, p.dim_total() == 2 && p.q == 2};
}

} // namespace dsg::oracle
