#include "brieskorn/seifert.hpp"

#include <algorithm>
#include <sstream>

namespace brieskorn {

namespace {

std::string tuple_str(const std::vector<i64>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

} // namespace

Exponents Exponents::of(std::vector<i64> values) {
    if (values.size() < 3)
        fail(Errc::too_few_exponents, "need r >= 3 exponents, got " + std::to_string(values.size()));
    for (i64 v : values) {
        if (v <= 1) fail(Errc::exponent_too_small, "exponent " + std::to_string(v) + " must be > 1");
    }
    for (size_t i = 0; i < values.size(); ++i) {
        for (size_t j = i + 1; j < values.size(); ++j) {
            if (gcd_ll(values[i], values[j]) != 1)
                fail(Errc::not_pairwise_coprime, std::to_string(values[i]) + " and " +
                                                     std::to_string(values[j]) + " share a factor");
        }
    }
    Exponents e;
    e.display_ = values;
    std::sort(values.begin(), values.end());
    e.sorted_ = std::move(values);
    return e;
}

Zint Exponents::product() const {
    Zint A = 1;
    for (i64 v : sorted_) A *= zint_of(v);
    return A;
}

int Exponents::index_divisible_by(i64 p) const {
    for (int i = 0; i < count(); ++i) {
        if (sorted_[i] % p == 0) return i;
    }
    return -1;
}

SeifertData brieskorn_seifert_data(const Exponents& a) {
    const auto& av = a.sorted();
    const int r = a.count();

    SeifertData sd;
    sd.a = a;
    sd.A = a.product();
    sd.b.resize(r);

    Zint acc = -1; // running -1 - sum_j b_j * (A / a_j)
    for (int j = 0; j < r; ++j) {
        const i64 aj = av[j];
        // (A / a_j) mod a_j without materializing the big quotient.
        i64 g = 1;
        for (int i = 0; i < r; ++i) {
            if (i != j) g = mul_mod(g, av[i] % aj, aj);
        }
        i64 bj = (aj - mod_inverse(g, aj)) % aj; // -(A/a_j)^{-1} mod a_j
        if (bj == 0) fail(Errc::property_violation, "b_j out of range for " + tuple_str(av));
        sd.b[j] = bj;
        Zint Aj = sd.A / zint_of(aj);
        acc -= zint_of(bj) * Aj;
    }
    // acc = A * e0 exactly; the division below must be exact by construction.
    Zint e0z = acc / sd.A;
    if (e0z * sd.A != acc)
        fail(Errc::property_violation, "Euler term division not exact for " + tuple_str(av));
    sd.e0 = to_i64(e0z, "e0");
    if (sd.e0 >= 0) fail(Errc::property_violation, "Euler term must be negative for " + tuple_str(av));
    return sd;
}

BranchedPair branched_pair(const Exponents& total, i64 p) {
    if (p <= 1 || !is_prime(p)) fail(Errc::not_prime, std::to_string(p) + " is not prime");
    int idx = total.index_divisible_by(p);
    if (idx < 0)
        fail(Errc::prime_does_not_divide,
             std::to_string(p) + " divides no exponent of " + tuple_str(total.display()));

    std::vector<i64> base = total.sorted();
    base[idx] /= p;
    if (base[idx] == 1) {
        base.erase(base.begin() + idx);
        if (base.size() < 3)
            fail(Errc::degenerate_base, "quotient of " + tuple_str(total.display()) + " by " +
                                            std::to_string(p) + " leaves fewer than 3 exponents");
    }
    BranchedPair bp;
    bp.total = total;
    bp.base = Exponents::of(std::move(base));
    bp.p = p;
    return bp;
}

QuotientSeifert free_quotient_data(const SeifertData& sd, i64 p) {
    if (p <= 1 || !is_prime(p)) fail(Errc::not_prime, std::to_string(p) + " is not prime");
    if (sd.a.index_divisible_by(p) >= 0)
        fail(Errc::prime_divides_exponent,
             std::to_string(p) + " divides an exponent of " + tuple_str(sd.a.display()));

    QuotientSeifert q;
    q.p = p;
    q.e0p = zint_of(sd.e0) * zint_of(p);
    // b is stored against sorted order; emit pairs in display order.
    const auto& sorted = sd.a.sorted();
    std::vector<bool> used(sorted.size(), false);
    for (i64 d : sd.a.display()) {
        for (size_t j = 0; j < sorted.size(); ++j) {
            if (!used[j] && sorted[j] == d) {
                used[j] = true;
                q.pairs.emplace_back(d, zint_of(sd.b[j]) * zint_of(p));
                break;
            }
        }
    }
    return q;
}

} // namespace brieskorn
