#include "capcodes/oracle.hpp"

namespace capcodes {

void for_each_message(const FieldPtr& field, unsigned k, std::uint64_t budget,
                      const std::function<void(const Poly&)>& visit) {
    const std::uint32_t q = field->order();
    const std::uint64_t total = saturating_pow(q, k);
    require(total <= budget, ErrorKind::BudgetExceeded, "message space too large to enumerate");
    std::vector<Elem> c(k, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (unsigned j = k; j-- > 0;) {
            c[j] = static_cast<Elem>(rest % q);
            rest /= q;
        }
        visit(Poly(field, c));
    }
}

std::vector<Candidate> oracle_list_decode(const FieldPtr& field, unsigned k, const Encoder& encode, const Matrix& y,
                                          unsigned t, std::uint64_t budget) {
    std::vector<Candidate> out;
    for_each_message(field, k, budget, [&](const Poly& f) {
        const unsigned a = agreement(encode(f), y);
        if (a >= t) out.push_back({f, a});
    });
    normalize_candidates(out);
    return out;
}

std::vector<Poly> oracle_y_roots(const InterpolationPoly& Q, unsigned k, Elem gamma, RootMode mode,
                                 std::uint64_t budget) {
    const FieldPtr& field = Q.field();
    std::vector<Poly> out;
    for_each_message(field, k, budget, [&](const Poly& f) {
        Poly acc = Q.A[0];
        Elem g = 1;
        for (unsigned i = 1; i <= Q.s(); ++i) {
            const Poly term = mode == RootMode::Shift ? f.scale_argument(g) : f.formal_derivative(i - 1);
            acc = acc + Q.A[i] * term;
            g = field->mul(g, gamma);
        }
        if (acc.is_zero()) out.push_back(f);
    });
    return out;
}

}  // namespace capcodes
