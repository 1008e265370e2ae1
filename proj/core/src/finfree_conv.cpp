#include "finfree/finfree_conv.hpp"

#include "finfree/error.hpp"

namespace finfree {

namespace {

void check_inputs(const Polynomial& p, const Polynomial& q, int n, const char* op) {
    if (!p.is_exact() || !q.is_exact())
        throw Error(ErrorCode::FloatBackend, std::string(op) + " accepts exact polynomials only");
    if (p.n() != n || q.n() != n)
        throw Error(ErrorCode::DegreeMismatch, std::string(op) + ": ambient degrees must equal n=" + std::to_string(n));
}

std::vector<Rational> falling_table(int n) {
    std::vector<Rational> f(n + 1);
    f[0] = 1;
    for (int k = 1; k <= n; ++k) f[k] = f[k - 1] * (n - k + 1);
    return f;
}

}  // namespace

Polynomial mult_conv(const Polynomial& p, const Polynomial& q, int n) {
    check_inputs(p, q, n, "mult_conv");
    std::vector<Rational> e(n + 1);
    for (int k = 0; k <= n; ++k) e[k] = p.e(k) * q.e(k) / binomial(n, k);
    return Polynomial(n, std::move(e));
}

Polynomial add_conv(const Polynomial& p, const Polynomial& q, int n) {
    check_inputs(p, q, n, "add_conv");
    const auto fall = falling_table(n);
    std::vector<Rational> a(n + 1), b(n + 1), e(n + 1);
    for (int i = 0; i <= n; ++i) {
        a[i] = p.e(i) / fall[i];
        b[i] = q.e(i) / fall[i];
    }
    for (int k = 0; k <= n; ++k) {
        Rational s = 0;
        for (int i = 0; i <= k; ++i) s += a[i] * b[k - i];
        e[k] = fall[k] * s;
    }
    return Polynomial(n, std::move(e));
}

bool check_identity_dilation_distribute(const Polynomial& p, const Polynomial& q, int n, const Rational& alpha) {
    const Polynomial lhs = mult_conv(dilate(p, alpha), q, n);
    const Polynomial mid = mult_conv(p, dilate(q, alpha), n);
    const Polynomial rhs = dilate(mult_conv(p, q, n), alpha);
    return lhs == mid && mid == rhs;
}

bool check_identity_dilation_additive(const Polynomial& p, const Polynomial& q, int n, const Rational& alpha) {
    const Polynomial lhs = add_conv(dilate(p, alpha), dilate(q, alpha), n);
    const Polynomial rhs = dilate(add_conv(p, q, n), alpha);
    if (lhs.is_zero() || rhs.is_zero()) return lhs.is_zero() && rhs.is_zero();
    return proportional(lhs, rhs);
}

}  // namespace finfree
