#include "distspec/charpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace distspec {

std::string CharPoly::decimal_key() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out << ',';
        out << coeffs[i];
    }
    return out.str();
}

namespace {

// det(lambda I - A) for integer A via the Faddeev-LeVerrier recurrence:
//   M_1 = I,  c_{n-1} = -tr(A M_1)
//   M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
// Every division is exact over the integers.
CharPoly faddeev_leverrier(int n, const std::vector<BigInt>& a) {
    CharPoly p;
    p.coeffs.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
    p.coeffs[static_cast<std::size_t>(n)] = 1;
    if (n == 0) return p;

    const std::size_t nn = static_cast<std::size_t>(n);
    std::vector<BigInt> m(nn * nn, BigInt(0));
    for (std::size_t i = 0; i < nn; ++i) m[i * nn + i] = 1;
    std::vector<BigInt> am(nn * nn, BigInt(0));

    BigInt acc;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // M_k = A * M_{k-1} + c_{n-k+1} I
            for (std::size_t i = 0; i < nn; ++i) {
                for (std::size_t j = 0; j < nn; ++j) {
                    acc = 0;
                    for (std::size_t l = 0; l < nn; ++l) acc += a[i * nn + l] * m[l * nn + j];
                    am[i * nn + j] = acc;
                }
            }
            m.swap(am);
            const BigInt& c = p.coeffs[static_cast<std::size_t>(n - k + 1)];
            for (std::size_t i = 0; i < nn; ++i) m[i * nn + i] += c;
        }
        // tr(A * M_k)
        BigInt trace = 0;
        for (std::size_t i = 0; i < nn; ++i)
            for (std::size_t l = 0; l < nn; ++l) trace += a[i * nn + l] * m[l * nn + i];
        BigInt q = trace / k, r = trace % k;
        if (r != 0)
            throw std::logic_error("faddeev-leverrier: non-exact division at step " + std::to_string(k));
        p.coeffs[static_cast<std::size_t>(n - k)] = -q;
    }
    return p;
}

}  // namespace

CharPoly char_poly(const DistanceMatrix& d) {
    const int n = d.size();
    std::vector<BigInt> a;
    a.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (std::uint16_t v : d.entries()) a.emplace_back(v);
    return faddeev_leverrier(n, a);
}

CharPoly char_poly_matrix(int n, const std::vector<long long>& entries) {
    if (n < 0 || entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("char_poly_matrix: entries size must be n*n");
    std::vector<BigInt> a;
    a.reserve(entries.size());
    for (long long v : entries) a.emplace_back(v);
    return faddeev_leverrier(n, a);
}

bool distance_cospectral(const Graph& g1, const Graph& g2) {
    if (!is_connected(g1) || !is_connected(g2))
        throw std::invalid_argument("distance_cospectral requires connected inputs");
    if (g1.vertex_count() != g2.vertex_count()) return false;
    return char_poly(distance_matrix(g1)) == char_poly(distance_matrix(g2));
}

int root_multiplicity_at_integer(const CharPoly& p, long long r) {
    std::vector<BigInt> c = p.coeffs;
    const BigInt root(r);
    int mult = 0;
    while (c.size() > 1) {
        // synthetic division by (lambda - r)
        std::vector<BigInt> q(c.size() - 1);
        BigInt carry = 0;
        for (std::size_t i = c.size(); i-- > 1;) {
            carry = c[i] + carry * root;
            q[i - 1] = carry;
        }
        BigInt rem = c[0] + carry * root;
        if (rem != 0) break;
        ++mult;
        c = std::move(q);
    }
    return mult;
}

int root_multiplicity_at_neg_half(const CharPoly& p) {
    // substitute lambda = mu/2 and clear denominators:
    // q(mu) = 2^n p(mu/2) has coefficients c_k 2^(n-k); the multiplicity of
    // -1/2 in p equals the multiplicity of the integer root -1 in q.
    const int n = p.degree();
    CharPoly q;
    q.coeffs.resize(p.coeffs.size());
    for (int k = 0; k <= n; ++k)
        q.coeffs[static_cast<std::size_t>(k)] = p.coeffs[static_cast<std::size_t>(k)] << (n - k);
    return root_multiplicity_at_integer(q, -1);
}

}  // namespace distspec
