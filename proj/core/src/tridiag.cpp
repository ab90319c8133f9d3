#include "pdmosc/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pdmosc/errors.hpp"

namespace pdmosc {

namespace {

void check_dims(const std::vector<double>& diag, const std::vector<double>& offdiag, std::size_t k)
{
    if (diag.empty())
        throw DimensionError("tridiag: empty matrix");
    if (offdiag.size() + 1 != diag.size())
        throw DimensionError("tridiag: offdiag must have diag.size() - 1 entries");
    if (k < 1 || k > diag.size())
        throw DimensionError("tridiag: k must be in [1, dim]");
}

// Number of eigenvalues strictly below x (Sturm sequence via LDL^T pivots).
std::size_t sturm_count(const std::vector<double>& d, const std::vector<double>& e2, double x,
                        double pivmin)
{
    std::size_t count = 0;
    double q = d[0] - x;
    if (std::abs(q) < pivmin)
        q = -pivmin;
    if (q < 0.0)
        ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        q = d[i] - x - e2[i - 1] / q;
        if (std::abs(q) < pivmin)
            q = -pivmin;
        if (q < 0.0)
            ++count;
    }
    return count;
}

// Solves (T - shift I) x = b in place, Gaussian elimination with partial pivoting.
void solve_shifted(const std::vector<double>& diag, const std::vector<double>& off, double shift,
                   double tiny, std::vector<double>& b)
{
    const std::size_t n = diag.size();
    if (n == 1) {
        double d = diag[0] - shift;
        if (std::abs(d) < tiny)
            d = tiny;
        b[0] /= d;
        return;
    }
    std::vector<double> d(n), du(off), dl(off);
    for (std::size_t i = 0; i < n; ++i)
        d[i] = diag[i] - shift;
    std::vector<double> du2(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (std::abs(d[i]) < tiny)
                d[i] = tiny;
            const double f = dl[i] / d[i];
            d[i + 1] -= f * du[i];
            b[i + 1] -= f * b[i];
        } else {
            const double f = d[i] / dl[i];
            d[i] = dl[i];
            const double t = d[i + 1];
            d[i + 1] = du[i] - f * t;
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -f * du2[i];
            }
            du[i] = t;
            const double tb = b[i];
            b[i] = b[i + 1];
            b[i + 1] = tb - f * b[i];
        }
    }
    if (std::abs(d[n - 1]) < tiny)
        d[n - 1] = tiny;
    b[n - 1] /= d[n - 1];
    b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t i = n - 2; i-- > 0;)
        b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
}

double normalize(std::vector<double>& v)
{
    const double nrm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    for (double& x : v)
        x /= nrm;
    return nrm;
}

} // namespace

std::vector<double> tridiag_lowest_eigen(const std::vector<double>& diag,
                                         const std::vector<double>& offdiag, std::size_t k)
{
    check_dims(diag, offdiag, k);
    const std::size_t n = diag.size();
    std::vector<double> e2(offdiag.size());
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double emax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(offdiag[i - 1]) : 0.0) +
                         (i + 1 < n ? std::abs(offdiag[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        e2[i] = offdiag[i] * offdiag[i];
        emax = std::max(emax, e2[i]);
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, emax);
    const double span = std::max(std::abs(lo), std::abs(hi));
    lo -= 2.0 * eps * span + pivmin;
    hi += 2.0 * eps * span + pivmin;

    std::vector<double> out(k);
    double left = lo;
    for (std::size_t j = 0; j < k; ++j) {
        double a = left;
        double b = hi;
        for (int it = 0; it < 2000; ++it) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b)
                break;
            if (b - a <= 2.0 * eps * std::max(std::abs(a), std::abs(b)))
                break;
            if (sturm_count(diag, e2, mid, pivmin) > j)
                b = mid;
            else
                a = mid;
        }
        out[j] = 0.5 * (a + b);
        left = a;
    }
    return out;
}

TridiagEigen tridiag_lowest_eigenpairs(const std::vector<double>& diag,
                                       const std::vector<double>& offdiag, std::size_t k)
{
    TridiagEigen res;
    res.values = tridiag_lowest_eigen(diag, offdiag, k);
    const std::size_t n = diag.size();
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        scale = std::max(scale, std::abs(diag[i]) + (i > 0 ? std::abs(offdiag[i - 1]) : 0.0) +
                                    (i + 1 < n ? std::abs(offdiag[i]) : 0.0));
    const double eps = std::numeric_limits<double>::epsilon();
    const double tiny = eps * std::max(scale, 1e-300);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = 1.0 + 0.37 * std::sin(0.71 * static_cast<double>(i) + 0.13 * static_cast<double>(j));
        normalize(v);
        for (int it = 0; it < 4; ++it) {
            solve_shifted(diag, offdiag, res.values[j], tiny, v);
            // Keep clear of already converged neighbours (near-degenerate pairs).
            for (std::size_t m = 0; m < j; ++m) {
                if (std::abs(res.values[m] - res.values[j]) > 1e-7 * scale)
                    continue;
                const auto& u = res.vectors[m];
                const double c = std::inner_product(u.begin(), u.end(), v.begin(), 0.0);
                for (std::size_t i = 0; i < n; ++i)
                    v[i] -= c * u[i];
            }
            normalize(v);
        }
        // Deterministic sign: largest-magnitude component positive.
        const auto big = std::max_element(v.begin(), v.end(),
                                           [](double a, double b) { return std::abs(a) < std::abs(b); });
        if (*big < 0.0)
            for (double& x : v)
                x = -x;
        res.vectors.push_back(std::move(v));
    }
    return res;
}

} // namespace pdmosc
