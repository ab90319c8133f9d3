#include <gtest/gtest.h>

#include <cmath>

#include <pdmosc/errors.hpp>
#include <pdmosc/tridiag.hpp>

using namespace pdmosc;

TEST(Tridiag, Small)
{
    const auto one = tridiag_lowest_eigen({2.0}, {}, 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_NEAR(one[0], 2.0, 1e-15);
    const auto v = tridiag_lowest_eigen({2.0, 2.0}, {1.0}, 2);
    ASSERT_EQ(v.size(), 2u);
    EXPECT_NEAR(v[0], 1.0, 1e-15);
    EXPECT_NEAR(v[1], 3.0, 1e-15);
}

TEST(Tridiag, DirichletLaplacian)
{
    const std::size_t n = 500;
    const double h = 0.01;
    std::vector<double> d(n, 2.0 / (h * h));
    std::vector<double> o(n - 1, -1.0 / (h * h));
    const auto v = tridiag_lowest_eigen(d, o, 10);
    for (std::size_t j = 1; j <= 10; ++j) {
        const double exact = 2.0 / (h * h) * (1.0 - std::cos(j * M_PI / (n + 1)));
        // bisection is accurate to eps * ||T|| in absolute terms
        EXPECT_NEAR(v[j - 1], exact, 1e-15 * 8.0 / (h * h)) << j;
    }
}

TEST(Tridiag, EigenvectorsSatisfyEquation)
{
    std::vector<double> d(200), o(199, -0.7);
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = 1.0 + 0.001 * static_cast<double>(i * i);
    const auto r = tridiag_lowest_eigenpairs(d, o, 5);
    for (std::size_t k = 0; k < 5; ++k) {
        const auto& u = r.vectors[k];
        double res = 0.0, nrm = 0.0;
        for (std::size_t i = 0; i < d.size(); ++i) {
            double a = d[i] * u[i];
            if (i > 0)
                a += o[i - 1] * u[i - 1];
            if (i + 1 < d.size())
                a += o[i] * u[i + 1];
            res = std::max(res, std::abs(a - r.values[k] * u[i]));
            nrm += u[i] * u[i];
        }
        EXPECT_LT(res, 1e-10);
        EXPECT_NEAR(nrm, 1.0, 1e-12);
        for (std::size_t j = 0; j < k; ++j) {
            double ip = 0.0;
            for (std::size_t i = 0; i < d.size(); ++i)
                ip += u[i] * r.vectors[j][i];
            EXPECT_NEAR(ip, 0.0, 1e-10);
        }
    }
}

TEST(Tridiag, Errors)
{
    EXPECT_THROW(tridiag_lowest_eigen({1.0, 2.0}, {}, 1), DimensionError);
    EXPECT_THROW(tridiag_lowest_eigen({1.0, 2.0}, {0.5}, 3), DimensionError);
    EXPECT_THROW(tridiag_lowest_eigen({1.0, 2.0}, {0.5}, 0), DimensionError);
    EXPECT_THROW(tridiag_lowest_eigen({}, {}, 1), DimensionError);
}
