#pragma once

#include <cstddef>
#include <vector>

namespace pdmosc {

struct TridiagEigen {
    std::vector<double> values;                // ascending
    std::vector<std::vector<double>> vectors;  // unit 2-norm, paired with values
};

// k smallest eigenvalues of the symmetric tridiagonal matrix (diag, offdiag),
// by Sturm-sequence bisection. Throws DimensionError on bad sizes.
std::vector<double> tridiag_lowest_eigen(const std::vector<double>& diag,
                                         const std::vector<double>& offdiag,
                                         std::size_t k);

// Same, with eigenvectors from inverse iteration.
TridiagEigen tridiag_lowest_eigenpairs(const std::vector<double>& diag,
                                       const std::vector<double>& offdiag,
                                       std::size_t k);

} // namespace pdmosc
