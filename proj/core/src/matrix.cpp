#include "niep/matrix.hpp"

namespace niep {

MatrixQuad to_quad(const MatrixQ& A) {
    const int n = A.dim();
    MatrixQuad B(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) B.at(i, j) = QuadExt(A.at(i, j));
    return B;
}

}  // namespace niep
