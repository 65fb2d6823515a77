#ifndef APOLAR_INVERSE_SYSTEMS_HPP
#define APOLAR_INVERSE_SYSTEMS_HPP

#include <vector>

#include "apolar/hilbert.hpp"
#include "apolar/matrix.hpp"
#include "apolar/polynomial.hpp"

namespace apolar {

/// A graded piece of an ideal: homogeneous polynomials of one degree whose
/// span is the piece. Bases produced by kernel_basis are monic with pairwise
/// distinct leading monomials.
struct GradedVectorSpace {
    int degree = 0;
    std::vector<Polynomial> basis;

    size_t dim() const { return basis.size(); }
};

/// Catalecticant matrix of the pairing (f, g) -> (f g) o G between degrees d
/// and e-d: rows labeled by the degree e-d monomials, columns by the degree d
/// monomials, entry = (row * col) o G. G must be homogeneous of degree
/// e >= d.
RationalMatrix catalecticant(const Polynomial& G, int d, const MonomialOrder& order);

/// Kernel of a labeled matrix as polynomials in the column monomials.
GradedVectorSpace kernel_basis(const RationalMatrix& M);

/// Degree-d part of ann(G): kernel_basis(catalecticant(G, d, order)).
GradedVectorSpace ann_graded_piece(const Polynomial& G, int d, const MonomialOrder& order);

/// Leading monomials of the (normalized) basis, descending; one per basis
/// element.
std::vector<Monomial> initial_monomials(const GradedVectorSpace& V, const MonomialOrder& order);

/// Hilbert function of a compressed Gorenstein quotient with socle degree e:
/// min(dim R_i, dim R_{e-i}) in degrees 0..e, reported on 0..e+1.
HilbertFunction compressed_hilbert(int n, int e);

/// Hilbert function of R/ann(G) computed from catalecticant kernels,
/// reported on 0..e+1.
HilbertFunction hilbert_of_ann_quotient(const Polynomial& G, const MonomialOrder& order);

} // namespace apolar

#endif
