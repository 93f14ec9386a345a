#pragma once
#include "glsf/fields.hpp"

namespace glsf {

// Centered second-order difference calculus on the collocated grid, with
// ghost-node boundary closures. The divergence is not stenciled
// independently: it is the exact negative adjoint of the Neumann-closure
// gradient with respect to the trapezoidal inner product, so
//
//     inner(grad(s, neumann), v) + inner(s, div(v)) == 0
//
// holds to roundoff for every scalar s and vector v. Likewise curlcurl2d
// is assembled as R*R where R = curl2d and R* its exact adjoint, and
// graddiv as grad(div(.)). These identities are what make the discrete
// Lyapunov bookkeeping close.
//
// Boundary closures:
//   neumann    : even ghost reflection, normal derivative is exactly 0
//   dirichlet0 : odd ghost reflection, for fields that vanish on the boundary

enum class ScalarBC { neumann, dirichlet0 };

VectorField grad(const ScalarField& s, ScalarBC bc);
ComplexVectorField grad(const ComplexField& s); // order parameter is always Neumann

// exact negative adjoint of grad(., neumann); acts componentwise on complex vectors
ScalarField div(const VectorField& v);
ComplexField div(const ComplexVectorField& v);

// c = dx(v.y) - dy(v.x), centered at interior nodes, c = 0 on the boundary
// (the tangential-curl closure of the vector fields this is applied to).
ScalarField curl2d(const VectorField& v);

// (dy c, -dx c) with dirichlet0 closure. For c vanishing on the boundary this
// coincides with the exact adjoint of curl2d, so curlcurl2d below is R*R.
VectorField perp_grad(const ScalarField& c);

VectorField curlcurl2d(const VectorField& v);
VectorField graddiv(const VectorField& v);

// 5-point Laplacian with ghost closure per bc.
ScalarField laplacian(const ScalarField& s, ScalarBC bc);
ComplexField laplacian(const ComplexField& s); // Neumann

// Composition dx0(dx0 .) + dy0(dy0 .) of the dirichlet0 centered first
// differences. This is exactly the operator -curl2d(perp_grad(.)), used by
// the stream-function Poisson solves so that curl(perp_grad(phi)) = -rhs
// holds to solver tolerance rather than truncation order.
ScalarField laplacian_wide_dirichlet0(const ScalarField& s);

} // namespace glsf
