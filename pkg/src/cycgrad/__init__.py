"""Cyclic derivatives, cyclic gradients and commutator decompositions in Q<X_1,...,X_n>."""

from .algebra import (
    AlgebraContext,
    GradientVec,
    Poly,
    TensorPoly,
    add,
    bimodule_act,
    flip_multiply,
    homogeneous_component,
    mul,
    scale,
)
from .calculus import (
    cyclic_derivative,
    cyclic_gradient,
    cyclic_symmetrize,
    number_operator,
    partial_diff,
    theta,
)
from .errors import (
    ArityMismatchError,
    ContextMismatchError,
    CycGradError,
    FormatError,
    IndexOutOfRangeError,
    InternalConsistencyError,
    NotAGradientError,
    NotInKernelError,
    ParseError,
)
from .exactness import ExactnessReport, exactness_witness
from .expr_io import deserialize, parse_poly, print_poly, serialize
from .solver import (
    CyclicClassKey,
    GradientCertificate,
    KernelDecomposition,
    anti_gradient,
    canonical_rotation,
    check_gradient,
    in_kernel,
    is_cyclic,
    kernel_decompose,
)

__version__ = "0.1.0"
