"""Sparse normal form for bases of finite-dimensional vector spaces.

The heavy lifting lives in the compiled extension ``_nfbasis``; this package
re-exports its operations. The extension sits inside the package when
pip-installed and on ``sys.path`` when running against a plain CMake build.
"""

try:
    from ._nfbasis import (
        InternalError,
        InvalidInputError,
        NotFullColumnRankError,
        SingularConfigurationError,
        UnsupportedDimensionError,
        __version__,
        common_kernel,
        find_symmetries,
        normal_form,
        nullspace,
        orthogonal_complement_nf,
        pi_groups,
        rank,
        rcef,
        rref,
        snap_rational,
        two_vector_complement_nf,
    )
except ImportError:  # CMake build tree
    from _nfbasis import (  # noqa: F401
        InternalError,
        InvalidInputError,
        NotFullColumnRankError,
        SingularConfigurationError,
        UnsupportedDimensionError,
        __version__,
        common_kernel,
        find_symmetries,
        normal_form,
        nullspace,
        orthogonal_complement_nf,
        pi_groups,
        rank,
        rcef,
        rref,
        snap_rational,
        two_vector_complement_nf,
    )

__all__ = [
    "common_kernel",
    "find_symmetries",
    "normal_form",
    "nullspace",
    "orthogonal_complement_nf",
    "pi_groups",
    "rank",
    "rcef",
    "rref",
    "snap_rational",
    "two_vector_complement_nf",
    "InternalError",
    "InvalidInputError",
    "NotFullColumnRankError",
    "SingularConfigurationError",
    "UnsupportedDimensionError",
    "__version__",
]
