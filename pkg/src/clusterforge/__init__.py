"""clusterforge: exact-arithmetic quiver mutation, cluster algebras with
principal coefficients, g-vector fans, quivers with potentials, and
triangulated-surface laminations, at desk scale."""

from .quiver import Quiver, mutate, b_matrix, from_b_matrix, canonicalize, mutation_class, restrict

__all__ = [
    "Quiver", "mutate", "b_matrix", "from_b_matrix", "canonicalize",
    "mutation_class", "restrict",
]
