"""Class-level checks of the hypotheses used to control Frobenius on R_w in type 2A.

In type A_{n-1} the multiplicity of the unipotent character rho_lam in the
Deligne-Lusztig character R_w is chi_lam(w).  The graph automorphism acts on
W = S_n as conjugation by the longest element w0 (i -> n+1-i), whose cycle
type is 2^(n//2) 1^(n%2).  Orbits are handled per conjugacy class only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapabilityError
from .groups import GroupDescriptor
from .oracle import MAX_COMMUTE_N, commuting_types_exist
from .partitions import Partition
from .weyl import chi_sym

MAX_RECURSION_N = 30


@dataclass(frozen=True)
class FrobHypothesisReport:
    class_label: Partition
    multiplicity: int
    orbit_length: int
    sigma_stable_orbit: bool
    d: int
    delta: int

    @property
    def hypotheses_satisfied(self) -> bool:
        return (self.orbit_length == self.delta and self.sigma_stable_orbit
                and self.multiplicity % self.d != 0)

    def to_line(self) -> str:
        return (f"class={self.class_label} multiplicity={self.multiplicity} "
                f"orbit_length={self.orbit_length} "
                f"sigma_stable={'true' if self.sigma_stable_orbit else 'false'} "
                f"satisfied={'true' if self.hypotheses_satisfied else 'false'}")


def longest_element_type(n: int) -> Partition:
    return Partition((2,) * (n // 2) + (1,) * (n % 2))


def dl_multiplicity_typeA(lam, mu) -> int:
    lam, mu = Partition.of(lam), Partition.of(mu)
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    if lam.size > MAX_RECURSION_N:
        raise CapabilityError(f"n <= {MAX_RECURSION_N} supported")
    return chi_sym(lam, mu)


def sigma_fixed_in_class(mu) -> bool:
    """Whether some element of cycle type mu commutes with w0."""
    mu = Partition.of(mu)
    if mu.size > MAX_COMMUTE_N:
        raise CapabilityError(f"exhaustive search limited to n <= {MAX_COMMUTE_N}")
    return commuting_types_exist(mu, longest_element_type(mu.size))


def verify_frob_hypotheses(g: GroupDescriptor, lam, mu) -> FrobHypothesisReport:
    if g.series != "2A":
        raise ValueError("hypothesis verification is implemented for series 2A")
    lam, mu = Partition.of(lam), Partition.of(mu)
    if lam.size != g.n or mu.size != g.n:
        raise ValueError(f"label and class must be partitions of {g.n}")
    mult = dl_multiplicity_typeA(lam, mu)
    # F acts on W as sigma up to an inner twist: at class level the orbit has
    # length delta exactly when no conjugate of w is sigma-fixed
    orbit = 1 if sigma_fixed_in_class(mu) else g.delta
    return FrobHypothesisReport(mu, mult, orbit, True, g.sigma_order, g.delta)
