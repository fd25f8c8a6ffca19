"""
XY-chain Hamiltonians and the analytic one-excitation eigensystem.

The chain Hamiltonian is

    H = J * sum_n [ (1+g) S^x_n S^x_{n+1} + (1-g) S^y_n S^y_{n+1} ] + B * sum_n S^z_n

with spin operators ``S = sigma/2`` and a periodic boundary. For two sites
the periodic sum visits the single bond twice, which gives the familiar
two-qubit form ``J (s1+ s2- + s2+ s1-) + J g (s1+ s2+ + s1- s2-) + (B/2)(sz1 + sz2)``.
Anisotropy and field are only defined for two sites.

Units: hbar = k_B = 1, energies in units of J.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd

import numpy as np

from .errors import UnsupportedCombination

MAX_SITES = 12


@dataclass(frozen=True)
class ChainSpec:
    n_sites: int
    coupling_j: float = 1.0
    gamma: float = 0.0
    field_b: float = 0.0

    def __post_init__(self):
        if int(self.n_sites) != self.n_sites or self.n_sites < 2:
            raise ValueError(f"n_sites must be an integer >= 2, got {self.n_sites!r}")
        if self.n_sites > MAX_SITES:
            raise ValueError(f"n_sites > {MAX_SITES} is not supported")
        if not 0.0 <= self.gamma <= 1.0:
            raise ValueError(f"gamma must lie in [0, 1], got {self.gamma!r}")

    @property
    def dim(self) -> int:
        return 2**self.n_sites

    @property
    def is_isotropic_free(self) -> bool:
        """True for the field-free isotropic chain (gamma = 0, B = 0)."""
        return self.gamma == 0.0 and self.field_b == 0.0


@dataclass(frozen=True)
class OneExcitationEigen:
    k_index: int
    energy: float
    amplitudes: np.ndarray


def require_isotropic(spec: ChainSpec) -> None:
    if not spec.is_isotropic_free:
        raise UnsupportedCombination(
            "operation is defined only for the isotropic chain without field "
            f"(got gamma={spec.gamma}, B={spec.field_b})"
        )


def site_mask(site: int, n_sites: int) -> int:
    """Bit mask of ``site`` (1-based) in the big-endian basis."""
    return 1 << (n_sites - site)


def bonds(n_sites: int) -> list[tuple[int, int]]:
    """Periodic nearest-neighbour bonds; two sites yield the bond twice."""
    return [(n, n % n_sites + 1) for n in range(1, n_sites + 1)]


def build_hamiltonian(spec: ChainSpec) -> np.ndarray:
    """Dense ``2^N x 2^N`` Hamiltonian assembled from bit flips on basis indices."""
    n = spec.n_sites
    if n > 2 and not spec.is_isotropic_free:
        raise UnsupportedCombination("anisotropy and field are defined only for two sites")
    j, g = spec.coupling_j, spec.gamma
    idx = np.arange(spec.dim)
    h = np.zeros((spec.dim, spec.dim), dtype=complex)
    for a, b in bonds(n):
        ma, mb = site_mask(a, n), site_mask(b, n)
        flipped = idx ^ (ma | mb)
        differ = ((idx & ma) > 0) != ((idx & mb) > 0)
        # S+S- + S-S+ hops one excitation: amplitude J/2
        h[flipped[differ], idx[differ]] += 0.5 * j
        if g:
            # S+S+ + S-S- creates or removes a pair: amplitude J*g/2
            h[flipped[~differ], idx[~differ]] += 0.5 * j * g
    if spec.field_b:
        # sigma^z = diag(+1, -1) on (|0>, |1>), so |00> carries +B
        for site in range(1, n + 1):
            up = (idx & site_mask(site, n)) > 0
            h[idx, idx] += 0.5 * spec.field_b * np.where(up, -1.0, 1.0)
    return h


def one_excitation_index(site: int, n_sites: int) -> int:
    """Basis index of ``sigma_site^+ |0...0>``."""
    return site_mask(site, n_sites)


def embed_one_excitation(b, n_sites: int) -> np.ndarray:
    """Full state ``sum_n b_n sigma_n^+ |0>^N``."""
    b = np.asarray(b, dtype=complex)
    psi = np.zeros(2**n_sites, dtype=complex)
    psi[[one_excitation_index(s, n_sites) for s in range(1, n_sites + 1)]] = b
    return psi


def embed_one_hole(b, n_sites: int) -> np.ndarray:
    """Full state ``sum_n b_n sigma_n^- |1>^N``."""
    b = np.asarray(b, dtype=complex)
    full = 2**n_sites - 1
    psi = np.zeros(2**n_sites, dtype=complex)
    psi[[full ^ site_mask(s, n_sites) for s in range(1, n_sites + 1)]] = b
    return psi


def one_excitation_energies(spec: ChainSpec) -> np.ndarray:
    """``E_k = J cos(2 pi k / N)`` for k = 1..N."""
    k = np.arange(1, spec.n_sites + 1)
    return spec.coupling_j * np.cos(2 * np.pi * k / spec.n_sites)


def one_excitation_spectrum(spec: ChainSpec) -> list[OneExcitationEigen]:
    """Plane-wave eigenstates ``a_{k,n} = exp(2 pi i n k / N)/sqrt(N)`` with their energies."""
    require_isotropic(spec)
    n = spec.n_sites
    sites = np.arange(1, n + 1)
    out = []
    for k, e in zip(range(1, n + 1), one_excitation_energies(spec)):
        amps = np.exp(2j * np.pi * sites * k / n) / np.sqrt(n)
        amps.setflags(write=False)
        out.append(OneExcitationEigen(k, float(e), amps))
    return out


def gap_frequencies(spec: ChainSpec, tol: float = 1e-9) -> np.ndarray:
    """Distinct nonzero ``|E_k - E_k'|`` in the one-excitation sector, ascending."""
    e = one_excitation_energies(spec)
    gaps = np.abs(e[:, None] - e[None, :]).ravel()
    gaps = np.sort(gaps[gaps > tol])
    distinct: list[float] = []
    for g in gaps:
        if not distinct or g - distinct[-1] > tol:
            distinct.append(float(g))
    return np.array(distinct)


def _rational(x: float, tol: float, max_denominator: int) -> Fraction | None:
    frac = Fraction(x).limit_denominator(max_denominator)
    return frac if abs(float(frac) - x) <= tol * max(1.0, abs(x)) else None


def fundamental_frequency(
    spec: ChainSpec, tol: float = 1e-9, max_denominator: int = 64
) -> float | None:
    """
    Largest frequency of which every gap is an integer multiple.

    Returns ``None`` when some gap ratio is not rational with denominator at
    most ``max_denominator`` (within ``tol``), i.e. when no common period exists.
    """
    require_isotropic(spec)
    gaps = gap_frequencies(spec, tol)
    if gaps.size == 0:
        return None
    base = gaps[0]
    fracs = []
    for g in gaps:
        frac = _rational(g / base, tol, max_denominator)
        if frac is None:
            return None
        fracs.append(frac)
    lcm = reduce(lambda x, y: x * y // gcd(x, y), (f.denominator for f in fracs), 1)
    multiples = [f.numerator * (lcm // f.denominator) for f in fracs]
    common = reduce(gcd, multiples)
    return float(base * common / lcm)


def frequency_ratio_rationality(spec: ChainSpec, tol: float = 1e-9) -> bool:
    """Whether all ratios of one-excitation gap frequencies are rational."""
    require_isotropic(spec)
    return fundamental_frequency(spec, tol) is not None
