"""
Root System Builders

Construction and validation of reduced root systems.

Built-in families:
- A_{N-1}: e_i - e_j in R^N (Dyson-type processes)
- B_N: +-e_i +- e_j and +-e_i in R^N (Wishart-Laguerre-type processes)
- I_2(m): the 2m unit roots of the dihedral group in the plane

Anything else goes through build_custom(), which runs the full validation
chain: degenerate roots -> duplicates -> reducedness -> closure ->
multiplicity invariance -> normalization -> positive subsystem.
"""

import itertools
import logging
from typing import List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from rootsys.constants import (
    KAPPA_NORMALIZATION,
    KAPPA_TOLERANCE,
    POSITIVE_CHOICE_MAX_TRIES,
    POSITIVE_CHOICE_MIN_DOT,
    POSITIVE_CHOICE_SEED,
    ROOT_CLOSURE_TOLERANCE,
    ROOT_DEDUP_TOLERANCE,
    KappaNormalization,
    RootFamily,
    ValidationStatus,
)
from rootsys.models.root_system import (
    ClosureError,
    DegenerateRootError,
    MultiplicityError,
    NotReducedError,
    RootSystem,
    RootSystemError,
)
from rootsys.utils.linalg_utils import (
    as_vector,
    dedupe_rows,
    find_row,
    reflection_matrix,
    span_and_complement,
)

logger = logging.getLogger(__name__)

# Multiplicities may be given as one value, one value per root, or a
# mapping from root tuples to values
KappaSpec = Union[float, Sequence[float], Mapping[Tuple[float, ...], float]]


# =============================================================================
# REFLECTIONS
# =============================================================================


def reflect(alpha: Sequence[float], x: Sequence[float]) -> np.ndarray:
    """
    Reflect x through the hyperplane orthogonal to alpha.

    sigma_alpha x = x - 2 (alpha . x / alpha . alpha) alpha

    Args:
        alpha: Nonzero root vector
        x: Vector to reflect (same dimension as alpha)

    Returns:
        Reflected vector

    Raises:
        DegenerateRootError: If alpha is zero or dimensions differ
    """
    alpha = as_vector(alpha)
    x = as_vector(x)
    if alpha.shape != x.shape:
        raise DegenerateRootError(
            f"Dimension mismatch: root has {alpha.size}, vector has {x.size}"
        )
    norm_sq = float(alpha.dot(alpha))
    if norm_sq == 0.0:
        raise DegenerateRootError("degenerate root")
    return x - 2.0 * (alpha.dot(x) / norm_sq) * alpha


def _reflect_rows(alpha: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Reflect every row of `rows` through alpha"""
    return rows - 2.0 * np.outer(rows @ alpha / alpha.dot(alpha), alpha)


# =============================================================================
# VALIDATION STEPS
# =============================================================================


def _as_root_array(
    roots: Sequence[Sequence[float]], ambient_dim: Optional[int]
) -> np.ndarray:
    """Convert the root list to an (n, N) array, rejecting degenerate input"""
    try:
        array = np.asarray(roots, dtype=np.float64)
    except ValueError as e:
        raise DegenerateRootError(f"Roots have mismatched dimensions: {e}") from e

    if array.ndim != 2 or array.shape[0] == 0:
        raise DegenerateRootError("Root list must be a nonempty list of vectors")
    if ambient_dim is not None and array.shape[1] != ambient_dim:
        raise DegenerateRootError(
            f"Roots live in R^{array.shape[1]}, expected R^{ambient_dim}"
        )
    if not np.all(np.isfinite(array)):
        raise DegenerateRootError("Roots contain non-finite entries")
    if np.any(np.linalg.norm(array, axis=1) <= ROOT_DEDUP_TOLERANCE):
        raise DegenerateRootError("degenerate root")
    return array


def _as_kappa_array(kappa: KappaSpec, roots: np.ndarray) -> np.ndarray:
    """Align the multiplicity specification with the rows of `roots`"""
    if isinstance(kappa, Mapping):
        keys = np.asarray(list(kappa.keys()), dtype=np.float64)
        values = np.asarray(list(kappa.values()), dtype=np.float64)
        aligned = np.empty(roots.shape[0])
        for i, root in enumerate(roots):
            index = find_row(root, keys, ROOT_DEDUP_TOLERANCE)
            if index < 0:
                raise MultiplicityError(
                    f"No multiplicity given for root {root.tolist()}"
                )
            aligned[i] = values[index]
        return aligned

    values = np.asarray(kappa, dtype=np.float64)
    if values.ndim == 0:
        return np.full(roots.shape[0], float(values))
    if values.shape != (roots.shape[0],):
        raise MultiplicityError(
            f"Got {values.size} multiplicities for {roots.shape[0]} roots"
        )
    return values


def _check_reduced(roots: np.ndarray) -> None:
    """Only +-1 multiples of a root may appear in the list"""
    norms = np.linalg.norm(roots, axis=1)
    cosines = (roots @ roots.T) / np.outer(norms, norms)
    parallel = np.abs(np.abs(cosines) - 1.0) <= ROOT_DEDUP_TOLERANCE
    np.fill_diagonal(parallel, False)
    for i, j in zip(*np.nonzero(parallel)):
        ratio = norms[i] / norms[j]
        if abs(ratio - 1.0) > ROOT_DEDUP_TOLERANCE:
            raise NotReducedError(
                f"not reduced: {roots[i].tolist()} = {ratio:g} x {roots[j].tolist()}"
            )


def _check_closed(roots: np.ndarray) -> None:
    """sigma_alpha R = R for every alpha in R"""
    scale = max(1.0, float(np.abs(roots).max()))
    tolerance = ROOT_CLOSURE_TOLERANCE * scale
    for alpha in roots:
        for image in _reflect_rows(alpha, roots):
            # Rounding in the reflection grows with the root lengths
            if find_row(image, roots, tolerance * 10.0) < 0:
                raise ClosureError(
                    f"Reflection of a root through {alpha.tolist()} gives "
                    f"{image.tolist()}, which is not a root"
                )


def _check_kappa(roots: np.ndarray, kappa: np.ndarray) -> None:
    """kappa is nonnegative and constant on reflection orbits"""
    if np.any(kappa < 0.0):
        raise MultiplicityError(
            f"Multiplicities must be nonnegative, got {kappa.min():g}"
        )
    if np.all(kappa == 0.0):
        raise MultiplicityError("All multiplicities are zero")

    for alpha in roots:
        for i, image in enumerate(_reflect_rows(alpha, roots)):
            j = find_row(image, roots, ROOT_DEDUP_TOLERANCE * 10.0)
            if abs(kappa[i] - kappa[j]) > KAPPA_TOLERANCE * max(1.0, abs(kappa[i])):
                raise MultiplicityError(
                    f"kappa is not W-invariant: kappa({roots[i].tolist()}) = "
                    f"{kappa[i]:g} but kappa({roots[j].tolist()}) = {kappa[j]:g}"
                )

    if np.any(kappa == 0.0):
        logger.warning(
            "Some multiplicities are zero; the matching walls carry no log term"
        )


# =============================================================================
# ORBITS, NORMALIZATION, POSITIVE SUBSYSTEM
# =============================================================================


def root_orbits(roots: Sequence[Sequence[float]]) -> List[np.ndarray]:
    """
    Split a root list into orbits of its Weyl group.

    Each orbit is a multiplicity class: a W-invariant kappa is constant on it.

    Args:
        roots: Closed root list, one root per row

    Returns:
        List of index arrays into `roots`, ordered by first index
    """
    roots = np.asarray(roots, dtype=np.float64)
    label = np.full(roots.shape[0], -1, dtype=int)
    orbits: List[np.ndarray] = []

    for start in range(roots.shape[0]):
        if label[start] >= 0:
            continue
        label[start] = len(orbits)
        members = [start]
        frontier = [start]
        while frontier:
            images = np.vstack(
                [_reflect_rows(alpha, roots[frontier]) for alpha in roots]
            )
            frontier = []
            for image in images:
                index = find_row(image, roots, ROOT_DEDUP_TOLERANCE * 10.0)
                if index >= 0 and label[index] < 0:
                    label[index] = len(orbits)
                    members.append(index)
                    frontier.append(index)
        orbits.append(np.asarray(sorted(members), dtype=int))

    return orbits


def normalize_kappa(
    roots: Sequence[Sequence[float]],
    kappa: Sequence[float],
    rule: Union[str, KappaNormalization] = KAPPA_NORMALIZATION,
) -> Tuple[np.ndarray, float]:
    """
    Rescale multiplicities so that at least one root has kappa = 1.

    When some kappa already equals 1 nothing changes. Otherwise every
    multiplicity is divided by the kappa of the reference orbit picked by
    `rule`, and the factor is returned so callers can absorb it into beta
    (beta * kappa is what enters the dynamics).

    Args:
        roots: Root list, one root per row
        kappa: Multiplicities aligned with `roots`
        rule: "longest", "shortest" or "none"

    Returns:
        Tuple of (normalized kappa, beta rescaling factor)

    Raises:
        MultiplicityError: If no kappa equals 1 and rule is "none"
    """
    rule = KappaNormalization(rule)
    roots = np.asarray(roots, dtype=np.float64)
    kappa = np.asarray(kappa, dtype=np.float64)

    if np.any(np.abs(kappa - 1.0) <= KAPPA_TOLERANCE):
        return kappa.copy(), 1.0

    if rule == KappaNormalization.NONE:
        raise MultiplicityError(
            "No multiplicity equals 1 and kappa normalization is disabled"
        )

    candidates = np.nonzero(kappa > 0.0)[0]
    norms = np.linalg.norm(roots[candidates], axis=1)
    if rule == KappaNormalization.LONGEST:
        reference = candidates[int(np.argmax(norms))]
    else:
        reference = candidates[int(np.argmin(norms))]

    factor = float(kappa[reference])
    logger.info(
        f"Normalizing kappa by {factor:g} ({rule.value} orbit); "
        f"couplings given for the original kappa are multiplied by {factor:g}"
    )
    return kappa / factor, factor


def positive_subsystem(
    roots: Sequence[Sequence[float]],
    m: Optional[Sequence[float]] = None,
    rng: Optional[np.random.Generator] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Choose a positive subsystem R_+ = {alpha : m . alpha > 0}.

    Args:
        roots: Root list, one root per row
        m: Explicit choice vector (must satisfy |m . alpha| >= 1e-8 for all
           roots); drawn at random when omitted
        rng: Random generator for the draw (seeded default when omitted)

    Returns:
        Tuple of (indices of positive roots, choice vector m)

    Raises:
        RootSystemError: If m is not admissible, or no admissible m was found
    """
    roots = np.asarray(roots, dtype=np.float64)

    if m is not None:
        m = as_vector(m)
        dots = roots @ m
        if np.any(np.abs(dots) < POSITIVE_CHOICE_MIN_DOT):
            raise RootSystemError(
                f"Choice vector {m.tolist()} is orthogonal to a root"
            )
        return np.nonzero(dots > 0.0)[0], m

    rng = rng if rng is not None else np.random.default_rng(POSITIVE_CHOICE_SEED)
    for attempt in range(POSITIVE_CHOICE_MAX_TRIES):
        candidate = rng.standard_normal(roots.shape[1])
        dots = roots @ candidate
        if np.all(np.abs(dots) >= POSITIVE_CHOICE_MIN_DOT):
            logger.debug(f"Positive subsystem chosen after {attempt + 1} draw(s)")
            return np.nonzero(dots > 0.0)[0], candidate

    raise RootSystemError(
        f"No admissible choice vector after {POSITIVE_CHOICE_MAX_TRIES} draws"
    )


# =============================================================================
# SCHUR SUM
# =============================================================================


def schur_sum(system: RootSystem) -> np.ndarray:
    """Sum over R_+ of kappa(alpha) alpha alpha^T / |alpha|^2 (N x N)"""
    alphas = system.positive_roots
    weights = system.positive_kappa / np.einsum("ij,ij->i", alphas, alphas)
    return (alphas * weights[:, None]).T @ alphas


def schur_residual(system: RootSystem) -> float:
    """
    Largest entrywise deviation of the Schur sum from (gamma/d_R) I on Span(R).

    Zero (up to rounding) for irreducible systems, and for reducible ones
    whose components share the ratio gamma_i / d_i.
    """
    restricted = system.span_basis @ schur_sum(system) @ system.span_basis.T
    target = (system.gamma / system.rank) * np.eye(system.rank)
    return float(np.abs(restricted - target).max())


def schur_is_scalar(system: RootSystem, tolerance: float = 1e-12) -> bool:
    """True when the Schur sum is (gamma/d_R) times the identity on Span(R)"""
    return schur_residual(system) <= tolerance


# =============================================================================
# BUILDERS
# =============================================================================


def build_custom(
    roots: Sequence[Sequence[float]],
    kappa: KappaSpec = 1.0,
    positive_choice: Optional[Sequence[float]] = None,
    family: RootFamily = RootFamily.CUSTOM,
    name: str = "custom",
    ambient_dim: Optional[int] = None,
    normalization: Union[str, KappaNormalization] = KAPPA_NORMALIZATION,
    rng: Optional[np.random.Generator] = None,
) -> RootSystem:
    """
    Validate a root list and multiplicity map and build a RootSystem.

    Args:
        roots: Full root list R, one root per row
        kappa: Multiplicities (scalar, per-root list, or root -> value map)
        positive_choice: Vector m selecting R_+ (random when omitted)
        family: Family tag stored on the result
        name: Display name
        ambient_dim: Expected N (inferred from the roots when omitted)
        normalization: Rule used when no kappa equals 1
        rng: Random generator for the positive choice

    Returns:
        Validated RootSystem

    Raises:
        DegenerateRootError: Zero root or mismatched dimensions
        NotReducedError: Two roots are parallel with ratio other than +-1
        ClosureError: R is not closed under its own reflections
        MultiplicityError: kappa negative, not W-invariant, or not normalizable
    """
    array = _as_root_array(roots, ambient_dim)
    kappa_values = _as_kappa_array(kappa, array)

    unique, kept = dedupe_rows(array, ROOT_DEDUP_TOLERANCE)
    if unique.shape[0] < array.shape[0]:
        logger.debug(f"Dropped {array.shape[0] - unique.shape[0]} duplicate root(s)")
    array, kappa_values = unique, kappa_values[kept]

    _check_reduced(array)
    _check_closed(array)
    _check_kappa(array, kappa_values)
    kappa_values, beta_scale = normalize_kappa(array, kappa_values, normalization)

    positive_idx, m = positive_subsystem(array, positive_choice, rng)
    span_basis, perp_basis = span_and_complement(array, array.shape[1])

    system = RootSystem(
        ambient_dim=int(array.shape[1]),
        roots=array,
        kappa=kappa_values,
        positive_roots=array[positive_idx],
        positive_kappa=kappa_values[positive_idx],
        choice_vector=m,
        span_basis=span_basis,
        perp_basis=perp_basis,
        family=family,
        name=name,
        beta_scale=beta_scale,
    )
    logger.debug(f"Built {system!r}")
    return system


def build_a(n_particles: int) -> RootSystem:
    """
    Build A_{N-1} = {e_i - e_j : i != j} in R^N with kappa = 1.

    Args:
        n_particles: N >= 2

    Returns:
        RootSystem with d_R = N - 1 and gamma = N(N-1)/2
    """
    if n_particles < 2:
        raise RootSystemError(f"A_(N-1) needs N >= 2 particles, got {n_particles}")

    eye = np.eye(n_particles)
    pairs = itertools.permutations(range(n_particles), 2)
    roots = [eye[i] - eye[j] for i, j in pairs]
    # m = (N, N-1, ..., 1) makes e_i - e_j positive for i < j
    choice = np.arange(n_particles, 0, -1, dtype=np.float64)
    return build_custom(
        roots,
        kappa=1.0,
        positive_choice=choice,
        family=RootFamily.A,
        name=f"A_{n_particles - 1}",
    )


def build_b(n: int, nu: float = 0.5) -> RootSystem:
    """
    Build B_N = {+-e_i +- e_j (i < j), +-e_i} in R^N.

    kappa(e_i +- e_j) = 1 and kappa(e_i) = (2 nu + 1)/2. For B_1 there is a
    single orbit, so its multiplicity is forced to 1 whatever nu is.

    Args:
        n: N >= 1
        nu: Bessel index, nu > -1 (nu >= -1/2 keeps kappa nonnegative)

    Returns:
        RootSystem with d_R = N and gamma = N(N-1) + N(2 nu + 1)/2
    """
    if n < 1:
        raise RootSystemError(f"B_N needs N >= 1, got {n}")
    if nu <= -1.0:
        raise MultiplicityError(f"Bessel index nu = {nu:g} out of range (nu > -1)")
    if nu < -0.5:
        raise MultiplicityError(
            f"nu = {nu:g} gives a negative short-root multiplicity"
        )

    eye = np.eye(n)
    short_kappa = (2.0 * nu + 1.0) / 2.0
    roots: List[np.ndarray] = []
    kappa: List[float] = []
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1.0, -1.0):
                for sj in (1.0, -1.0):
                    roots.append(si * eye[i] + sj * eye[j])
                    kappa.append(1.0)
        for s in (1.0, -1.0):
            roots.append(s * eye[i])
            kappa.append(short_kappa)

    if n == 1:
        logger.info(f"B_1 has a single orbit; kappa forced to 1 (nu = {nu:g})")
        kappa = [1.0, 1.0]

    # m = (N, N-1, ..., 1) makes e_i +- e_j (i < j) and e_i positive
    choice = np.arange(n, 0, -1, dtype=np.float64)
    return build_custom(
        roots,
        kappa=kappa,
        positive_choice=choice,
        family=RootFamily.B,
        name=f"B_{n}",
    )


def build_dihedral(
    m: int,
    kappa_a: float = 1.0,
    kappa_b: Optional[float] = None,
) -> RootSystem:
    """
    Build the dihedral system I_2(m): 2m unit roots at angles k pi / m.

    For even m the roots split into two orbits (even and odd k) which may
    carry different multiplicities; for odd m there is a single orbit.

    Args:
        m: Order of the rotation subgroup, m >= 2
        kappa_a: Multiplicity of the even-k orbit
        kappa_b: Multiplicity of the odd-k orbit (defaults to kappa_a)
    """
    if m < 2:
        raise RootSystemError(f"I_2(m) needs m >= 2, got {m}")

    angles = np.arange(2 * m) * np.pi / m
    roots = np.column_stack([np.cos(angles), np.sin(angles)])
    if kappa_b is None:
        kappa_b = kappa_a
    if m % 2 == 1 and kappa_b != kappa_a:
        logger.warning(f"I_2({m}) has a single orbit; kappa_b={kappa_b:g} ignored")
        kappa_b = kappa_a
    kappa = np.where(np.arange(2 * m) % 2 == 0, kappa_a, kappa_b)

    # Halfway between the first two roots is never orthogonal to a root
    theta = np.pi / (4.0 * m)
    choice = np.array([np.cos(theta), np.sin(theta)])
    return build_custom(
        roots,
        kappa=kappa,
        positive_choice=choice,
        family=RootFamily.DIHEDRAL,
        name=f"I_2({m})",
    )


# =============================================================================
# VALIDATION
# =============================================================================


def validate(
    roots: Sequence[Sequence[float]],
    kappa: KappaSpec = 1.0,
    normalization: Union[str, KappaNormalization] = KAPPA_NORMALIZATION,
) -> Tuple[ValidationStatus, Optional[str]]:
    """
    Check a root list without raising.

    Returns:
        Tuple of (ValidationStatus, error_message)

    Example:
        status, error = validate([[1, 0], [-1, 0], [2, 0], [-2, 0]])
        # (ValidationStatus.NOT_REDUCED, "not reduced: ...")
    """
    try:
        build_custom(roots, kappa=kappa, normalization=normalization)
    except DegenerateRootError as e:
        return ValidationStatus.DEGENERATE, str(e)
    except NotReducedError as e:
        return ValidationStatus.NOT_REDUCED, str(e)
    except ClosureError as e:
        return ValidationStatus.NOT_CLOSED, str(e)
    except MultiplicityError as e:
        return ValidationStatus.KAPPA_INVALID, str(e)
    except RootSystemError as e:
        return ValidationStatus.MALFORMED, str(e)
    return ValidationStatus.VALID, None


__all__ = [
    "build_a",
    "build_b",
    "build_custom",
    "build_dihedral",
    "normalize_kappa",
    "positive_subsystem",
    "reflect",
    "reflection_matrix",
    "root_orbits",
    "schur_is_scalar",
    "schur_residual",
    "schur_sum",
    "validate",
]
