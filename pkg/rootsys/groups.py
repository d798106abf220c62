"""
Weyl Group Closure

Breadth-first generation of the Weyl group from root reflections, and
orbit expansion of single points (which needs no group enumeration).
"""

import logging
from typing import Optional

import numpy as np
from scipy.spatial import cKDTree

from rootsys.constants import WEYL_GROUP_CAP, WEYL_HASH_DECIMALS
from rootsys.models.root_system import GroupTooLargeError, RootSystem
from rootsys.models.weyl_group import WeylGroup
from rootsys.utils.linalg_utils import matrix_key, reflection_matrix

logger = logging.getLogger(__name__)


def weyl_group(
    system: RootSystem,
    cap: int = WEYL_GROUP_CAP,
    decimals: int = WEYL_HASH_DECIMALS,
) -> WeylGroup:
    """
    Close the set of root reflections under composition.

    Elements are deduplicated by hashing their entries rounded to
    `decimals` places.

    Args:
        system: Validated root system
        cap: Maximum number of elements before giving up
        decimals: Rounding used for the hash keys

    Returns:
        WeylGroup with the identity first

    Raises:
        GroupTooLargeError: If the closure exceeds `cap` elements
    """
    generators = [reflection_matrix(alpha) for alpha in system.positive_roots]
    identity = np.eye(system.ambient_dim)

    elements = [identity]
    seen = {matrix_key(identity, decimals)}
    frontier = [identity]

    while frontier:
        next_frontier = []
        for g in frontier:
            for s in generators:
                h = s @ g
                key = matrix_key(h, decimals)
                if key in seen:
                    continue
                seen.add(key)
                elements.append(h)
                next_frontier.append(h)
                if len(elements) > cap:
                    raise GroupTooLargeError(
                        f"group too large: more than {cap} elements for {system.name}"
                    )
        frontier = next_frontier

    logger.debug(f"Weyl group of {system.name}: {len(elements)} elements")
    return WeylGroup(elements=np.asarray(elements), system_name=system.name)


def orbit_points(
    system: RootSystem,
    x: np.ndarray,
    cap: int = WEYL_GROUP_CAP,
    decimals: Optional[int] = None,
) -> np.ndarray:
    """
    W-orbit of a point, generated by repeatedly reflecting through R_+.

    Args:
        system: Validated root system
        x: Starting point
        cap: Maximum orbit size
        decimals: Rounding used to merge coincident images
                  (defaults to WEYL_HASH_DECIMALS)

    Returns:
        (k, N) array of distinct orbit points, x first

    Raises:
        GroupTooLargeError: If the orbit exceeds `cap` points
    """
    decimals = WEYL_HASH_DECIMALS if decimals is None else decimals
    alphas = system.positive_roots
    coefficients = 2.0 / np.einsum("ij,ij->i", alphas, alphas)

    x = np.asarray(x, dtype=np.float64)
    points = [x]
    seen = {(np.round(x, decimals) + 0.0).tobytes()}
    frontier = x[None, :]

    while frontier.shape[0] > 0:
        # images[k, a] = sigma_a frontier[k]
        dots = frontier @ alphas.T
        steps = (dots * coefficients)[:, :, None] * alphas[None, :, :]
        images = frontier[:, None, :] - steps
        fresh = []
        for image in images.reshape(-1, x.size):
            key = (np.round(image, decimals) + 0.0).tobytes()
            if key in seen:
                continue
            seen.add(key)
            fresh.append(image)
        if len(points) + len(fresh) > cap:
            raise GroupTooLargeError(f"group too large: orbit exceeds {cap} points")
        points.extend(fresh)
        frontier = np.asarray(fresh).reshape(-1, x.size)

    points_array = np.asarray(points)
    # Images straddling a rounding boundary hash apart; merge them here
    merge_radius = 10.0 ** (-decimals)
    duplicates = {j for _, j in cKDTree(points_array).query_pairs(merge_radius)}
    if duplicates:
        keep = [i for i in range(len(points_array)) if i not in duplicates]
        points_array = points_array[keep]
    return points_array
